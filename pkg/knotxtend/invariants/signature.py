# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Signature from the Goeritz matrix of a checkerboard surface.
# Author: knotxtend developers
#
# License: BSD 3 clause

import warnings

import networkx as nx
import numpy as np

from ..diagram import regions
from ..math import integer_det, symmetric_signature
from ..utils.errors import SplitDiagram


def checkerboard(diagram):
    """Shade the regions of a connected diagram.

    Returns
    ----------
    (region_map, shaded) : (RegionMap, set)
        `shaded` holds the region ids of the color class containing the
        region on the left of the smallest edge label.

    """
    rm = regions(diagram)
    color = nx.bipartite.color(rm.dual_graph())
    first = color[rm.edge_regions(min(diagram.edges))[0]]
    return rm, set(r for r, col in color.items() if col == first)


def goeritz(diagram):
    """Goeritz matrix and correction term of the shaded surface.

    At crossing c, eta(c) is -1 when the shaded corners are the A-corners
    (1 and 3) and +1 otherwise. A crossing is of type II when the
    oriented smoothing joins the shaded corners.

    Returns
    ----------
    (G, mu) : (numpy.ndarray, int)
        G is the Goeritz matrix on the unshaded regions with the first
        one deleted, mu the sum of eta over type II crossings.

    """
    rm, shaded = checkerboard(diagram)
    white = sorted(r for r in range(rm.count) if r not in shaded)
    pos = {r: i for i, r in enumerate(white)}
    full = np.zeros((len(white), len(white)), dtype=np.int64)
    mu = 0
    for c in range(diagram.num_crossings):
        corners = rm.corners(c)
        a_shaded = corners[1] in shaded
        eta = -1 if a_shaded else 1
        if a_shaded == (diagram.signs[c] > 0):
            mu += eta
        u = (0, 2) if a_shaded else (1, 3)
        i, j = pos[corners[u[0]]], pos[corners[u[1]]]
        if i != j:
            full[i, j] -= eta
            full[j, i] -= eta
    for i in range(len(white)):
        full[i, i] = -(full[i].sum() - full[i, i])
    return full[1:, 1:], mu


def signature(diagram):
    """Signature, normalized so that positive knots have positive
    signature.

    Parameters
    ----------
    diagram : Diagram
        Knot or link diagram with connected projection.

    Returns
    ----------
    sigma : int

    Examples
    -----------
    >>> from knotxtend.diagram import parse_dt
    >>> signature(parse_dt('4 6 2'))
    2

    """
    if not diagram.crossings:
        if diagram.free_loops > 1:
            raise SplitDiagram('The unlink of %d components is split.'
                               % diagram.free_loops)
        return 0
    if not diagram.is_connected():
        raise SplitDiagram('The diagram projection is split into %d pieces.'
                           % (len(diagram.connected_parts())
                              + diagram.free_loops))
    G, mu = goeritz(diagram)
    G = G.tolist()
    if integer_det(G) == 0:
        warnings.warn('The determinant vanishes; the signature of links'
                      ' with zero determinant is not normalized.')
    return symmetric_signature(G) - mu
