# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Vertex and ray data of the convex hull of the Conway polynomials of
# alternating knots of a given genus.
# Author: knotxtend developers
#
# License: BSD 3 clause

from fractions import Fraction
from math import gcd

from ..diagram import canonical_dt, format_dt, seifert_state
from ..file_io import read_vformat, write_vformat
from ..invariants import signature
from ..math import convex_hull, facet_inequalities
from ..utils.errors import DimensionMismatch
from .series import series_decomposition


def _primitive(vector):
    g = 0
    for v in vector:
        g = gcd(g, abs(int(v)))
    return tuple(Fraction(int(v) // g) for v in vector) if g else None


class PolytopeData(object):

    """V-representation of the Conway coefficient polytope.

    Points are vectors ([Nabla]_2, [Nabla]_4, ..., [Nabla]_2g) normalized
    by the sign of [Nabla]_2g. The polytope is the Minkowski sum of the
    convex hull of `vertices` and the cone spanned by `rays`.

    Attributes
    ----------
    genus : int
    sigma : int or None
        Absolute signature filter used to select the generators.
    vertices : list of tuple of Fraction
        Normalized Conway vectors of the generators.
    rays : list of tuple of Fraction
        Primitive directions of the series terms.
    sources : list of str
        Canonical DT codes of the generators used.
    interval : (Fraction, Fraction) or None
        For genus 2, the range of [Nabla]_2 / [Nabla]_4 over rays with a
        nonzero last entry.
    hull : list of (Fraction, Fraction) or None
        For genus 3, the hull of ([Nabla]_2 / [Nabla]_6,
        [Nabla]_4 / [Nabla]_6) over rays with a nonzero last entry.
    facets : list of (int, int, int) or None
        Inequalities a*x + b*y <= c of `hull`.

    """
    def __init__(self, genus, sigma, vertices, rays, sources):
        self.genus = genus
        self.sigma = sigma
        self.vertices = vertices
        self.rays = rays
        self.sources = sources
        self.interval = None
        self.hull = None
        self.facets = None
        tops = [r for r in rays if r[-1] != 0]
        if genus == 2 and tops:
            ratios = [r[0] / r[1] for r in tops]
            self.interval = (min(ratios), max(ratios))
        elif genus == 3 and tops:
            self.hull = convex_hull((r[0] / r[2], r[1] / r[2]) for r in tops)
            self.facets = facet_inequalities(self.hull)

    @property
    def dimension(self):
        return self.genus

    @classmethod
    def read(cls, path):
        """Polytope data from a V-format file written by `polytope_export`."""
        vertices, rays = read_vformat(path)
        genus = len((vertices or rays)[0])
        return cls(genus, None, vertices, rays, [])

    def to_dict(self):
        def row(v):
            return [str(x) for x in v]
        return {'genus': self.genus, 'sigma': self.sigma,
                'vertices': [row(v) for v in self.vertices],
                'rays': [row(r) for r in self.rays],
                'sources': list(self.sources)}

    def __eq__(self, other):
        return (isinstance(other, PolytopeData)
                and self.genus == other.genus
                and self.vertices == other.vertices
                and self.rays == other.rays)

    def __repr__(self):
        return 'PolytopeData(genus=%d, vertices=%d, rays=%d)' % (
            self.genus, len(self.vertices), len(self.rays))


def polytope_export(genus, generators, sigma=None, path=None, cap=20):
    """Collect vertices and rays of the Conway polytope of genus `genus`.

    Parameters
    ----------
    genus : int
    generators : iterable of Diagram
        Generator diagrams of genus `genus`.
    sigma : int (default: None)
        Only keep generators with |signature| = |sigma|.
    path : str (default: None)
        When given, the V-representation is written there (see
        `knotxtend.file_io.write_vformat`).
    cap : int (default: 20)
        Crossing cap of the skein polynomial.

    Returns
    ----------
    data : PolytopeData

    Examples
    -----------
    >>> from knotxtend.data import trefoil, figure_eight
    >>> polytope_export(1, [trefoil(), figure_eight()]).vertices
    [(Fraction(1, 1),)]

    """
    vertices, rays, sources = [], [], []
    for d in generators:
        g = seifert_state(d).genus
        if g != genus:
            raise DimensionMismatch('Generator %s has genus %d, expected %d.'
                                    % (format_dt(canonical_dt(d)), g, genus))
        if sigma is not None and abs(signature(d)) != abs(sigma):
            continue
        sd = series_decomposition(d, check=0, cap=cap)
        own = sd.conway_terms[0]
        s = 1 if own.coeff(2 * genus) > 0 else -1
        v = tuple(Fraction(own.coeff(k) * s)
                  for k in range(2, 2 * genus + 1, 2))
        if v not in vertices:
            vertices.append(v)
        for nabla in sd.conway_terms[1:]:
            r = _primitive([nabla.coeff(k) * s
                            for k in range(2, 2 * genus + 1, 2)])
            if r is not None and r not in rays:
                rays.append(r)
        sources.append(format_dt(canonical_dt(d)))
    data = PolytopeData(genus, sigma, sorted(vertices), sorted(rays),
                        sources)
    if path is not None:
        write_vformat(data.vertices, data.rays, path,
                      comment='genus %d sigma %s' % (genus, sigma))
    return data
