# knotxtend developers 2024-2026
# knotxtend Knot Diagram Calculus Extensions
#
# Exact linear algebra over the integers and GF(2).
# Author: knotxtend developers
#
# License: BSD 3 clause

import numpy as np
import sympy


def integer_det(matrix):
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    m = sympy.Matrix(matrix)
    if m.shape[0] == 0:
        return 1
    return int(m.det(method='bareiss'))


def det_mod2(matrix):
    """Determinant modulo 2 by Gaussian elimination over GF(2).

    Parameters
    ----------
    matrix : array-like, shape=[n, n]
        Integer matrix.

    Returns
    ----------
    det : int
        0 or 1.

    """
    if len(matrix) == 0:
        return 1
    a = np.array(matrix, dtype=np.int64).reshape(len(matrix), -1) % 2
    a = a.astype(np.uint8)
    n = a.shape[0]
    for col in range(n):
        pivots = np.nonzero(a[col:, col])[0]
        if len(pivots) == 0:
            return 0
        p = col + pivots[0]
        if p != col:
            a[[col, p]] = a[[p, col]]
        rows = np.nonzero(a[:, col])[0]
        for r in rows:
            if r != col:
                a[r] ^= a[col]
    return 1


def symmetric_inertia(matrix):
    """Numbers of positive, negative and zero eigenvalues, exactly.

    The characteristic polynomial of a symmetric matrix has only real
    roots, so Descartes' rule of signs counts them exactly.
    """
    m = sympy.Matrix(matrix)
    n = m.shape[0]
    if n == 0:
        return 0, 0, 0
    lam = sympy.Symbol('lam')
    coeffs = [int(c) for c in sympy.Poly(m.charpoly(lam).as_expr(),
                                          lam).all_coeffs()]
    zero = 0
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
        zero += 1
    pos = _descartes(coeffs)
    flipped = [c * (-1) ** (len(coeffs) - 1 - i) for i, c in enumerate(coeffs)]
    neg = _descartes(flipped)
    return pos, neg, zero


def _descartes(coeffs):
    nonzero = [c for c in coeffs if c]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a > 0) != (b > 0))


def symmetric_signature(matrix):
    """Signature (positive minus negative eigenvalues) of a symmetric
    integer matrix."""
    pos, neg, _ = symmetric_inertia(matrix)
    return pos - neg


def polynomial_det(matrix, symbol):
    """Determinant of a matrix of sympy polynomials in `symbol`."""
    m = sympy.Matrix(matrix)
    if m.shape[0] == 0:
        return sympy.Integer(1)
    return sympy.expand(m.det(method='berkowitz'))
