""" Exact linear algebra over the rationals.

Matrices are passed around as lists of rows holding
:class:`fractions.Fraction` (or int) entries. Elimination, determinants and
inverses are delegated to FLINT's :class:`flint.fmpq_mat`; the results are
handed back as Fractions so callers never see FLINT types.
"""

from fractions import Fraction
from math import gcd

from flint import fmpq, fmpq_mat


def to_fractions(matrix):
    return [[Fraction(x) for x in row] for row in matrix]


def _fmpq(x):
    x = Fraction(x)
    return fmpq(x.numerator, x.denominator)


def _fraction(x):
    return Fraction(int(x.p), int(x.q))


def _to_flint(matrix):
    rows = len(matrix)
    cols = len(matrix[0])
    m = fmpq_mat(rows, cols)
    for i, row in enumerate(matrix):
        for j, x in enumerate(row):
            if x != 0:
                m[i, j] = _fmpq(x)
    return m


def _from_flint(m):
    return [[_fraction(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]


def _pivots(rows, count):
    return [next(j for j, x in enumerate(row) if x != 0) for row in rows[:count]]


def rref(matrix):
    """ Reduced row echelon form.

    :param matrix: List of rows. Not modified.
    :return: Tuple ``(rows, pivots)``, ``pivots`` holding the pivot column of
             each nonzero row. Zero rows stay at the bottom of ``rows``.
    """
    if not matrix or not matrix[0]:
        return to_fractions(matrix), []
    reduced, count = _to_flint(matrix).rref()
    rows = _from_flint(reduced)
    return rows, _pivots(rows, count)


def row_reduce(matrix):
    """ Reduced row echelon form together with the row operations producing it.

    :return: Tuple ``(rows, transform, pivots)`` with
             ``matmul(transform, matrix) == rows`` and ``transform``
             invertible; row ``i`` of ``transform`` says which combination of
             input rows gives reduced row ``i``.
    """
    count = len(matrix)
    width = len(matrix[0])
    augmented = [list(row) + [int(i == k) for k in range(count)] for i, row in enumerate(matrix)]
    # Pivots found in the identity block only combine rows that are already
    # zero on the left, so the left block stays the plain rref.
    rows, pivots = rref(augmented)
    return [row[:width] for row in rows], [row[width:] for row in rows], [p for p in pivots if p < width]


def rank(matrix):
    if not matrix or not matrix[0]:
        return 0
    return _to_flint(matrix).rref()[1]


def det(matrix):
    if not matrix:
        return Fraction(1)
    return _fraction(_to_flint(matrix).det())


def solve(matrix, rhs):
    """ Unique solution of a square system, ``None`` when singular. """
    column = fmpq_mat(len(rhs), 1)
    for i, b in enumerate(rhs):
        column[i, 0] = _fmpq(b)
    try:
        x = _to_flint(matrix).solve(column)
    except ZeroDivisionError:
        return None
    return [_fraction(x[i, 0]) for i in range(len(rhs))]


def inverse(matrix):
    try:
        return _from_flint(_to_flint(matrix).inv())
    except ZeroDivisionError:
        return None


def nullspace(matrix, cols=None):
    """ Basis of the right kernel.

    :param cols: Number of columns, needed when ``matrix`` has no rows.
    """
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(cols)] for i in range(cols)]
    cols = len(matrix[0])
    reduced, pivots = rref(matrix)
    basis = []
    for f in (c for c in range(cols) if c not in pivots):
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def affine_rank(points):
    """ Dimension of the affine hull of a point set (``-1`` when empty). """
    if not points:
        return -1
    base = points[0]
    return rank([[x - y for x, y in zip(p, base)] for p in points[1:]])


def lcm(a, b):
    return a * b // gcd(a, b)


def primitive(vector):
    """ Scale a rational vector to the primitive integer vector with the same
    direction.

    :return: Tuple ``(ints, factor)`` with ``ints == factor * vector``.
    """
    vector = [Fraction(x) for x in vector]
    den = 1
    for x in vector:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in vector]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError('Zero vector has no primitive form')
    return [x // g for x in ints], Fraction(den, g)


def integer_gcd(values):
    g = 0
    for x in values:
        g = gcd(g, int(x))
    return g
