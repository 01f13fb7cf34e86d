"""Monge-Ampère identity in exponential coordinates.

A potential ``u = log P(e^x)`` with ``P = sum a_I y^I`` solves
``det D^2 u = e^(-u)`` (Einstein constant normalized to 2) exactly when the
polynomial identity ``det M = P^(2n - 1)`` holds, where

    M_ab = (P P_ab - P_a P_b) y_a + P P_a delta_ab

and subscripts denote partial derivatives in ``y``. Row ``a`` carries the
factor ``y_a``, so ``M`` isn't symmetric.
"""

import logging
from collections import namedtuple
from fractions import Fraction

import numpy as np

from . import linalg
from .poly import determinant
from .polytope import facets_of
from .errors import ZeroConstantTerm, NegativeCoefficient

log = logging.getLogger(__name__)

SYMBOLIC = 'symbolic'
SAMPLED = 'sampled'

#: Sample coordinates are drawn from ``[1, SAMPLE_MAX]``.
SAMPLE_MAX = 2 ** 32


class MAMatrix(object):
    """ The matrix ``M`` of a polynomial, possibly truncated.

    :param source: The polynomial ``P``.
    :param truncation: Total degree the entries are known up to, or
           ``None``.
    """

    def __init__(self, source, truncation=None):
        self._source = source
        self._truncation = truncation
        n = source.nvars
        inner = None if truncation is None else truncation - 1
        first = [source.partial_derivative(a) for a in range(n)]
        rows = []
        for a in range(n):
            row = []
            for b in range(n):
                hessian = first[a].partial_derivative(b)
                entry = source.mul(hessian, inner).add(-first[a].mul(first[b], inner), inner).shift(a)
                if a == b:
                    entry = entry.add(source.mul(first[a], truncation), truncation)
                row.append(entry)
            rows.append(row)
        self._entries = rows

    def __getitem__(self, position):
        a, b = position
        return self._entries[a][b]

    def __len__(self):
        return len(self._entries)

    @property
    def source(self):
        return self._source

    @property
    def truncation(self):
        return self._truncation

    @property
    def rows(self):
        return [list(row) for row in self._entries]

    def determinant(self):
        return determinant(self._entries, self._truncation)


def ma_matrix(P, truncation=None):
    return MAMatrix(P, truncation)


def residual(P, truncation=None):
    """ ``det M - P^(2n - 1)``, truncated at ``truncation`` when given. """
    n = P.nvars
    matrix = MAMatrix(P, truncation)
    return matrix.determinant().add(-P.pow(2 * n - 1, truncation), truncation)


class Verification(namedtuple('Verification', ['solution', 'mode', 'certificate', 'trials', 'degree_bound'])):
    """ Outcome of :func:`verify_solution`, truthy when the identity holds.

    ``certificate`` is a point where the residual doesn't vanish (sampled
    mode only). ``degree_bound`` bounds the total degree of the residual; with
    ``trials`` agreeing samples a false positive has probability at most
    ``(degree_bound / 2^32)^trials``.
    """

    __slots__ = ()

    def __bool__(self):
        return bool(self.solution)

    def to_json(self):
        return {
            'solution': self.solution,
            'mode': self.mode,
            'certificate': None if self.certificate is None else [int(x) for x in self.certificate],
            'trials': self.trials,
            'degree_bound': self.degree_bound,
        }


def _check_candidate(P):
    if not P.is_parameter_free():
        raise ValueError('Can only verify parameter-free polynomials')
    if P.coefficient((0,) * P.nvars) == 0:
        raise ZeroConstantTerm('Polynomial {} has no constant term'.format(P))


def _residual_at(P, point):
    """ Exact residual value at a point with positive coordinates, using
    ``y_a P_a = sum I_a a_I y^I`` and the analogous formula for second
    derivatives. """
    n = P.nvars
    terms = []
    for m, c in P.items():
        value = c
        for x, power in zip(point, m):
            if power:
                value *= x ** power
        terms.append((m, value))
    value = sum(t for _, t in terms)
    gradient = [sum(m[a] * t for m, t in terms) / point[a] for a in range(n)]
    hessian = [[sum(m[a] * (m[b] - (a == b)) * t for m, t in terms) / (point[a] * point[b])
                for b in range(n)] for a in range(n)]
    matrix = [[(value * hessian[a][b] - gradient[a] * gradient[b]) * point[a] + (value * gradient[a] if a == b else 0)
               for b in range(n)] for a in range(n)]
    return linalg.det(matrix) - value ** (2 * n - 1)


def sample_points(n, trials, seed):
    """ ``trials`` points with coordinates in ``[1, 2^32]``, each drawn from
    its own generator spawned from ``seed``. """
    children = np.random.SeedSequence(seed).spawn(trials)
    points = []
    for child in children:
        rng = np.random.default_rng(child)
        points.append(tuple(Fraction(int(x)) for x in rng.integers(1, SAMPLE_MAX, size=n, endpoint=True)))
    return points


def verify_solution(P, mode=SYMBOLIC, trials=20, seed=1):
    """ Check ``det M == P^(2n - 1)`` for a parameter-free polynomial.

    In symbolic mode the untruncated residual is expanded, which is
    practical up to dimension 3. In sampled mode the residual is evaluated
    exactly at pseudo random positive integer points; one nonzero value
    disproves the identity.

    :param P: A :class:`~mapoly.poly.PolyQ`.
    :param mode: ``'symbolic'`` or ``'sampled'``.
    :return: A :class:`Verification`.
    """
    _check_candidate(P)
    n = P.nvars
    degree_bound = (2 * n - 1) * P.degree
    if mode == SYMBOLIC:
        if n > 3:
            log.warning('Symbolic verification in dimension {} may take very long'.format(n))
        holds = residual(P).is_zero()
        log.info('Symbolic verification of degree {} polynomial in {} variables: {}'.format(P.degree, n, holds))
        return Verification(holds, SYMBOLIC, None, 0, degree_bound)
    if mode != SAMPLED:
        raise ValueError('Unknown verification mode {}'.format(mode))
    if trials < 1:
        raise ValueError('Sampled verification needs at least one trial')
    for index, point in enumerate(sample_points(n, trials, seed)):
        if _residual_at(P, point) != 0:
            log.info('Residual does not vanish at sample {}: {}'.format(index, point))
            return Verification(False, SAMPLED, point, index + 1, degree_bound)
    log.info('Residual vanishes at {} samples (seed {})'.format(trials, seed))
    return Verification(True, SAMPLED, None, trials, degree_bound)


def support_polytope(P):
    """ Convex hull of the exponent vectors of ``P`` shifted by
    ``(-1, ..., -1)``: the closure of the gradient image of ``log P(e^x)``.
    """
    _check_candidate(P)
    negative = [m for m, c in P.items() if c < 0]
    if negative:
        raise NegativeCoefficient('Negative coefficients at {}'.format([tuple(m) for m in negative]))
    return facets_of([tuple(e - 1 for e in m) for m in P.monomials()])


def support_bijection(P):
    """ Whether every lattice point of :func:`support_polytope` corresponds
    to a nonzero coefficient of ``P``. """
    support = set(tuple(m) for m in P.monomials())
    polytope = support_polytope(P)
    missing = [p for p in polytope.lattice_points if tuple(x + 1 for x in p) not in support]
    if missing:
        log.info('Lattice points without coefficient: {}'.format(missing))
    return not missing
