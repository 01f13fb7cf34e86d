"""Edge relations and the coefficient template of a candidate polytope.

For a reflexive polytope with ``(-1, ..., -1)`` as a vertex, a polynomial
solution restricted to the coordinate axis ``i`` must be
``(1 + t/k_i)^k_i``, and its derivative along ``j`` restricted to the same
axis must be ``(1 + t/k_i)^h_ij``. Here ``k_i`` is the lattice length of the
edge of the polytope leaving the base vertex along axis ``i``, and ``h_ij``
is bounded by the lattice length of the parallel segment through
``(-1, ..., -1) + e_j``. The numbers must satisfy two relations:

* rel1: the off-diagonal row sum of ``H`` equals ``k_i (n - 2) + 2``;
* rel2: ``h_ij / k_i == h_ji / k_j``.

Axes are numbered from 0.
"""

import logging
import math
from collections import namedtuple
from fractions import Fraction

from scipy.special import comb

from .poly import Monomial, Coefficient, ParamPoly, PolyQ
from .errors import MissingBaseVertex, InconsistentConstraints

log = logging.getLogger(__name__)

#: Names of the two relations, as reported by obstructions.
REL1 = 'rel1'
REL2 = 'rel2'


class KHProfile(namedtuple('KHProfile', ['k', 'H'])):
    """ Vector ``k`` and matrix ``H`` (tuple of rows) of the edge relations. """

    __slots__ = ()

    def __new__(cls, k, H):
        return super().__new__(cls, tuple(int(x) for x in k), tuple(tuple(int(x) for x in row) for row in H))

    @property
    def dim(self):
        return len(self.k)

    def rel1_target(self, i):
        return self.k[i] * (self.dim - 2) + 2

    def satisfies_rel1(self):
        return all(sum(self.H[i][j] for j in range(self.dim) if j != i) == self.rel1_target(i)
                   for i in range(self.dim))

    def satisfies_rel2(self):
        return all(self.H[i][j] * self.k[j] == self.H[j][i] * self.k[i]
                   for i in range(self.dim) for j in range(self.dim))

    def to_json(self):
        return {'k': list(self.k), 'H': [list(row) for row in self.H]}


def _base_vertex(polytope):
    base = (Fraction(-1),) * polytope.dim
    if base not in polytope.vertices:
        raise MissingBaseVertex('{} does not have (-1, ..., -1) as a vertex'.format(polytope))
    return base


def _max_step(polytope, start, axis):
    """ Largest integer ``t`` with ``start + t e_axis`` in the polytope. """
    bounds = []
    for row, rhs in polytope.facets:
        if row[axis] > 0:
            slack = rhs - sum(a * x for a, x in zip(row, start))
            bounds.append(math.floor(slack / row[axis]))
    return min(bounds)


def axis_lengths(polytope):
    """ Lattice lengths ``k`` of the edges leaving the base vertex
    ``(-1, ..., -1)`` along the coordinate axes.

    :param polytope: A reflexive :class:`~mapoly.polytope.Polytope`.
    :return: Tuple of ``n`` positive integers.
    """
    base = _base_vertex(polytope)
    return tuple(_max_step(polytope, base, i) for i in range(polytope.dim))


def h_max(polytope):
    """ Matrix of the largest admissible ``h_ij``: the lattice length of the
    segment through ``(-1, ..., -1) + e_j`` parallel to axis ``i``. """
    base = _base_vertex(polytope)
    n = polytope.dim
    result = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(0)
                continue
            start = list(base)
            start[j] += 1
            row.append(max(0, _max_step(polytope, start, i)))
        result.append(tuple(row))
    return tuple(result)


def _search(k, bound):
    """ All ``H`` with ``0 <= H <= bound`` satisfying rel1 and rel2. """
    n = len(k)
    targets = [k[i] * (n - 2) + 2 for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    H = [[0] * n for _ in range(n)]
    found = []

    def remaining_capacity(i, position):
        return sum(bound[a][b] if a == i else bound[b][a]
                   for a, b in pairs[position:] if i in (a, b))

    def row_ok(i, position):
        current = sum(H[i])
        return current <= targets[i] <= current + remaining_capacity(i, position)

    def step(position):
        if position == len(pairs):
            if all(sum(H[i]) == targets[i] for i in range(n)):
                found.append(KHProfile(k, H))
            return
        i, j = pairs[position]
        for value in range(bound[i][j] + 1):
            # rel2 fixes the transposed entry
            other = Fraction(value * k[j], k[i])
            if other.denominator != 1 or other > bound[j][i]:
                continue
            H[i][j], H[j][i] = value, int(other)
            if row_ok(i, position + 1) and row_ok(j, position + 1):
                step(position + 1)
        H[i][j] = H[j][i] = 0

    if all(row_ok(i, 0) for i in range(n)):
        step(0)
    return found


def kh_feasible(polytope):
    """ All profiles ``(k, H)`` compatible with the geometry of the polytope.

    ``k`` is fixed by :func:`axis_lengths`; every integer matrix ``H`` between
    zero and :func:`h_max` satisfying both relations is returned. Profiles
    with ``H`` below its maximum are logged as warnings.

    :return: List of :class:`KHProfile`.
    """
    k = axis_lengths(polytope)
    bound = h_max(polytope)
    profiles = _search(k, bound)
    for profile in profiles:
        if profile.H != bound:
            log.warning('Profile {} of {} does not attain h_max {}'.format(profile, polytope, bound))
    log.info('{} admits {} (k, H) profiles'.format(polytope, len(profiles)))
    return profiles


def failed_relation(polytope):
    """ Which relation rules the polytope out: :data:`REL1` when some row of
    :func:`h_max` can't reach its rel1 target, otherwise :data:`REL2`.
    ``None`` when :func:`kh_feasible` finds a profile. """
    k = axis_lengths(polytope)
    bound = h_max(polytope)
    if _search(k, bound):
        return None
    n = polytope.dim
    for i in range(n):
        if sum(bound[i]) < k[i] * (n - 2) + 2:
            return REL1
    return REL2


def _binomial_value(top, m, k):
    return Fraction(comb(top, m, exact=True), k ** m)


def _parameter_name(monomial):
    return 'a({})'.format(','.join(str(e) for e in monomial))


class AnsatzTemplate(object):
    """ Coefficient family ``P = sum a_I y^I`` over the index set
    ``I = lattice points + 1``.

    Coefficients on the axes and on the lines one step off the axes are
    fixed by the profile; every other coefficient is a free parameter,
    numbered in graded order of its index. Indices of vertex images must end
    up strictly positive.

    The template is normally obtained from :func:`build_template`.
    """

    def __init__(self, polytope, profile, fixed):
        self._polytope = polytope
        self._profile = profile
        self._indices = sorted(Monomial(tuple(x + 1 for x in p)) for p in polytope.lattice_points)
        self._fixed = dict(fixed)
        self._free = [m for m in self._indices if m not in self._fixed]
        self._positive = sorted(Monomial(tuple(int(x) + 1 for x in v)) for v in polytope.vertices)
        self._parameter_of = {m: i for i, m in enumerate(self._free)}

    def __str__(self):
        return 'AnsatzTemplate({} indices, {} fixed, {} free)'.format(
            len(self._indices), len(self._fixed), len(self._free))

    @property
    def polytope(self):
        return self._polytope

    @property
    def profile(self):
        return self._profile

    @property
    def dim(self):
        return self._polytope.dim

    @property
    def indices(self):
        return list(self._indices)

    @property
    def fixed(self):
        """ Dictionary index monomial to rational value. """
        return dict(self._fixed)

    @property
    def free(self):
        """ Free index monomials; the parameter number is the list position. """
        return list(self._free)

    @property
    def positive_required(self):
        return list(self._positive)

    @property
    def degree_bound(self):
        return max(m.degree for m in self._indices)

    @property
    def parameter_names(self):
        return [_parameter_name(m) for m in self._free]

    def parameter_index(self, monomial):
        return self._parameter_of[Monomial(monomial)]

    def polynomial(self, assignment=None, truncation=None):
        """ The template as a :class:`ParamPoly`, free coefficients as
        parameters unless given in ``assignment`` (parameter number to
        value). """
        assignment = assignment or {}
        terms = {}
        for m in self._indices:
            if truncation is not None and m.degree > truncation:
                continue
            if m in self._fixed:
                terms[m] = self._fixed[m]
            else:
                index = self._parameter_of[m]
                terms[m] = assignment[index] if index in assignment else Coefficient.parameter(index)
        result = ParamPoly(self.dim, terms, truncation)
        return result.substitute({}) if result.is_parameter_free() else result

    def admits(self, candidate):
        """ Whether a parameter-free polynomial belongs to the family: same
        fixed values, support within the index set, nonnegative free
        coefficients and positive vertex coefficients. """
        support = set(candidate.monomials())
        if not support <= set(self._indices):
            return False
        for m, value in self._fixed.items():
            if candidate.coefficient(m) != value:
                return False
        if any(candidate.coefficient(m) < 0 for m in self._free):
            return False
        return all(candidate.coefficient(m) > 0 for m in self._positive)

    def to_json(self):
        return {
            'polytope': self._polytope.to_json(),
            'k': list(self._profile.k),
            'H': [list(row) for row in self._profile.H],
            'fixed': [[list(m), str(v)] for m, v in sorted(self._fixed.items())],
            'free': [list(m) for m in self._free],
            'positive_required': [list(m) for m in self._positive],
        }


def build_template(polytope, profile):
    """ Coefficient template of ``polytope`` for one admissible profile.

    Fixes ``a_{m e_i} = C(k_i, m) / k_i^m`` and
    ``a_{m e_i + e_j} = C(h_ij, m) / k_i^m``; indices on those lines beyond
    the binomial range are fixed to zero.

    :raises InconsistentConstraints: When an index gets two different values
            or a nonzero value outside the index set.
    """
    n = polytope.dim
    k, H = profile.k, profile.H
    indices = set(Monomial(tuple(x + 1 for x in p)) for p in polytope.lattice_points)
    fixed = {}

    def fix(exponents, value):
        m = Monomial(exponents)
        if m not in indices:
            if value != 0:
                raise InconsistentConstraints('Index {} outside the polytope would get value {}'.format(
                    tuple(m), value))
            return
        if m in fixed and fixed[m] != value:
            raise InconsistentConstraints('Index {} gets values {} and {}'.format(tuple(m), fixed[m], value))
        fixed[m] = value

    def unit(i):
        return tuple(int(a == i) for a in range(n))

    fix((0,) * n, Fraction(1))
    for i in range(n):
        fix(unit(i), Fraction(1))
    for i in range(n):
        for m in range(k[i] + 1):
            fix(tuple(m * x for x in unit(i)), _binomial_value(k[i], m, k[i]))
        for j in range(n):
            if j == i:
                continue
            m = 0
            while True:
                exponents = tuple(m * x + y for x, y in zip(unit(i), unit(j)))
                if m <= H[i][j]:
                    fix(exponents, _binomial_value(H[i][j], m, k[i]))
                elif Monomial(exponents) in indices:
                    fix(exponents, Fraction(0))
                else:
                    break
                m += 1
    template = AnsatzTemplate(polytope, profile, fixed)
    log.info('Built {} for {} with profile k={}'.format(template, polytope, profile.k))
    return template


def simplex_solution(n):
    """ The solution ``(1 + (y1 + ... + yn) / (n + 1))^(n + 1)`` supported on
    the standard reflexive simplex. """
    if n < 1:
        raise ValueError('Dimension must be positive, got {}'.format(n))
    terms = {(0,) * n: 1}
    for i in range(n):
        terms[tuple(int(a == i) for a in range(n))] = Fraction(1, n + 1)
    return PolyQ(n, terms).pow(n + 1)


def product_solution(first, second):
    """ Product of two solutions on disjoint blocks of variables, ``first``
    taking the leading ones. """
    nvars = first.nvars + second.nvars
    return first.embed(nvars, 0).mul(second.embed(nvars, first.nvars))
