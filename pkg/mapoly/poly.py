""" Sparse multivariate polynomials over the rationals.

A :class:`ParamPoly` maps exponent vectors of the main variables
``y1, ..., yn`` to coefficients which are themselves sparse polynomials
(:class:`Coefficient`) in a separate alphabet of parameters ``a0, a1, ...``.
A :class:`PolyQ` is a :class:`ParamPoly` whose coefficients are plain
rationals.

Polynomials may be *truncated* at a total degree ``D`` in the main variables:
terms of higher degree are dropped as soon as they show up, which is what
keeps the graded obstruction engine cheap. Parameter degrees are never
truncated.

Axes are numbered from 0 throughout the API, the textual representation
prints them from 1 (``y1``, ``y2``, ...).
"""

import functools
import logging
from fractions import Fraction

from .errors import VariableCountMismatch, TruncatedEvaluation

log = logging.getLogger(__name__)


def _min_truncation(*values):
    values = [v for v in values if v is not None]
    return min(values) if values else None


@functools.lru_cache(maxsize=1 << 16)
def _merge(first, second):
    """ Product of two parameter monomials, each a sorted tuple of
    ``(index, exponent)`` pairs. """
    if not first:
        return second
    if not second:
        return first
    powers = dict(first)
    for index, exponent in second:
        powers[index] = powers.get(index, 0) + exponent
    return tuple(sorted(powers.items()))


def _accumulate(target, first, second, factor=1):
    for k1, v1 in first.items():
        for k2, v2 in second.items():
            k = _merge(k1, k2)
            target[k] = target.get(k, 0) + factor * v1 * v2


def _clean_coefficient(raw):
    return {k: Fraction(v) for k, v in raw.items() if v != 0}


def _clean(terms):
    result = {}
    for exponents, raw in terms.items():
        raw = _clean_coefficient(raw)
        if raw:
            result[exponents] = raw
    return result


class Monomial(tuple):
    """ Exponent vector of a monomial in the main variables.

    Monomials compare in graded order: total degree first, then the
    exponent tuple lexicographically. Hashing and equality are those of the
    underlying tuple, so a :class:`Monomial` can look up a plain tuple key.
    """

    def __new__(cls, exponents):
        exponents = tuple(int(e) for e in exponents)
        if any(e < 0 for e in exponents):
            raise ValueError('Negative exponent in {}'.format(exponents))
        return super().__new__(cls, exponents)

    @property
    def degree(self):
        return sum(self)

    def key(self):
        return self.degree, tuple(self)

    def __lt__(self, other):
        return self.key() < Monomial(other).key()

    def __le__(self, other):
        return self.key() <= Monomial(other).key()

    def __gt__(self, other):
        return self.key() > Monomial(other).key()

    def __ge__(self, other):
        return self.key() >= Monomial(other).key()

    __hash__ = tuple.__hash__

    def __str__(self):
        parts = []
        for i, e in enumerate(self):
            if e == 1:
                parts.append('y{}'.format(i + 1))
            elif e > 1:
                parts.append('y{}^{}'.format(i + 1, e))
        return '*'.join(parts) or '1'

    def __repr__(self):
        return 'Monomial({})'.format(tuple(self))

    @staticmethod
    def all_up_to(nvars, degree):
        """ All monomials in ``nvars`` variables of total degree at most
        ``degree``, in graded order. """
        result = []

        def compositions(total, slots):
            if slots == 1:
                yield (total,)
                return
            for first in range(total, -1, -1):
                for rest in compositions(total - first, slots - 1):
                    yield (first,) + rest

        for d in range(degree + 1):
            result.extend(Monomial(e) for e in compositions(d, nvars))
        return sorted(result)


class Coefficient(object):
    """ Polynomial over the rationals in the parameters ``a0, a1, ...``.

    Parameter monomials are sorted tuples of ``(index, exponent)`` pairs; the
    empty tuple is the constant term.
    """

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, Coefficient):
            terms = terms._terms
        elif not isinstance(terms, dict):
            terms = {(): terms}
        self._terms = _clean_coefficient(terms)

    @staticmethod
    def parameter(index):
        return Coefficient({((index, 1),): 1})

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def is_constant(self):
        return all(k == () for k in self._terms)

    @property
    def constant(self):
        """ The parameter-free part. """
        return self._terms.get((), Fraction(0))

    @property
    def parameters(self):
        return sorted(set(i for k in self._terms for i, _ in k))

    @property
    def degree(self):
        return max((sum(e for _, e in k) for k in self._terms), default=0)

    def linear_form(self):
        """ ``(coefficients, constant)`` with ``coefficients`` mapping a
        parameter index to its rational factor, or ``None`` when the
        coefficient isn't affine-linear. """
        if self.degree > 1:
            return None
        coefficients = {k[0][0]: v for k, v in self._terms.items() if k}
        return coefficients, self.constant

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Coefficient(other)
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __add__(self, other):
        other = other if isinstance(other, Coefficient) else Coefficient(other)
        result = dict(self._terms)
        for k, v in other._terms.items():
            result[k] = result.get(k, 0) + v
        return Coefficient(result)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-(other if isinstance(other, Coefficient) else Coefficient(other)))

    def __mul__(self, other):
        other = other if isinstance(other, Coefficient) else Coefficient(other)
        result = {}
        _accumulate(result, self._terms, other._terms)
        return Coefficient(result)

    __rmul__ = __mul__

    def substitute(self, assignment):
        """ Replace the parameters found in ``assignment`` (index to value). """
        result = {}
        for k, v in self._terms.items():
            kept = []
            for index, exponent in k:
                if index in assignment:
                    v = v * Fraction(assignment[index]) ** exponent
                else:
                    kept.append((index, exponent))
            kept = tuple(kept)
            result[kept] = result.get(kept, 0) + v
        return Coefficient(result)

    def evaluate(self, assignment):
        remaining = self.substitute(assignment)
        if not remaining.is_constant():
            raise ValueError('No value for parameters {}'.format(remaining.parameters))
        return remaining.constant

    def to_sympy(self, symbols):
        """ The coefficient as a sympy expression, ``symbols`` indexed by
        parameter. """
        import sympy
        expression = sympy.Integer(0)
        for k, v in self._terms.items():
            term = sympy.Rational(v.numerator, v.denominator)
            for index, exponent in k:
                term *= symbols[index] ** exponent
            expression += term
        return expression

    def _monomial_name(self, key, names):
        parts = []
        for index, exponent in key:
            name = names[index] if names else 'a{}'.format(index)
            parts.append(name if exponent == 1 else '{}^{}'.format(name, exponent))
        return '*'.join(parts) or '1'

    def to_json(self, names=None):
        """ Nested representation ``{parameter monomial: 'p/q'}``. """
        return {self._monomial_name(k, names): str(v) for k, v in sorted(self._terms.items())}

    def format(self, names=None):
        if not self._terms:
            return '0'
        return ' + '.join('{}*{}'.format(v, self._monomial_name(k, names)) if k else str(v)
                          for k, v in sorted(self._terms.items()))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return 'Coefficient({})'.format(self.format())


def _as_raw(value):
    if isinstance(value, Coefficient):
        return dict(value._terms)
    if isinstance(value, dict):
        return dict(value)
    return {(): Fraction(value)}


class ParamPoly(object):
    """ Sparse polynomial in ``nvars`` main variables with parameter
    dependent coefficients.

    :param nvars: Number of main variables.
    :param terms: Mapping of exponent vectors to coefficients (numbers or
           :class:`Coefficient`).
    :param truncation: Total degree ``D`` the polynomial is known up to, or
           ``None`` when exact.
    """

    def __init__(self, nvars, terms=None, truncation=None):
        self._nvars = nvars
        self._truncation = truncation
        raw = {}
        for exponents, value in (terms or {}).items():
            exponents = Monomial(exponents)
            if len(exponents) != nvars:
                raise VariableCountMismatch('Monomial {} in polynomial of {} variables'.format(
                    tuple(exponents), nvars))
            if truncation is not None and exponents.degree > truncation:
                continue
            raw[tuple(exponents)] = _as_raw(value)
        self._terms = _clean(raw)

    @classmethod
    def _raw(cls, nvars, terms, truncation):
        instance = cls.__new__(cls)
        instance._nvars = nvars
        instance._truncation = truncation
        instance._terms = terms
        return instance

    @classmethod
    def constant(cls, nvars, value=1):
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars, index):
        exponents = [0] * nvars
        exponents[index] = 1
        return cls(nvars, {tuple(exponents): 1})

    @staticmethod
    def parameter(nvars, index):
        return ParamPoly(nvars, {(0,) * nvars: Coefficient.parameter(index)})

    @property
    def nvars(self):
        return self._nvars

    @property
    def truncation(self):
        return self._truncation

    @property
    def degree(self):
        return max((sum(e) for e in self._terms), default=0)

    @property
    def parameters(self):
        return sorted(set(i for raw in self._terms.values() for k in raw for i, _ in k))

    def is_zero(self):
        return not self._terms

    def is_parameter_free(self):
        return all(k == () for raw in self._terms.values() for k in raw)

    def terms(self):
        """ ``(Monomial, Coefficient)`` pairs in graded order. """
        return [(Monomial(e), Coefficient(self._terms[e])) for e in sorted(self._terms, key=lambda e: (sum(e), e))]

    def monomials(self):
        return [m for m, _ in self.terms()]

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            return NotImplemented
        return self._nvars == other._nvars and self._terms == other._terms

    __hash__ = None

    def __str__(self):
        if not self._terms:
            return '0'
        parts = []
        for m, c in self.terms():
            if c.is_constant():
                value = c.constant
                parts.append(str(value) if m.degree == 0 else
                             str(m) if value == 1 else '{}*{}'.format(value, m))
            else:
                parts.append('({})'.format(c) if m.degree == 0 else '({})*{}'.format(c, m))
        text = ' + '.join(parts)
        if self._truncation is not None:
            text += ' + O(deg {})'.format(self._truncation + 1)
        return text

    def __repr__(self):
        return '{}({})'.format(type(self).__name__, self)

    def _result_class(self, other):
        if isinstance(self, PolyQ) and (not isinstance(other, ParamPoly) or isinstance(other, PolyQ)):
            return PolyQ
        return ParamPoly

    def _coerce(self, other):
        if isinstance(other, ParamPoly):
            if other._nvars != self._nvars:
                raise VariableCountMismatch('Polynomials in {} and {} variables'.format(
                    self._nvars, other._nvars))
            return other
        if isinstance(other, Coefficient):
            return ParamPoly(self._nvars, {(0,) * self._nvars: other})
        return PolyQ.constant(self._nvars, other)

    def add(self, other, truncation=None):
        other = self._coerce(other)
        bound = _min_truncation(self._truncation, other._truncation, truncation)
        result = {}
        for source in (self._terms, other._terms):
            for e, raw in source.items():
                if bound is not None and sum(e) > bound:
                    continue
                target = result.setdefault(e, {})
                for k, v in raw.items():
                    target[k] = target.get(k, 0) + v
        return self._result_class(other)._raw(self._nvars, _clean(result), bound)

    def mul(self, other, truncation=None):
        """ Product, dropping terms above the truncation degree while
        multiplying. """
        other = self._coerce(other)
        bound = _min_truncation(self._truncation, other._truncation, truncation)
        second = sorted(((sum(e), e, raw) for e, raw in other._terms.items()), key=lambda t: t[0])
        result = {}
        for e1, raw1 in self._terms.items():
            limit = None if bound is None else bound - sum(e1)
            if limit is not None and limit < 0:
                continue
            for d2, e2, raw2 in second:
                if limit is not None and d2 > limit:
                    break
                e = tuple(x + y for x, y in zip(e1, e2))
                target = result.get(e)
                if target is None:
                    target = result[e] = {}
                _accumulate(target, raw1, raw2)
        return self._result_class(other)._raw(self._nvars, _clean(result), bound)

    def pow(self, exponent, truncation=None):
        if exponent < 0:
            raise ValueError('Negative exponent {}'.format(exponent))
        bound = _min_truncation(self._truncation, truncation)
        result = type(self).constant(self._nvars).truncate(bound)
        base = self.truncate(bound)
        while exponent:
            if exponent & 1:
                result = result.mul(base, bound)
            exponent >>= 1
            if exponent:
                base = base.mul(base, bound)
        return result

    def scale(self, factor):
        factor = Fraction(factor)
        terms = {e: {k: v * factor for k, v in raw.items()} for e, raw in self._terms.items()}
        return type(self)._raw(self._nvars, _clean(terms), self._truncation)

    def __add__(self, other):
        return self.add(other)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self.add(-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other).add(-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return self.mul(other)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        return self.pow(exponent)

    def truncate(self, degree):
        """ Drop all terms of total degree above ``degree``. """
        bound = _min_truncation(self._truncation, degree)
        if bound is None:
            return self
        terms = {e: raw for e, raw in self._terms.items() if sum(e) <= bound}
        return type(self)._raw(self._nvars, terms, bound)

    def partial_derivative(self, axis):
        """ Formal derivative along ``axis``; a truncation degree ``D``
        becomes ``D - 1``. """
        if not 0 <= axis < self._nvars:
            raise ValueError('Axis {} out of range for {} variables'.format(axis, self._nvars))
        terms = {}
        for e, raw in self._terms.items():
            power = e[axis]
            if power == 0:
                continue
            lowered = e[:axis] + (power - 1,) + e[axis + 1:]
            terms[lowered] = {k: v * power for k, v in raw.items()}
        truncation = None if self._truncation is None else self._truncation - 1
        return type(self)._raw(self._nvars, terms, truncation)

    def shift(self, axis):
        """ Product with the variable ``axis``; a truncation degree ``D``
        becomes ``D + 1``. """
        if not 0 <= axis < self._nvars:
            raise ValueError('Axis {} out of range for {} variables'.format(axis, self._nvars))
        terms = {e[:axis] + (e[axis] + 1,) + e[axis + 1:]: dict(raw) for e, raw in self._terms.items()}
        truncation = None if self._truncation is None else self._truncation + 1
        return type(self)._raw(self._nvars, terms, truncation)

    def coefficient(self, monomial):
        """ Coefficient of ``monomial``, a zero :class:`Coefficient` when
        absent. """
        return Coefficient(self._terms.get(tuple(monomial), {}))

    def substitute(self, assignment):
        """ Replace parameters by rational values (``index -> value``). """
        terms = {e: Coefficient(raw).substitute(assignment)._terms for e, raw in self._terms.items()}
        result = ParamPoly._raw(self._nvars, _clean(terms), self._truncation)
        if result.is_parameter_free():
            return PolyQ._raw(self._nvars, result._terms, self._truncation)
        return result

    def evaluate(self, point, params=()):
        """ Exact value at ``point`` with parameter ``i`` set to
        ``params[i]``. """
        if self._truncation is not None:
            raise TruncatedEvaluation('Polynomial is only known up to degree {}'.format(self._truncation))
        if len(point) != self._nvars:
            raise VariableCountMismatch('Point {} for polynomial of {} variables'.format(point, self._nvars))
        point = [Fraction(x) for x in point]
        assignment = dict(enumerate(params))
        total = Fraction(0)
        for e, raw in self._terms.items():
            value = Coefficient(raw).evaluate(assignment) if len(raw) > 1 or () not in raw else raw[()]
            for x, power in zip(point, e):
                if power:
                    value *= x ** power
            total += value
        return total

    def embed(self, nvars, offset):
        """ The same polynomial in ``nvars`` variables, its own variables
        placed from position ``offset`` on. """
        if offset + self._nvars > nvars:
            raise VariableCountMismatch('Can not place {} variables at {} in {}'.format(
                self._nvars, offset, nvars))
        pad = (0,) * offset, (0,) * (nvars - offset - self._nvars)
        terms = {pad[0] + e + pad[1]: dict(raw) for e, raw in self._terms.items()}
        return type(self)._raw(nvars, terms, self._truncation)

    def restrict_to_axis(self, axis):
        """ Univariate polynomial obtained by setting every variable but
        ``axis`` to zero. """
        terms = {(e[axis],): dict(raw) for e, raw in self._terms.items()
                 if all(p == 0 for i, p in enumerate(e) if i != axis)}
        return type(self)._raw(1, terms, self._truncation)

    def restrict_derivative_to_axis(self, derivative_axis, axis):
        """ :meth:`restrict_to_axis` of the partial derivative along
        ``derivative_axis``. """
        return self.partial_derivative(derivative_axis).restrict_to_axis(axis)

    def to_json(self, names=None):
        return [[list(m), c.to_json(names)] for m, c in self.terms()]


class PolyQ(ParamPoly):
    """ Parameter-free :class:`ParamPoly`. """

    def __init__(self, nvars, terms=None, truncation=None):
        super().__init__(nvars, terms, truncation)
        if not self.is_parameter_free():
            raise ValueError('PolyQ can not carry parameters')

    def coefficient(self, monomial):
        """ Rational coefficient of ``monomial``. """
        return self._terms.get(tuple(monomial), {}).get((), Fraction(0))

    def items(self):
        """ ``(Monomial, Fraction)`` pairs in graded order. """
        return [(m, c.constant) for m, c in self.terms()]

    def to_json(self, names=None):
        return [[list(m), str(c)] for m, c in self.items()]


def arith(op, first, second, truncation=None):
    """ ``add``, ``mul`` or ``pow`` (``second`` being the exponent). """
    if op == 'add':
        return first.add(second, truncation)
    if op == 'mul':
        return first.mul(second, truncation)
    if op == 'pow':
        return first.pow(second, truncation)
    raise ValueError('Unknown operation {}'.format(op))


def partial_derivative(f, axis):
    return f.partial_derivative(axis)


def evaluate(f, point, params=()):
    return f.evaluate(point, params)


def coefficient(f, monomial):
    return f.coefficient(monomial)


def restrict_to_axis(f, axis):
    return f.restrict_to_axis(axis)


def restrict_derivative_to_axis(f, derivative_axis, axis):
    return f.restrict_derivative_to_axis(derivative_axis, axis)


def determinant(matrix, truncation=None):
    """ Determinant of a square matrix of polynomials.

    Laplace expansion along the rows, memoizing the minor of the trailing
    rows for every subset of columns: ``2^n`` minors, each costing at most
    ``n`` products. Every product is truncated at ``truncation`` when given.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError('Matrix is not square')
    if n == 0:
        raise ValueError('Empty matrix')
    nvars = matrix[0][0].nvars
    one = PolyQ.constant(nvars).truncate(truncation)
    # minors[columns] is the determinant of the last len(columns) rows
    minors = {(): one}
    for size in range(1, n + 1):
        row = matrix[n - size]
        current = {}
        for columns in minors:
            if len(columns) != size - 1:
                continue
            for c in range(n):
                if c in columns:
                    continue
                key = tuple(sorted(columns + (c,)))
                if key in current:
                    continue
                total = None
                for position, j in enumerate(key):
                    entry = row[j]
                    if entry.is_zero():
                        continue
                    rest = tuple(x for x in key if x != j)
                    minor = minors[rest]
                    if minor.is_zero():
                        continue
                    product = entry.mul(minor, truncation)
                    if position % 2:
                        product = -product
                    total = product if total is None else total.add(product, truncation)
                current[key] = total if total is not None else PolyQ(nvars, truncation=truncation)
        minors.update(current)
    return minors[tuple(range(n))]
