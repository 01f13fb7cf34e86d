import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mapoly.errors import VariableCountMismatch, TruncatedEvaluation
from mapoly.poly import Monomial, Coefficient, ParamPoly, PolyQ, determinant, arith, _merge

exponents2 = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys2 = st.dictionaries(exponents2, st.integers(-5, 5), max_size=5).map(lambda terms: PolyQ(2, terms))
points2 = st.tuples(st.integers(-4, 4), st.integers(-4, 4))


def test_monomial_order():
    monomials = Monomial.all_up_to(2, 2)
    assert monomials == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]
    assert Monomial((2, 0)) < Monomial((0, 3))
    assert str(Monomial((2, 1))) == 'y1^2*y2'
    assert str(Monomial((0, 0))) == '1'
    assert Monomial((1, 2)).degree == 3
    with pytest.raises(ValueError):
        Monomial((-1, 0))


def test_monomial_hashes_like_tuple():
    assert {(1, 2): 'x'}[Monomial((1, 2))] == 'x'


def test_coefficient_arithmetic():
    a0, a1 = Coefficient.parameter(0), Coefficient.parameter(1)
    c = (a0 + 2) * (a1 - a0)
    assert c.parameters == [0, 1]
    assert c.degree == 2
    assert c.linear_form() is None
    assert c.substitute({0: 1}) == 3 * a1 - 3
    assert c.evaluate({0: 1, 1: 2}) == 3
    with pytest.raises(ValueError):
        c.evaluate({0: 1})
    form = (3 * a0 - a1 + Fraction(1, 2)).linear_form()
    assert form == ({0: 3, 1: -1}, Fraction(1, 2))
    assert Coefficient(5).is_constant()
    assert Coefficient().is_zero()
    assert Coefficient(a0) == a0


def test_coefficient_format():
    a0 = Coefficient.parameter(0)
    assert (2 * a0 + 1).format(['a(2,2)']) == '1 + 2*a(2,2)'
    assert Coefficient().format() == '0'


def test_polynomial_basics():
    y1, y2 = PolyQ.variable(2, 0), PolyQ.variable(2, 1)
    f = (1 + y1) * (1 + y2)
    assert isinstance(f, PolyQ)
    assert f.coefficient((1, 1)) == 1
    assert f.degree == 2
    assert len(f) == 4
    assert str(f) == '1 + y2 + y1 + y1*y2'
    assert f.monomials() == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_parameter_polynomials():
    p = ParamPoly.parameter(2, 0)
    f = p * PolyQ.variable(2, 0) + 1
    assert not isinstance(f, PolyQ)
    assert f.parameters == [0]
    assert f.coefficient((1, 0)) == Coefficient.parameter(0)
    g = f.substitute({0: 3})
    assert isinstance(g, PolyQ)
    assert g.coefficient((1, 0)) == 3
    assert f.evaluate((2, 5), params=(3,)) == 7
    with pytest.raises(ValueError):
        PolyQ(2, {(0, 0): Coefficient.parameter(0)})


def test_variable_count_mismatch():
    with pytest.raises(VariableCountMismatch):
        PolyQ(2, {(1, 0, 0): 1})
    with pytest.raises(VariableCountMismatch):
        PolyQ.variable(2, 0) + PolyQ.variable(3, 0)
    with pytest.raises(VariableCountMismatch):
        PolyQ.variable(2, 0).evaluate((1, 2, 3))


def test_truncation():
    y = PolyQ.variable(1, 0)
    f = (1 + y).pow(5, truncation=2)
    assert f.truncation == 2
    assert f.items() == [((0,), 1), ((1,), 5), ((2,), 10)]
    assert str(f) == '1 + 5*y1 + 10*y1^2 + O(deg 3)'
    with pytest.raises(TruncatedEvaluation):
        f.evaluate((1,))
    derivative = f.partial_derivative(0)
    assert derivative.truncation == 1
    assert derivative.items() == [((0,), 5), ((1,), 20)]


def test_shift_raises_truncation():
    y1, y2 = PolyQ.variable(2, 0), PolyQ.variable(2, 1)
    f = (1 + y1 + y2).pow(2, truncation=1)
    shifted = f.shift(0)
    assert shifted.truncation == 2
    assert shifted.items() == [((1, 0), 1), ((1, 1), 2), ((2, 0), 2)]
    with pytest.raises(ValueError):
        f.shift(2)


def test_arith_dispatch():
    y = PolyQ.variable(1, 0)
    assert arith('add', y, y) == 2 * y
    assert arith('mul', y, y) == y ** 2
    assert arith('pow', 1 + y, 2) == 1 + 2 * y + y ** 2
    with pytest.raises(ValueError):
        arith('div', y, y)


def test_embed_and_restrict():
    f = PolyQ(2, {(0, 0): 1, (1, 0): 2, (1, 1): 3, (0, 2): 4})
    embedded = f.embed(3, 1)
    assert embedded.coefficient((0, 1, 1)) == 3
    assert f.restrict_to_axis(0).items() == [((0,), 1), ((1,), 2)]
    assert f.restrict_to_axis(1).items() == [((0,), 1), ((2,), 4)]
    # d/dy2 is 3 y1 + 8 y2, restricted to the first axis
    assert f.restrict_derivative_to_axis(1, 0).items() == [((1,), 3)]


@settings(max_examples=1000, deadline=None)
@given(polys2, polys2, polys2)
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@settings(max_examples=1000, deadline=None)
@given(polys2, polys2, st.integers(0, 5))
def test_truncated_product_is_truncation_of_product(f, g, degree):
    assert f.mul(g, degree) == (f * g).truncate(degree)
    assert f.pow(3, degree) == (f ** 3).truncate(degree)


@settings(max_examples=1000, deadline=None)
@given(polys2, polys2, points2)
def test_evaluation_is_a_homomorphism(f, g, point):
    assert (f * g).evaluate(point) == f.evaluate(point) * g.evaluate(point)
    assert (f + g).evaluate(point) == f.evaluate(point) + g.evaluate(point)


def _cofactor_determinant(matrix):
    n = len(matrix)
    total = PolyQ(matrix[0][0].nvars)
    for permutation in itertools.permutations(range(n)):
        inversions = sum(1 for i, j in itertools.combinations(range(n), 2) if permutation[i] > permutation[j])
        term = PolyQ.constant(matrix[0][0].nvars, -1 if inversions % 2 else 1)
        for row, column in enumerate(permutation):
            term = term * matrix[row][column]
        total = total + term
    return total


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(st.lists(polys2, min_size=9, max_size=9), st.integers(0, 4))
def test_determinant_matches_permutation_expansion(entries, degree):
    matrix = [entries[0:3], entries[3:6], entries[6:9]]
    expected = _cofactor_determinant(matrix)
    assert determinant(matrix) == expected
    assert determinant(matrix, degree) == expected.truncate(degree)


def test_determinant_with_parameters():
    a = ParamPoly.parameter(1, 0)
    y = PolyQ.variable(1, 0)
    det = determinant([[a, y], [y, a]])
    assert det.coefficient((0,)) == Coefficient.parameter(0) * Coefficient.parameter(0)
    assert det.coefficient((2,)) == -1
    with pytest.raises(ValueError):
        determinant([[a, y]])


def test_parameter_product_cache_is_bounded():
    assert _merge.cache_info().maxsize is not None
    assert Coefficient.parameter(0) * Coefficient.parameter(0) == Coefficient({((0, 2),): 1})
