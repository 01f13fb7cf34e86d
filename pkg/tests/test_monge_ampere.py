from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from mapoly import linalg
from mapoly.ansatz import simplex_solution, product_solution
from mapoly.errors import ZeroConstantTerm, NegativeCoefficient
from mapoly.monge_ampere import (ma_matrix, residual, verify_solution, sample_points, support_polytope,
                                 support_bijection, SYMBOLIC, SAMPLED)
from mapoly.polytope import is_reflexive, is_delzant, barycenter, vertices_of
from mapoly.poly import PolyQ

small_polys = st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(0, 4), max_size=4) \
    .map(lambda terms: PolyQ(2, terms) + 1)


def test_matrix_at_origin_is_identity():
    P = simplex_solution(2)
    M = ma_matrix(P, truncation=0)
    assert len(M) == 2
    assert M[0, 0].coefficient((0, 0)) == 1
    assert M[0, 1].is_zero()
    assert M.determinant().coefficient((0, 0)) == 1


def test_one_dimensional_solution():
    assert residual(simplex_solution(1)).is_zero()
    y = PolyQ.variable(1, 0)
    assert not residual((1 + y) ** 3).is_zero()


@pytest.mark.parametrize('n', [1, 2, 3])
def test_simplex_solutions_symbolic(n):
    verification = verify_solution(simplex_solution(n))
    assert verification
    assert verification.mode == SYMBOLIC
    assert verification.certificate is None


@pytest.mark.parametrize('n', [4, 5, 6])
def test_simplex_solutions_sampled(n):
    verification = verify_solution(simplex_solution(n), SAMPLED, trials=20, seed=7)
    assert verification
    assert verification.trials == 20


def test_products_of_solutions():
    s1, s2 = simplex_solution(1), simplex_solution(2)
    assert verify_solution(product_solution(s1, s1))
    assert verify_solution(product_solution(s1, s2))
    assert verify_solution(product_solution(s2, product_solution(s2, s2)), SAMPLED, trials=3)


def test_square_solution():
    y1, y2 = PolyQ.variable(2, 0), PolyQ.variable(2, 1)
    square = (1 + y1 * Fraction(1, 2)) ** 2 * (1 + y2 * Fraction(1, 2)) ** 2
    assert verify_solution(square)


def test_non_solution_has_certificate():
    y1, y2 = PolyQ.variable(2, 0), PolyQ.variable(2, 1)
    P = 1 + y1 + y2
    assert not verify_solution(P)
    sampled = verify_solution(P, SAMPLED, trials=4, seed=3)
    assert not sampled
    assert sampled.certificate is not None
    assert sampled.trials == 1
    assert sampled.to_json()['solution'] is False


def test_verify_rejects_bad_input():
    y = PolyQ.variable(1, 0)
    with pytest.raises(ZeroConstantTerm):
        verify_solution(y)
    with pytest.raises(ValueError):
        verify_solution(1 + y, mode='numeric')
    with pytest.raises(ValueError):
        verify_solution(1 + y, SAMPLED, trials=0)


def test_sample_points_are_reproducible():
    first = sample_points(3, 4, seed=11)
    assert first == sample_points(3, 4, seed=11)
    assert first != sample_points(3, 4, seed=12)
    assert all(1 <= x <= 2 ** 32 for p in first for x in p)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(small_polys, st.integers(0, 4))
def test_truncated_residual(P, degree):
    assert residual(P, degree) == residual(P).truncate(degree)


def test_support_polytope_of_solutions(triangle):
    for n in (1, 2, 3):
        polytope = support_polytope(simplex_solution(n))
        assert is_reflexive(polytope)
        assert is_delzant(polytope)
        assert all(x == 0 for x in barycenter(polytope))
        assert support_bijection(simplex_solution(n))
    assert support_polytope(simplex_solution(2)) == triangle


positive_polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 5),
                                 min_size=2, max_size=6).map(lambda terms: PolyQ(2, terms) + 1)


@pytest.mark.slow
@settings(max_examples=1000, deadline=None)
@given(positive_polys)
def test_support_polytope_round_trip(P):
    shifted = [tuple(e - 1 for e in m) for m in P.monomials()]
    assume(linalg.affine_rank(shifted) == 2)
    polytope = support_polytope(P)
    assert set(polytope.vertices) <= set(shifted)
    assert all(polytope.facets.contains(p) for p in shifted)
    assert vertices_of(polytope.facets) == polytope
    # no cancellation among nonnegative coefficients, so the support doubles
    squared = support_polytope(P * P)
    assert set(squared.vertices) == set(tuple(2 * x + 1 for x in v) for v in polytope.vertices)


def test_support_polytope_rejects_negative_coefficients():
    y = PolyQ.variable(1, 0)
    with pytest.raises(NegativeCoefficient):
        support_polytope(1 - y)


def test_support_bijection_detects_gaps():
    y1, y2 = PolyQ.variable(2, 0), PolyQ.variable(2, 1)
    assert not support_bijection(1 + y1 ** 2 + y2 ** 2)
