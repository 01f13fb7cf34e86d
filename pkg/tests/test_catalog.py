import pytest

from mapoly.ansatz import kh_feasible, failed_relation
from mapoly.catalog import builtin_catalog, entry, simplex_entry, SOLUTION, RELATION, COEFFICIENT
from mapoly.classify import check_gates
from mapoly.errors import UnsupportedDimension
from mapoly.polytope import vertices_of, facets_of


def _ids(max_dim):
    return [e.id for n in range(1, max_dim + 1) for e in builtin_catalog(n)]


def _mark_large(ids):
    return [pytest.param(i, marks=pytest.mark.slow) if entry(i).dim >= 5 else i for i in ids]


def test_catalog_sizes():
    assert [len(builtin_catalog(n)) for n in range(1, 7)] == [1, 2, 2, 4, 7, 13]
    assert len([e for e in builtin_catalog(5) if e.id.startswith('table5')]) == 6


def test_simplex_first():
    for n in range(1, 7):
        first = builtin_catalog(n)[0]
        assert first.id == 'simplex-{}'.format(n)
        assert first.is_simplex
        assert first.expected_verdict == SOLUTION


def test_unsupported_dimension():
    with pytest.raises(UnsupportedDimension):
        builtin_catalog(0)
    with pytest.raises(UnsupportedDimension):
        builtin_catalog(7)
    with pytest.raises(KeyError):
        entry('table9-1')


def test_matrix_starts_with_minus_identity():
    for e in builtin_catalog(4):
        assert e.A[:4] == ((-1, 0, 0, 0), (0, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))


@pytest.mark.parametrize('id', _mark_large(_ids(6)))
def test_integrity(id):
    assert entry(id).integrity() == []


@pytest.mark.parametrize('id', _mark_large(_ids(6)))
def test_descriptions_round_trip(id):
    polytope = entry(id).polytope
    again = facets_of(polytope.vertices)
    assert again == polytope
    assert again.facets == polytope.facets
    assert vertices_of(again.facets).vertices == polytope.vertices


@pytest.mark.parametrize('id', _mark_large(_ids(6)))
def test_gates(id):
    gates = check_gates(entry(id).polytope)
    assert gates['reflexive']
    assert gates['delzant']
    assert gates['barycenter_zero']
    assert gates['undecomposable']


@pytest.mark.parametrize('id', _mark_large([i for i in _ids(6) if entry(i).expected_verdict == RELATION]))
def test_relation_entries_have_no_profile(id):
    polytope = entry(id).polytope
    assert kh_feasible(polytope) == []
    assert failed_relation(polytope) is not None


@pytest.mark.parametrize('id', ['table2-1', 'table4-1', 'table6-1'])
def test_coefficient_entries_pass_relations(id):
    e = entry(id)
    assert e.expected_verdict == COEFFICIENT
    profiles = kh_feasible(e.polytope)
    assert len(profiles) == 1
    assert profiles[0].k == e.expected_k
    assert profiles[0].H == e.expected_H


def test_to_json():
    data = simplex_entry(2).to_json()
    assert data == {
        'id': 'simplex-2',
        'source': 'Table 1',
        'dim': 2,
        'A': [[-1, 0], [0, -1], [1, 1]],
        'expected_k': [3, 3],
        'expected_H': [[0, 2], [2, 0]],
        'expected_verdict': 'Solution',
    }
