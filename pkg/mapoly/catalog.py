"""Built-in catalog of smooth reflexive polytopes with barycenter at the
origin.

Every entry stores the facet matrix ``A`` (right hand side 1), the expected
edge data ``k`` and ``H`` as tabulated, and the verdict the classification is
expected to reach. The first ``n`` rows of every matrix are ``-Id``, so
``(-1, ..., -1)`` is a vertex.
"""

import logging

from .ansatz import axis_lengths, h_max
from .polytope import Polytope
from .errors import UnsupportedDimension

log = logging.getLogger(__name__)

SOLUTION = 'Solution'
RELATION = 'RelationObstruction'
COEFFICIENT = 'CoefficientObstruction'

MIN_DIM = 1
MAX_DIM = 6


def _minus_identity(n):
    return [tuple(-int(i == j) for j in range(n)) for i in range(n)]


def _units(n):
    return [tuple(int(i == j) for j in range(n)) for i in range(n)]


class CatalogEntry(object):
    """ A tabulated polytope together with its expected data.

    :param id: Identifier such as ``'table4-1'``.
    :param source: Where the entry was tabulated (table and row).
    :param A: Facet rows beyond ``-Id``.
    """

    def __init__(self, id, source, A, expected_k, expected_H, expected_verdict):
        self.id = id
        self.source = source
        self.dim = len(expected_k)
        self.A = tuple(tuple(row) for row in _minus_identity(self.dim) + list(A))
        self.expected_k = tuple(expected_k)
        self.expected_H = tuple(tuple(row) for row in expected_H)
        self.expected_verdict = expected_verdict
        self._polytope = None

    def __str__(self):
        return 'CatalogEntry({}, dim {})'.format(self.id, self.dim)

    def __repr__(self):
        return str(self)

    @property
    def polytope(self):
        if self._polytope is None:
            self._polytope = Polytope.from_halfspaces(self.A)
        return self._polytope

    @property
    def is_simplex(self):
        return self.id.startswith('simplex')

    def integrity(self):
        """ Compare recomputed ``k`` and ``h_max`` with the tabulated values.

        :return: List of mismatch descriptions, empty when the entry is
                 consistent.
        """
        problems = []
        k = axis_lengths(self.polytope)
        H = h_max(self.polytope)
        if k != self.expected_k:
            problems.append('k is {}, tabulated {}'.format(k, self.expected_k))
        if H != self.expected_H:
            problems.append('h_max is {}, tabulated {}'.format(H, self.expected_H))
        for problem in problems:
            log.warning('{}: {}'.format(self.id, problem))
        return problems

    def to_json(self):
        return {
            'id': self.id,
            'source': self.source,
            'dim': self.dim,
            'A': [list(row) for row in self.A],
            'expected_k': list(self.expected_k),
            'expected_H': [list(row) for row in self.expected_H],
            'expected_verdict': self.expected_verdict,
        }


def simplex_entry(n):
    """ The reflexive ``n``-simplex ``conv{-1, -1 + (n + 1) e_i}``. """
    H = [[0 if i == j else n for j in range(n)] for i in range(n)]
    return CatalogEntry('simplex-{}'.format(n), 'Table 1', [(1,) * n], [n + 1] * n, H, SOLUTION)


_TABLES = {
    2: [
        ('table2-1', 'Table 2',
         [(1, -1), (-1, 1), (1, 0), (0, 1)],
         (1, 1),
         [[0, 2], [2, 0]],
         COEFFICIENT),
    ],
    3: [
        ('table3-1', 'Table 3',
         [(1, 0, -1), (0, 0, 1), (0, 1, 1)],
         (1, 3, 2),
         [[0, 1, 2], [3, 0, 2], [2, 2, 0]],
         RELATION),
    ],
    4: [
        ('table4-1', 'Table 4, row 1',
         [(1, 1, -1, -1), (-1, -1, 1, 1)] + _units(4),
         (1, 1, 1, 1),
         [[0, 0, 2, 2], [0, 0, 2, 2], [2, 2, 0, 0], [2, 2, 0, 0]],
         COEFFICIENT),
        ('table4-2', 'Table 4, row 2',
         [(1, 1, -1, -1), (0, -1, 1, 0), (-1, 0, 0, 1), (1, 1, 0, 0), (0, 0, 1, 1)],
         (1, 1, 1, 1),
         [[0, 0, 2, 2], [0, 0, 2, 2], [1, 2, 0, 1], [2, 1, 1, 0]],
         RELATION),
        ('table4-3', 'Table 4, row 3',
         [(1, 0, 0, -1), (0, 1, 0, -1), (0, -1, 0, 1), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, 1, 1)],
         (1, 1, 3, 1),
         [[0, 1, 1, 2], [1, 0, 1, 2], [3, 3, 0, 2], [1, 2, 1, 0]],
         RELATION),
    ],
    5: [
        ('table5-1', 'Table 5, row 1',
         [(1, 1, 0, 0, -2), (0, 0, 0, 0, 1), (0, 0, 1, 1, 2)],
         (1, 1, 5, 5, 2),
         [[0, 0, 1, 1, 3], [0, 0, 1, 1, 3], [5, 5, 0, 4, 3], [5, 5, 4, 0, 3], [2, 2, 2, 2, 0]],
         RELATION),
        ('table5-2', 'Table 5, row 2',
         [(1, 1, 0, -1, -1), (-1, -1, 0, 1, 1), (1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 1, 1, 1)],
         (1, 1, 4, 1, 1),
         [[0, 0, 1, 2, 2], [0, 0, 1, 2, 2], [4, 4, 0, 3, 3], [2, 2, 1, 0, 0], [2, 2, 1, 0, 0]],
         RELATION),
        ('table5-3', 'Table 5, row 3',
         [(1, 0, 0, 0, -1), (0, 1, 0, 0, -1), (0, -1, 0, 0, 1), (0, 1, 0, 0, 0), (0, 0, 0, 0, 1),
          (0, -1, 1, 0, 1), (0, 1, 0, 1, 0)],
         (1, 1, 2, 3, 1),
         [[0, 1, 1, 1, 2], [1, 0, 1, 1, 2], [2, 3, 0, 2, 1], [3, 2, 3, 0, 3], [1, 2, 1, 1, 0]],
         RELATION),
        ('table5-4', 'Table 5, row 4',
         [(1, 0, 0, 0, -1), (0, 1, 0, 0, -1), (0, 0, 0, 0, 1), (0, 0, 1, 0, 1), (0, 0, 0, 1, 1)],
         (1, 1, 3, 3, 2),
         [[0, 1, 1, 1, 2], [1, 0, 1, 1, 2], [3, 3, 0, 3, 2], [3, 3, 3, 0, 2], [2, 2, 2, 2, 0]],
         RELATION),
        ('table5-5', 'Table 5, row 5',
         [(1, 0, 0, 0, -1), (0, 1, 0, -1, 0), (0, 0, 0, 1, 1), (0, 0, 1, 1, 1)],
         (1, 1, 4, 3, 3),
         [[0, 1, 1, 1, 2], [1, 0, 1, 2, 1], [4, 4, 0, 3, 3], [3, 3, 3, 0, 2], [3, 3, 3, 2, 0]],
         RELATION),
        ('table5-6', 'Table 5, row 6',
         [(1, 1, 0, 0, -1), (0, 0, 0, 0, 1), (0, 0, 1, 1, 1)],
         (2, 2, 4, 4, 2),
         [[0, 1, 2, 2, 3], [1, 0, 2, 2, 3], [4, 4, 0, 3, 3], [4, 4, 3, 0, 3], [2, 2, 2, 2, 0]],
         RELATION),
    ],
    6: [
        ('table6-1', 'Table 6, row 1',
         [(1, 1, 1, -1, -1, -1), (-1, -1, -1, 1, 1, 1)] + _units(6),
         (1, 1, 1, 1, 1, 1),
         [[0, 0, 0, 2, 2, 2]] * 3 + [[2, 2, 2, 0, 0, 0]] * 3,
         COEFFICIENT),
        ('table6-2', 'Table 6, row 2',
         [(1, 1, 1, -1, -1, -1), (0, -1, -1, 1, 1, 0), (0, 1, 1, 0, -1, 0), (-1, 0, -1, 1, 1, 1),
          (1, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 1)],
         (1, 1, 1, 1, 1, 2),
         [[0, 0, 0, 2, 2, 2]] * 3 + [[1, 2, 2, 0, 0, 1], [1, 2, 2, 0, 0, 1], [3, 2, 3, 1, 1, 0]],
         RELATION),
        ('table6-3', 'Table 6, row 3',
         [(1, 1, 1, -1, -1, -1), (0, 0, -1, 1, 0, 0), (0, -1, 0, 0, 1, 0), (-1, 0, 0, 0, 0, 1),
          (1, 1, 1, 0, 0, 0), (0, 0, 0, 1, 1, 1)],
         (1, 1, 1, 1, 1, 1),
         [[0, 0, 0, 2, 2, 2]] * 3 + [[1, 1, 2, 0, 1, 1], [1, 2, 1, 1, 0, 1], [2, 1, 1, 1, 1, 0]],
         RELATION),
        ('table6-4', 'Table 6, row 4',
         [(1, 1, 0, 0, 0, -2), (0, 0, 1, 0, 0, -1), (0, 0, -1, 0, 0, 1), (0, 0, 1, 0, 0, 0),
          (0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 1, 2)],
         (1, 1, 1, 5, 5, 1),
         [[0, 0, 1, 1, 1, 3], [0, 0, 1, 1, 1, 3], [1, 1, 0, 1, 1, 2], [5, 5, 5, 0, 4, 3],
          [5, 5, 5, 4, 0, 3], [1, 1, 2, 1, 1, 0]],
         RELATION),
        ('table6-5', 'Table 6, row 5',
         [(1, 1, 0, 0, -1, -1), (0, -1, 1, -1, 1, 0), (-1, 0, -1, 1, 0, 1), (1, 0, 1, 0, 0, 0),
          (0, 1, 0, 1, 0, 0), (0, 0, 0, 0, 1, 1)],
         (1, 1, 1, 1, 1, 1),
         [[0, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 2], [1, 2, 0, 2, 0, 1], [2, 1, 2, 0, 1, 0],
          [1, 2, 0, 2, 0, 1], [2, 1, 2, 0, 1, 0]],
         RELATION),
        ('table6-6', 'Table 6, row 6',
         [(1, 1, 0, 0, -1, -1), (0, 0, 1, 0, 0, -1), (-1, -1, 0, 0, 1, 1), (1, 0, 0, 0, 0, 0),
          (0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 0, 1)],
         (1, 1, 1, 3, 1, 1),
         [[0, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 2], [1, 1, 0, 1, 1, 2], [3, 3, 3, 0, 3, 2],
          [2, 2, 1, 1, 0, 0], [2, 2, 1, 1, 0, 0]],
         RELATION),
        ('table6-7', 'Table 6, row 7',
         [(1, 1, 0, 0, -1, -1), (-1, -1, 0, 0, 1, 1), (1, 1, 1, 0, 0, 0), (0, 0, 0, 1, 1, 1)],
         (1, 1, 4, 4, 1, 1),
         [[0, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 2], [3, 3, 0, 4, 4, 4], [4, 4, 4, 0, 3, 3],
          [2, 2, 1, 1, 0, 0], [2, 2, 1, 1, 0, 0]],
         RELATION),
        ('table6-8', 'Table 6, row 8',
         [(1, 1, 0, 0, -1, -1), (0, 0, 0, 0, 1, -1), (0, 0, 0, 0, -1, 1), (0, 0, 0, 0, 1, 0),
          (0, 0, 0, 0, 0, 1), (0, 0, 1, 1, 1, 1)],
         (1, 1, 5, 5, 1, 1),
         [[0, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 2], [5, 5, 0, 4, 4, 4], [5, 5, 4, 0, 4, 4],
          [1, 1, 1, 1, 0, 2], [1, 1, 1, 1, 2, 0]],
         RELATION),
        ('table6-9', 'Table 6, row 9',
         [(1, 1, 0, 0, -1, -1), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1), (0, 0, 1, 1, 1, 1)],
         (1, 1, 5, 5, 2, 2),
         [[0, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 2], [5, 5, 0, 4, 4, 4], [5, 5, 4, 0, 4, 4],
          [2, 2, 2, 2, 0, 2], [2, 2, 2, 2, 2, 0]],
         RELATION),
        ('table6-10', 'Table 6, row 10',
         [(1, 0, 0, 0, 0, -1), (0, 1, 0, 0, 0, -1), (0, 0, 1, 0, 0, -1), (0, 0, -1, 0, 0, 1),
          (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 0, 1), (0, 0, 0, 0, 1, 1)],
         (1, 1, 1, 3, 3, 1),
         [[0, 1, 1, 1, 1, 2], [1, 0, 1, 1, 1, 2], [1, 1, 0, 1, 1, 2], [3, 3, 3, 0, 3, 2],
          [3, 3, 3, 3, 0, 2], [1, 1, 2, 1, 1, 0]],
         RELATION),
        ('table6-11', 'Table 6, row 11',
         [(1, 0, 0, 0, 0, -1), (0, 1, 0, 0, 0, -1), (0, -1, 1, 0, 0, 0), (0, -1, 0, 0, 0, 1),
          (0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 0, 1), (0, 1, 0, 1, 0, 0), (0, 0, 0, 0, 1, 1)],
         (1, 1, 1, 3, 3, 1),
         [[0, 1, 1, 1, 1, 2], [1, 0, 1, 1, 1, 2], [1, 2, 0, 1, 1, 1], [3, 2, 3, 0, 3, 3],
          [3, 3, 3, 3, 0, 2], [1, 2, 1, 1, 1, 0]],
         RELATION),
        ('table6-12', 'Table 6, row 12',
         [(1, 0, 0, 0, 0, -1), (-1, 0, 0, 0, 0, 1), (1, 0, 0, 0, 0, 0), (0, 1, 1, 0, 0, -1),
          (0, 0, 0, 0, 0, 1), (0, 0, 0, 1, 1, 1)],
         (1, 2, 2, 4, 4, 1),
         [[0, 1, 1, 1, 1, 2], [2, 0, 1, 2, 2, 3], [2, 1, 0, 2, 2, 3], [4, 4, 4, 0, 3, 3],
          [4, 4, 4, 3, 0, 3], [2, 1, 1, 1, 1, 0]],
         RELATION),
    ],
}


def builtin_catalog(n):
    """ Undecomposable catalog entries of dimension ``n``: the simplex first,
    then the tabulated polytopes in table order.

    :raises UnsupportedDimension: Outside ``1 <= n <= 6``.
    """
    if not MIN_DIM <= n <= MAX_DIM:
        raise UnsupportedDimension('Catalog covers dimensions {} to {}, got {}'.format(MIN_DIM, MAX_DIM, n))
    return [simplex_entry(n)] + [CatalogEntry(*fields) for fields in _TABLES.get(n, [])]


def entry(id):
    """ Look up a catalog entry by identifier. """
    for n in range(MIN_DIM, MAX_DIM + 1):
        for e in builtin_catalog(n):
            if e.id == id:
                return e
    raise KeyError('No catalog entry {}'.format(id))
