import itertools
import json
import logging
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog
from scipy.spatial import ConvexHull, QhullError

from . import linalg
from .errors import (UnboundedSystem, EmptyOrLowerDimensional, DegenerateInput, NotReflexive,
                     InvariantViolation)

log = logging.getLogger(__name__)

# Relative tolerance used when grouping points on a facet proposed by qhull.
# Proposals are always re-derived exactly, this only decides membership.
QHULL_TOLERANCE = 1e-9


def rat_to_json(x):
    """ JSON representation of a rational: ``int`` when integral, else a
    ``'p/q'`` string. """
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return '{}/{}'.format(x.numerator, x.denominator)


class HalfspaceSystem(object):
    """ The system ``A y <= b``.

    ``A`` is an integer matrix (tuple of rows), ``b`` a tuple of rationals
    which defaults to all ones. Identical rows are dropped on construction.
    The flag ``irredundant`` tells whether every row is known to define a
    facet; it's set by :func:`vertices_of` and :func:`facets_of`.
    """

    def __init__(self, A, b=None, irredundant=False):
        A = [tuple(int(x) for x in row) for row in A]
        if not A:
            raise ValueError('Halfspace system needs at least one row')
        n = len(A[0])
        if any(len(row) != n for row in A):
            raise ValueError('Rows of A have different lengths')
        if b is None:
            b = [1] * len(A)
        if len(b) != len(A):
            raise ValueError('A has {} rows but b has {} entries'.format(len(A), len(b)))
        rows = []
        seen = set()
        for row, rhs in zip(A, b):
            key = (row, Fraction(rhs))
            if key not in seen:
                seen.add(key)
                rows.append(key)
        self._A = tuple(r for r, _ in rows)
        self._b = tuple(rhs for _, rhs in rows)
        self._irredundant = irredundant

    def __len__(self):
        return len(self._A)

    def __iter__(self):
        return iter(zip(self._A, self._b))

    def __eq__(self, other):
        if not isinstance(other, HalfspaceSystem):
            return NotImplemented
        return sorted(self) == sorted(other)

    def __hash__(self):
        return hash(tuple(sorted(self)))

    def __str__(self):
        return 'HalfspaceSystem({} rows, dim {})'.format(len(self), self.dim)

    @property
    def A(self):
        return self._A

    @property
    def b(self):
        return self._b

    @property
    def dim(self):
        return len(self._A[0])

    @property
    def irredundant(self):
        return self._irredundant

    def normalized(self):
        """ Same system with every row scaled to its primitive form. Rows
        ``0 y <= b`` say nothing and are dropped.

        :raises EmptyOrLowerDimensional: When some zero row has ``b < 0``.
        """
        A, b = [], []
        for row, rhs in self:
            if not any(row):
                if rhs < 0:
                    raise EmptyOrLowerDimensional('Row 0 <= {} is never satisfied'.format(rhs))
                continue
            ints, factor = linalg.primitive(row)
            A.append(ints)
            b.append(rhs * factor)
        if not A:
            raise UnboundedSystem('Every row of the system is zero')
        return HalfspaceSystem(A, b, self._irredundant)

    def contains(self, point, strict=False):
        for row, rhs in self:
            value = linalg.dot(row, point)
            if value > rhs or (strict and value == rhs):
                return False
        return True

    def tight(self, point):
        """ Indices of the rows satisfied with equality at ``point``. """
        return frozenset(i for i, (row, rhs) in enumerate(self) if linalg.dot(row, point) == rhs)


class Polytope(object):
    """ A bounded, full-dimensional polytope with rational vertices, known by
    both of its descriptions.

    Build one from a halfspace system or from a point set::

        from mapoly import Polytope
        hexagon = Polytope.from_halfspaces([(-1, 0), (0, -1), (1, -1), (-1, 1), (1, 0), (0, 1)])
        square = Polytope.from_vertices([(-1, -1), (1, -1), (-1, 1), (1, 1)])

    The vertex list is free of duplicates and sorted lexicographically; facets
    are irredundant with primitive integer rows. Lattice points, the degree
    bound and the edge graph are computed on first access and cached.

    The gates of the classification are available as methods
    (:meth:`is_reflexive`, :meth:`is_delzant`, :meth:`barycenter`,
    :meth:`decompose`) and as module level functions of the same name.
    """

    def __init__(self, vertices, facets):
        self._vertices = tuple(sorted(set(tuple(Fraction(x) for x in v) for v in vertices)))
        self._facets = facets
        if not self._vertices:
            raise DegenerateInput('Polytope without vertices')
        if any(len(v) != facets.dim for v in self._vertices):
            raise ValueError('Vertices and facets live in different dimensions')
        for v in self._vertices:
            if not facets.contains(v):
                raise InvariantViolation('Vertex {} violates the facet system'.format(v))
        self._lattice_points = None
        self._tight = None
        self._edges = None

    def __str__(self):
        return 'Polytope(dim={}, {} vertices, {} facets)'.format(
            self.dim, len(self._vertices), len(self._facets))

    def __repr__(self):
        return str(self)

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self._vertices == other._vertices

    def __hash__(self):
        return hash(self._vertices)

    @property
    def dim(self):
        """ Ambient dimension ``n``. """
        return self._facets.dim

    @property
    def vertices(self):
        """ Vertices as tuples of :class:`fractions.Fraction`, lexicographically
        sorted. """
        return self._vertices

    @property
    def facets(self):
        """ The irredundant :class:`HalfspaceSystem`. """
        return self._facets

    @property
    def lattice_points(self):
        """ All integer points of the polytope as tuples of ``int``, in
        lexicographic order. """
        if self._lattice_points is None:
            self._lattice_points = _scan_lattice_points(self)
            log.debug('{} has {} lattice points'.format(self, len(self._lattice_points)))
        return self._lattice_points

    @property
    def degree_bound(self):
        """ The number ``d``: maximum over lattice points ``p`` of the sum of
        ``p_i + 1``. """
        return max(sum(x + 1 for x in p) for p in self.lattice_points)

    @property
    def is_lattice(self):
        return all(x.denominator == 1 for v in self._vertices for x in v)

    def tight_facets(self, index):
        """ Facet row indices tight at the vertex with the given index. """
        if self._tight is None:
            self._tight = [self._facets.tight(v) for v in self._vertices]
        return self._tight[index]

    @property
    def edges(self):
        """ Adjacency of the vertex graph: a dictionary mapping a vertex
        index to the sorted list of indices of its neighbours. Two vertices
        span an edge when the facets tight at both have rank ``n - 1``. """
        if self._edges is None:
            n = self.dim
            edges = {i: [] for i in range(len(self._vertices))}
            for i, j in itertools.combinations(range(len(self._vertices)), 2):
                common = self.tight_facets(i) & self.tight_facets(j)
                if len(common) < n - 1:
                    continue
                if linalg.rank([self._facets.A[k] for k in common]) == n - 1:
                    edges[i].append(j)
                    edges[j].append(i)
            self._edges = edges
        return self._edges

    def edge_direction(self, i, j):
        """ Primitive integer direction and lattice length of the edge from
        vertex ``i`` to vertex ``j``. """
        diff = [b - a for a, b in zip(self._vertices[i], self._vertices[j])]
        direction, factor = linalg.primitive(diff)
        return tuple(direction), 1 / factor

    def interior_lattice_points(self):
        return interior_lattice_points(self)

    def is_reflexive(self):
        return is_reflexive(self)

    def is_delzant(self):
        return is_delzant(self)

    def barycenter(self):
        return barycenter(self)

    def decompose(self):
        return decompose(self)

    def to_json(self):
        """ Canonical dictionary with the keys ``dim``, ``vertices``,
        ``facets_A`` and ``facets_b``. """
        return {
            'dim': self.dim,
            'vertices': [[rat_to_json(x) for x in v] for v in self._vertices],
            'facets_A': [list(row) for row in self._facets.A],
            'facets_b': [rat_to_json(x) for x in self._facets.b],
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=True)

    @staticmethod
    def from_halfspaces(A, b=None):
        """ Polytope ``{y : A y <= b}``, ``b`` defaulting to all ones. """
        return vertices_of(HalfspaceSystem(A, b))

    @staticmethod
    def from_vertices(points):
        """ Convex hull of a point set. Points which aren't vertices are
        dropped. """
        return facets_of(points)

    @staticmethod
    def load(path):
        """ Load a polytope from a file in the polytope text format.

        :param path: A path-like object.
        """
        from .formats import PolytopeFile
        return PolytopeFile.load(path)


def _check_bounded(system):
    """ Boundedness and emptiness gate using a floating point LP per
    coordinate direction. Decides only whether to proceed; everything
    downstream is exact. """
    A = np.array(system.A, dtype=float)
    b = np.array([float(x) for x in system.b])
    n = system.dim
    for i in range(n):
        for sign in (1, -1):
            c = np.zeros(n)
            c[i] = sign
            result = linprog(c, A_ub=A, b_ub=b, bounds=[(None, None)] * n, method='highs')
            if result.status == 2:
                raise EmptyOrLowerDimensional('Halfspace system is infeasible')
            if result.status == 3:
                raise UnboundedSystem('Halfspace system is unbounded in direction {}{}'.format(
                    '-' if sign > 0 else '+', i))


def vertices_of(system):
    """ Vertex description of a halfspace system.

    Every ``n``-subset of rows is intersected and the unique intersection
    point kept when it satisfies all rows. Rows tight at fewer than ``n``
    affinely independent vertices are dropped as redundant.

    :param system: A :class:`HalfspaceSystem`.
    :return: A :class:`Polytope`.
    """
    system = system.normalized()
    n = system.dim
    _check_bounded(system)
    A, b = system.A, system.b
    found = set()
    for subset in itertools.combinations(range(len(A)), n):
        point = linalg.solve([A[i] for i in subset], [b[i] for i in subset])
        if point is None:
            continue
        point = tuple(point)
        if point not in found and system.contains(point):
            found.add(point)
    vertices = sorted(found)
    if linalg.affine_rank(vertices) != n:
        raise EmptyOrLowerDimensional('Halfspace system is not full-dimensional')
    keep_A, keep_b = [], []
    for row, rhs in system:
        on_facet = [v for v in vertices if linalg.dot(row, v) == rhs]
        if linalg.affine_rank(on_facet) == n - 1:
            keep_A.append(row)
            keep_b.append(rhs)
    facets = HalfspaceSystem(keep_A, keep_b, irredundant=True)
    if len(facets) < len(system):
        log.debug('Dropped {} redundant rows'.format(len(system) - len(facets)))
    return Polytope(vertices, facets)


def _exact_hyperplane(points, cloud):
    """ Primitive integer hyperplane ``a y <= b`` through ``points`` with all of
    ``cloud`` on its negative side, or ``None`` when the points don't span a
    supporting hyperplane. """
    base = points[0]
    kernel = linalg.nullspace([[x - y for x, y in zip(p, base)] for p in points[1:]], len(base))
    if len(kernel) != 1:
        return None
    normal, _ = linalg.primitive(kernel[0])
    rhs = linalg.dot(normal, base)
    values = [linalg.dot(normal, p) for p in cloud]
    if all(v <= rhs for v in values):
        return tuple(normal), rhs
    if all(v >= rhs for v in values):
        return tuple(-x for x in normal), -rhs
    return None


def facets_of(points):
    """ Facet description of the convex hull of a point set.

    Candidate facets are proposed by qhull in floating point; each one is
    re-derived exactly from the points it contains and checked to support
    the whole set. Points which are not vertices are dropped.

    :param points: Iterable of rational vectors spanning their space.
    :return: A :class:`Polytope`.
    """
    cloud = sorted(set(tuple(Fraction(x) for x in p) for p in points))
    if not cloud:
        raise DegenerateInput('Empty point set')
    n = len(cloud[0])
    if linalg.affine_rank(cloud) != n:
        raise DegenerateInput('Points do not span a {}-dimensional polytope'.format(n))

    rows = set()
    if n == 1:
        rows.add(((-1,), -cloud[0][0]))
        rows.add(((1,), cloud[-1][0]))
    else:
        coords = np.array([[float(x) for x in p] for p in cloud])
        try:
            hull = ConvexHull(coords)
        except QhullError as e:
            raise DegenerateInput('qhull failed: {}'.format(e))
        scale = max(1.0, float(np.abs(coords).max()))
        for equation in np.unique(np.round(hull.equations, 12), axis=0):
            normal, offset = equation[:-1], equation[-1]
            distance = coords.dot(normal) + offset
            on_facet = [cloud[i] for i in np.flatnonzero(np.abs(distance) <= QHULL_TOLERANCE * scale)]
            plane = _exact_hyperplane(on_facet, cloud) if on_facet else None
            if plane is None:
                raise InvariantViolation('qhull proposed a facet which is not exact: {}'.format(equation))
            rows.add(plane)

    rows = sorted(rows)
    facets = HalfspaceSystem([a for a, _ in rows], [b for _, b in rows], irredundant=True)
    vertices = [p for p in cloud if linalg.rank([facets.A[i] for i in facets.tight(p)] or [[0] * n]) == n]
    for row, rhs in facets:
        if linalg.affine_rank([v for v in vertices if linalg.dot(row, v) == rhs]) != n - 1:
            raise InvariantViolation('Row {} <= {} is not facet-defining'.format(row, rhs))
    return Polytope(vertices, facets)


def _bounding_box(polytope):
    lo = [int(np.floor(float(min(v[i] for v in polytope.vertices)))) for i in range(polytope.dim)]
    hi = [int(np.ceil(float(max(v[i] for v in polytope.vertices)))) for i in range(polytope.dim)]
    return lo, hi


def _integer_system(polytope):
    """ Facet system scaled to integers: ``A * L``, ``b * L``. """
    den = 1
    for x in polytope.facets.b:
        den = linalg.lcm(den, x.denominator)
    A = np.array(polytope.facets.A, dtype=np.int64) * den
    b = np.array([int(x * den) for x in polytope.facets.b], dtype=np.int64)
    return A, b


def _scan_lattice_points(polytope):
    lo, hi = _bounding_box(polytope)
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    grid = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing='ij')], axis=1)
    A, b = _integer_system(polytope)
    inside = np.all(grid.dot(A.T) <= b, axis=1)
    return tuple(tuple(int(x) for x in p) for p in grid[inside])


def lattice_points(polytope):
    """ All integer points of ``polytope`` in lexicographic order. """
    return polytope.lattice_points


def lattice_points_oracle(polytope):
    """ Lattice points by a plain bounding box scan testing every facet
    inequality in exact arithmetic. Slow, but independent of
    :func:`lattice_points`. """
    lo, hi = _bounding_box(polytope)
    ranges = [range(l, h + 1) for l, h in zip(lo, hi)]
    return [p for p in itertools.product(*ranges) if polytope.facets.contains(p)]


def interior_lattice_points(polytope):
    """ Lattice points satisfying every facet inequality strictly. """
    return [p for p in polytope.lattice_points if polytope.facets.contains(p, strict=True)]


def is_reflexive(polytope):
    """ Whether the polytope is a lattice polytope whose primitive facet rows
    all have right hand side 1.

    For a reflexive polytope the origin must be the only interior lattice
    point; a violation raises :exc:`InvariantViolation`.
    """
    if not polytope.is_lattice:
        return False
    if any(rhs != 1 for rhs in polytope.facets.b):
        return False
    interior = interior_lattice_points(polytope)
    origin = (0,) * polytope.dim
    if interior != [origin]:
        raise InvariantViolation('Reflexive {} has interior lattice points {}'.format(polytope, interior))
    log.info('{} is reflexive, unique interior lattice point {}'.format(polytope, origin))
    return True


def is_delzant(polytope):
    """ Whether every vertex has exactly ``n`` edges whose primitive
    directions form a basis of the integer lattice. """
    n = polytope.dim
    for i, neighbours in polytope.edges.items():
        if len(neighbours) != n:
            return False
        directions = [polytope.edge_direction(i, j)[0] for j in neighbours]
        if abs(linalg.det(directions)) != 1:
            return False
    return True


def _subfaces(polytope, face, face_dim):
    """ Faces of dimension ``face_dim - 1`` of the face given as a frozenset of
    vertex indices. """
    found = set()
    for row in range(len(polytope.facets)):
        sub = frozenset(i for i in face if row in polytope.tight_facets(i))
        if not sub or sub == face or sub in found:
            continue
        if linalg.affine_rank([polytope.vertices[i] for i in sub]) == face_dim - 1:
            found.add(sub)
    return sorted(found, key=sorted)


def _fan(polytope, face, face_dim, cache):
    """ Triangulation of a face by coning from its least vertex over the
    triangulations of the subfaces missing it. """
    if face in cache:
        return cache[face]
    if face_dim == 0:
        result = [tuple(face)]
    else:
        apex = min(face)
        result = []
        for sub in _subfaces(polytope, face, face_dim):
            if apex in sub:
                continue
            result.extend((apex,) + simplex for simplex in _fan(polytope, sub, face_dim - 1, cache))
    cache[face] = result
    return result


def triangulate(polytope):
    """ Fan triangulation from the lexicographically least vertex, as a list
    of tuples of ``n + 1`` vertex indices. """
    everything = frozenset(range(len(polytope.vertices)))
    return _fan(polytope, everything, polytope.dim, {})


def barycenter(polytope):
    """ Exact centroid: volume weighted mean of the centroids of the simplices
    of :func:`triangulate`. """
    n = polytope.dim
    total = Fraction(0)
    moment = [Fraction(0)] * n
    for simplex in triangulate(polytope):
        points = [polytope.vertices[i] for i in simplex]
        volume = abs(linalg.det([[x - y for x, y in zip(p, points[0])] for p in points[1:]]))
        total += volume
        for k in range(n):
            moment[k] += volume * sum(p[k] for p in points) / (n + 1)
    if total == 0:
        raise DegenerateInput('{} has zero volume'.format(polytope))
    return tuple(m / total for m in moment)


def decompose(polytope):
    """ Finest partition of the coordinate axes such that every facet normal
    is supported in a single block.

    Axes are numbered from 0. A single block means the polytope doesn't split
    as a coordinate aligned cartesian product.

    :return: Tuple of tuples of axis indices, ordered by smallest axis.
    """
    if not is_reflexive(polytope):
        raise NotReflexive('Decomposition needs a reflexive polytope, got {}'.format(polytope))
    parent = list(range(polytope.dim))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for row in polytope.facets.A:
        support = [i for i, x in enumerate(row) if x != 0]
        for i in support[1:]:
            parent[find(i)] = find(support[0])
    blocks = {}
    for i in range(polytope.dim):
        blocks.setdefault(find(i), []).append(i)
    return tuple(sorted(tuple(b) for b in blocks.values()))


def block_factor(polytope, block):
    """ Projection of a decomposable reflexive polytope onto the axes of one
    block of :func:`decompose`. """
    A = [[row[i] for i in block] for row in polytope.facets.A
         if all(x == 0 for j, x in enumerate(row) if j not in block)]
    return vertices_of(HalfspaceSystem(A))


def product_polytope(first, second):
    """ Cartesian product, axes of ``first`` before those of ``second``. """
    vertices = [v + w for v in first.vertices for w in second.vertices]
    pad_first, pad_second = (0,) * second.dim, (0,) * first.dim
    A = [tuple(row) + pad_first for row in first.facets.A] + \
        [pad_second + tuple(row) for row in second.facets.A]
    b = list(first.facets.b) + list(second.facets.b)
    return Polytope(vertices, HalfspaceSystem(A, b, irredundant=True))
