""" Unimodular equivalence of lattice polytopes and a brute force
enumeration of smooth reflexive polygons, used as an independent check of
the 2-dimensional part of the catalog.
"""

import itertools
import logging
import math
from collections import namedtuple

from . import linalg
from .polytope import Polytope, HalfspaceSystem, barycenter, is_delzant, is_reflexive
from .errors import InvariantViolation

log = logging.getLogger(__name__)

#: Unimodular matrix ``U`` (tuple of rows) and translation ``t`` such that
#: every vertex ``v`` of the first polytope satisfies ``U v = w + t`` for a
#: vertex ``w`` of the second one.
Equivalence = namedtuple('Equivalence', ['matrix', 'translation'])

#: Result of :func:`enumerate_smooth_reflexive_2d`.
Enumeration = namedtuple('Enumeration', ['classes', 'barycentric'])

DEFAULT_BOX = 4


def _spanning_neighbours(polytope, index):
    """ ``n`` neighbours of a vertex whose edge directions are linearly
    independent. """
    v = polytope.vertices[index]
    chosen, rows = [], []
    for j in polytope.edges[index]:
        candidate = rows + [[x - y for x, y in zip(polytope.vertices[j], v)]]
        if linalg.rank(candidate) == len(candidate):
            chosen.append(j)
            rows = candidate
        if len(chosen) == polytope.dim:
            break
    return chosen


def _integral_matrix(matrix):
    if any(x.denominator != 1 for row in matrix for x in row):
        return None
    return tuple(tuple(int(x) for x in row) for row in matrix)


def unimodular_equivalent(first, second):
    """ Find a unimodular affine map taking the vertex set of ``first`` onto
    the vertex set of ``second``.

    Any such map takes edges to edges, so it's determined by the image of one
    vertex and of ``n`` independent edges at that vertex. All vertices of
    ``second`` with the same number of edges, and all ordered choices of
    their edges, are tried.

    :return: An :class:`Equivalence` or ``None``.
    """
    if first.dim != second.dim or len(first.vertices) != len(second.vertices):
        return None
    if len(first.lattice_points) != len(second.lattice_points):
        return None
    n = first.dim
    base = 0
    basis = _spanning_neighbours(first, base)
    v0 = first.vertices[base]
    source = [[x - y for x, y in zip(first.vertices[j], v0)] for j in basis]
    source_inverse = linalg.inverse(source)
    target_vertices = set(second.vertices)
    degree = len(first.edges[base])

    for w_index, w0 in enumerate(second.vertices):
        neighbours = second.edges[w_index]
        if len(neighbours) != degree:
            continue
        for images in itertools.permutations(neighbours, n):
            target = [[x - y for x, y in zip(second.vertices[j], w0)] for j in images]
            # rows are edge vectors, so this is U transposed
            transposed = _integral_matrix(linalg.matmul(source_inverse, target))
            if transposed is None:
                continue
            U = tuple(zip(*transposed))
            if abs(linalg.det(U)) != 1:
                continue
            shift = [x - y for x, y in zip(linalg.matvec(U, v0), w0)]
            if any(x.denominator != 1 for x in shift):
                continue
            mapped = set(tuple(x - s for x, s in zip(linalg.matvec(U, v), shift)) for v in first.vertices)
            if mapped == target_vertices:
                return Equivalence(U, tuple(int(x) for x in shift))
    return None


def _signature(polygon):
    """ Cheap invariant separating most classes before the exact test. """
    lengths = sorted(polygon.edge_direction(i, j)[1] for i in polygon.edges for j in polygon.edges[i] if i < j)
    return len(polygon.vertices), len(polygon.lattice_points), tuple(lengths)


def _polygon(cycle):
    """ Polygon from a counter clockwise vertex cycle around the origin whose
    edges all have lattice distance 1 from it. """
    normals = []
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        normal, _ = linalg.primitive((b[1] - a[1], a[0] - b[0]))
        normals.append(normal)
    return Polytope(cycle, HalfspaceSystem(normals, irredundant=True))


def _cycles(box):
    """ All strictly convex counter clockwise lattice polygons with vertices in
    ``[-box, box]^2`` whose only interior lattice point is the origin.

    Each fan triangle ``0, v, w`` must be free of lattice points other than
    its vertices and those on the edge ``vw``. By Pick's formula that means
    ``det(v, w) == gcd(w - v)``. Cycles start at their lexicographically
    least vertex.
    """
    points = [p for p in itertools.product(range(-box, box + 1), repeat=2)
              if math.gcd(*p) == 1]

    def det(u, v):
        return u[0] * v[1] - u[1] * v[0]

    def fan_step(u, v):
        return det(u, v) > 0 and det(u, v) == math.gcd(v[0] - u[0], v[1] - u[1])

    def convex(a, b, c):
        return det((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1])) > 0

    def angle(p, start):
        return (math.atan2(p[1], p[0]) - math.atan2(start[1], start[0])) % (2 * math.pi)

    found = []

    def extend(path, last_angle):
        current = path[-1]
        if len(path) >= 3 and fan_step(current, path[0]) \
                and convex(path[-2], current, path[0]) and convex(current, path[0], path[1]):
            found.append(list(path))
        for p in points:
            if p <= path[0] or not fan_step(current, p):
                continue
            if len(path) >= 2 and not convex(path[-2], current, p):
                continue
            a = angle(p, path[0])
            if a <= last_angle:
                continue
            path.append(p)
            extend(path, a)
            path.pop()

    for start in points:
        extend([start], 0.0)
    return found


def enumerate_smooth_reflexive_2d(box=DEFAULT_BOX):
    """ Brute force the smooth reflexive polygons up to unimodular
    equivalence.

    Every lattice polygon in ``[-box, box]^2`` with the origin as its only
    interior lattice point is generated, grouped into unimodular classes and
    then filtered by :func:`is_reflexive` and :func:`is_delzant`. Each class is
    represented by a member of smallest maximum norm; a representative
    touching the box boundary means the box was too small and raises
    :exc:`InvariantViolation`.

    :return: An :class:`Enumeration` with all class representatives and
             those having their barycenter at the origin.
    """
    classes = []
    polygons = 0
    for cycle in _cycles(box):
        polygons += 1
        polygon = _polygon(cycle)
        signature = _signature(polygon)
        norm = max(abs(x) for v in polygon.vertices for x in v)
        for entry in classes:
            if entry[0] == signature and unimodular_equivalent(polygon, entry[2]) is not None:
                if norm < entry[1]:
                    entry[1], entry[2] = norm, polygon
                break
        else:
            classes.append([signature, norm, polygon])
    log.info('Enumerated {} polygons with one interior lattice point in {} classes'.format(
        polygons, len(classes)))

    for _, norm, polygon in classes:
        if norm >= box:
            raise InvariantViolation('Class representative {} touches the enumeration box'.format(
                polygon.vertices))

    smooth = [p for _, _, p in classes if is_reflexive(p) and is_delzant(p)]
    smooth.sort(key=lambda p: (len(p.vertices), p.vertices))
    centred = [p for p in smooth if all(x == 0 for x in barycenter(p))]
    log.info('{} smooth reflexive classes, {} with barycenter at the origin'.format(
        len(smooth), len(centred)))
    return Enumeration(smooth, centred)
