"""Text formats for polytopes and polynomials.

Polytope files start with a ``dim <n>`` header followed by one section:

``hrep``
    one facet row of ``n`` integers per line, right hand side 1;
``hrep-b``
    ``n + 1`` integers per line, the last one being the right hand side;
``vrep``
    one vertex of ``n`` rationals (``p/q`` or integers) per line.

Polynomial files hold one term per line: a rational coefficient followed by
the exponent vector.

In both formats ``#`` starts a comment and blank lines are ignored.
"""

import logging
import pathlib
from fractions import Fraction

from . import __version__, githash
from .errors import ParseError, DimensionMismatch
from .polytope import HalfspaceSystem, vertices_of, facets_of
from .poly import PolyQ

log = logging.getLogger(__name__)

HREP = 'hrep'
HREP_B = 'hrep-b'
VREP = 'vrep'
SECTIONS = (HREP, HREP_B, VREP)


def crumbs():
    """ Comment line naming the version and git hash, written on top of
    every exported file. """
    return '# Exported by mapoly {} (git hash {})\n'.format(__version__, githash())


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield lineno, line.split()


def _integer(token, lineno):
    try:
        return int(token)
    except ValueError:
        raise ParseError('{!r} is not an integer'.format(token), lineno)


def _rational(token, lineno):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError('{!r} is not a rational number'.format(token), lineno)


class PolytopeFile:
    """ Reading and writing the polytope text format.

    An example::

        from mapoly.formats import PolytopeFile

        hexagon = PolytopeFile.load('hexagon.txt')
        print(PolytopeFile.dumps(hexagon, PolytopeFile.VREP))
    """

    HREP = HREP
    HREP_B = HREP_B
    VREP = VREP

    @staticmethod
    def loads(text):
        """ Parse the polytope text format.

        :raises ParseError: On malformed input, with the line number.
        :raises DimensionMismatch: When a row doesn't match the declared
                dimension.
        """
        lines = list(_content_lines(text))
        if not lines:
            raise ParseError('Empty polytope file')
        lineno, tokens = lines[0]
        if len(tokens) != 2 or tokens[0] != 'dim':
            raise ParseError('Expected header "dim <n>"', lineno)
        n = _integer(tokens[1], lineno)
        if n < 1:
            raise ParseError('Dimension must be positive, got {}'.format(n), lineno)
        if len(lines) < 2:
            raise ParseError('Missing section after header', lineno)
        lineno, tokens = lines[1]
        if len(tokens) != 1 or tokens[0] not in SECTIONS:
            raise ParseError('Expected one of {}'.format(', '.join(SECTIONS)), lineno)
        section = tokens[0]
        width = n + 1 if section == HREP_B else n
        rows = []
        for lineno, tokens in lines[2:]:
            if len(tokens) != width:
                raise DimensionMismatch('line {}: expected {} entries, got {}'.format(lineno, width, len(tokens)))
            if section == VREP:
                rows.append([_rational(t, lineno) for t in tokens])
            else:
                rows.append([_integer(t, lineno) for t in tokens])
        if not rows:
            raise ParseError('Section {} is empty'.format(section), lines[1][0])

        if section == VREP:
            return facets_of(rows)
        if section == HREP:
            return vertices_of(HalfspaceSystem(rows))
        return vertices_of(HalfspaceSystem([r[:-1] for r in rows], [r[-1] for r in rows]))

    @staticmethod
    def load(path):
        """ Load a polytope from a file.

        :param path: A `path-like object`_.

        .. _path-like object: https://docs.python.org/3/glossary.html#term-path-like-object
        """
        path = pathlib.Path(path)
        log.info('Reading polytope from {}'.format(path))
        try:
            return PolytopeFile.loads(path.read_text(encoding='utf-8'))
        except ParseError:
            log.exception('Parsing {} failed'.format(path))
            raise

    @staticmethod
    def dumps(polytope, representation=None):
        """ Text of a polytope. By default facets are written as ``hrep`` when
        all right hand sides are 1 and as ``hrep-b`` otherwise. """
        facets = polytope.facets
        if representation is None:
            representation = HREP if all(b == 1 for b in facets.b) else HREP_B
        lines = [crumbs().rstrip('\n'), 'dim {}'.format(polytope.dim), representation]
        if representation == VREP:
            lines.extend(' '.join(str(x) for x in v) for v in polytope.vertices)
        elif representation == HREP:
            if any(b != 1 for b in facets.b):
                raise ValueError('{} has right hand sides other than 1'.format(polytope))
            lines.extend(' '.join(str(x) for x in row) for row in facets.A)
        elif representation == HREP_B:
            if any(b.denominator != 1 for b in facets.b):
                raise ValueError('{} has non-integral right hand sides'.format(polytope))
            lines.extend(' '.join(str(x) for x in row + (b,)) for row, b in facets)
        else:
            raise ValueError('Unknown representation {}'.format(representation))
        return '\n'.join(lines) + '\n'

    @staticmethod
    def save(polytope, path, representation=None):
        path = pathlib.Path(path)
        log.info('Writing {} to {}'.format(polytope, path))
        path.write_text(PolytopeFile.dumps(polytope, representation), encoding='utf-8')
        return path


class PolynomialFile:
    """ Reading and writing the polynomial text format (``p/q e1 ... en`` per
    line). """

    @staticmethod
    def loads(text, nvars=None):
        """ Parse a parameter-free polynomial. Repeated monomials add up.

        :param nvars: Expected number of variables; taken from the first term
               when omitted.
        """
        terms = {}
        for lineno, tokens in _content_lines(text):
            if nvars is None:
                nvars = len(tokens) - 1
                if nvars < 1:
                    raise ParseError('Term without exponents', lineno)
            if len(tokens) != nvars + 1:
                raise DimensionMismatch('line {}: expected {} exponents, got {}'.format(
                    lineno, nvars, len(tokens) - 1))
            value = _rational(tokens[0], lineno)
            exponents = tuple(_integer(t, lineno) for t in tokens[1:])
            if any(e < 0 for e in exponents):
                raise ParseError('Negative exponent', lineno)
            terms[exponents] = terms.get(exponents, 0) + value
        if nvars is None:
            raise ParseError('Empty polynomial file')
        return PolyQ(nvars, terms)

    @staticmethod
    def load(path, nvars=None):
        path = pathlib.Path(path)
        log.info('Reading polynomial from {}'.format(path))
        try:
            return PolynomialFile.loads(path.read_text(encoding='utf-8'), nvars)
        except ParseError:
            log.exception('Parsing {} failed'.format(path))
            raise

    @staticmethod
    def dumps(polynomial):
        lines = [crumbs().rstrip('\n')]
        for m, c in polynomial.items():
            lines.append('{} {}'.format(c, ' '.join(str(e) for e in m)))
        return '\n'.join(lines) + '\n'


def load_polytope(path):
    """ Load a polytope file, see :class:`PolytopeFile`. """
    return PolytopeFile.load(path)
