"""Graded coefficient matching.

Given an :class:`~mapoly.ansatz.AnsatzTemplate`, :func:`obstruct` decides
whether some admissible choice of the free coefficients can make the
Monge-Ampère residual vanish. It works degree by degree: the residual
truncated at degree ``D`` only involves coefficients with index degree at
most ``D + 1``, and its coefficients of degree at most ``D`` must all be
zero. Sending ``x_a`` to minus infinity in the original coordinates means
``y_a`` goes to zero, so the lowest degrees are exactly what iterated limits
of derivatives of the equation see.

The equations are attacked with exact linear elimination, sign reasoning on
the nonnegative parameters and, for a single remaining parameter, exact real
root isolation. Anything harder is reported as :class:`Inconclusive`.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from . import linalg
from .errors import InvalidDegree
from .poly import Monomial, Coefficient
from .monge_ampere import residual, verify_solution, SYMBOLIC, SAMPLED

log = logging.getLogger(__name__)

DEFAULT_MAX_DEGREE = 4

#: Reasons attached to a :class:`CoefficientObstruction`.
NONZERO = 'nonzero'
INCONSISTENT = 'inconsistent'
SIGN = 'sign'
POSITIVITY = 'positivity'


def _monomial_json(monomial):
    return {'exponents': list(monomial), 'text': str(monomial)}


@dataclass(frozen=True)
class Solution:
    """ The template is solved by ``witness``. """
    witness: object
    verification: object = None

    @property
    def kind(self):
        return 'Solution'

    def to_json(self):
        return {
            'verdict': self.kind,
            'witness': self.witness.to_json(),
            'verification': None if self.verification is None else self.verification.to_json(),
        }


@dataclass(frozen=True)
class RelationObstruction:
    """ No ``(k, H)`` profile satisfies the edge relations; ``failed`` names
    the relation ruling the polytope out. """
    failed: str
    k: tuple
    h_max: tuple

    @property
    def kind(self):
        return 'RelationObstruction'

    def to_json(self):
        return {
            'verdict': self.kind,
            'failed': self.failed,
            'k': list(self.k),
            'h_max': [list(row) for row in self.h_max],
        }


@dataclass(frozen=True)
class CoefficientObstruction:
    """ A residual coefficient (or a linear combination of them, see
    ``combination``) can't vanish for any admissible parameters.

    ``certificate`` is that coefficient with ``fixed_assignment`` already
    substituted. For ``reason`` ``'nonzero'`` and ``'inconsistent'`` it is a
    nonzero rational; for ``'sign'`` it keeps a constant sign on
    nonnegative parameters; for ``'positivity'`` it forces a vertex
    coefficient to zero.
    """
    monomial: Monomial
    certificate: Coefficient
    degree: int
    reason: str = NONZERO
    fixed_assignment: dict = field(default_factory=dict)
    combination: tuple = ()
    names: tuple = ()

    @property
    def kind(self):
        return 'CoefficientObstruction'

    def to_json(self):
        names = list(self.names) or None
        return {
            'verdict': self.kind,
            'monomial': _monomial_json(self.monomial),
            'degree': self.degree,
            'reason': self.reason,
            'certificate': self.certificate.to_json(names),
            'fixed_assignment': {self._name(i): str(v) for i, v in sorted(self.fixed_assignment.items())},
            'combination': [[_monomial_json(m), str(f)] for m, f in self.combination],
        }

    def _name(self, index):
        return self.names[index] if index < len(self.names) else 'a{}'.format(index)


@dataclass(frozen=True)
class Inconclusive:
    """ ``degree_reached`` was hit with equations left unresolved. """
    degree_reached: int
    unresolved: tuple = ()
    fixed_assignment: dict = field(default_factory=dict)
    names: tuple = ()

    @property
    def kind(self):
        return 'Inconclusive'

    def to_json(self):
        names = list(self.names) or None
        return {
            'verdict': self.kind,
            'degree_reached': self.degree_reached,
            'unresolved': [[_monomial_json(m), c.to_json(names)] for m, c in self.unresolved],
        }


class _Contradiction(Exception):
    """ Internal: carries the obstruction out of the solving loop. """

    def __init__(self, obstruction):
        super().__init__(obstruction.reason)
        self.obstruction = obstruction


def _linear_coefficient(coefficients, rhs):
    """ ``sum coefficients[i] * a_i - rhs`` as a :class:`Coefficient`. """
    terms = {((i, 1),): v for i, v in coefficients.items()}
    terms[()] = -rhs
    return Coefficient(terms)


class _Solver(object):
    """ State of the elimination for one template: the assignment found so
    far and the equations of the current degree. """

    def __init__(self, template):
        self.template = template
        self.names = tuple(template.parameter_names)
        self.assignment = {}
        self.positive = set(template.parameter_index(m) for m in template.positive_required
                            if m in set(template.free))
        self.degree = 0

    def obstruction(self, monomial, certificate, reason, combination=()):
        return _Contradiction(CoefficientObstruction(
            monomial=Monomial(monomial), certificate=certificate, degree=self.degree, reason=reason,
            fixed_assignment=dict(self.assignment), combination=tuple(combination), names=self.names))

    def assign(self, index, value, monomial, certificate, combination=()):
        value = Fraction(value)
        if index in self.assignment:
            if self.assignment[index] != value:
                raise self.obstruction(monomial, certificate, INCONSISTENT, combination)
            return
        if value < 0:
            raise self.obstruction(monomial, certificate, SIGN, combination)
        if value == 0 and index in self.positive:
            raise self.obstruction(monomial, certificate, POSITIVITY, combination)
        log.debug('Degree {}: {} = {}'.format(self.degree, self.names[index], value))
        self.assignment[index] = value

    def substitute(self, equations):
        return [(m, c.substitute(self.assignment)) for m, c in equations]

    def check_constants(self, equations):
        for m, c in equations:
            if c.is_constant() and not c.is_zero():
                raise self.obstruction(m, c, NONZERO)

    def linear_step(self, equations):
        """ Row reduce the affine equations, keeping track of which original
        equations every reduced row combines. Returns whether parameters got
        determined. """
        linear = [(m, c.linear_form()) for m, c in equations if not c.is_zero()]
        linear = [(m, form) for m, form in linear if form is not None and form[0]]
        if not linear:
            return False
        unknowns = sorted(set(i for _, (coefficients, _) in linear for i in coefficients))
        matrix = [[coefficients.get(i, Fraction(0)) for i in unknowns] for _, (coefficients, _) in linear]
        constants = [-constant for _, (_, constant) in linear]
        reduced, transform, _ = linalg.row_reduce(matrix)

        progress = False
        for row, weights in zip(reduced, transform):
            coefficients = {unknowns[c]: x for c, x in enumerate(row) if x != 0}
            rhs = linalg.dot(weights, constants)
            combination = [(linear[k][0], w) for k, w in enumerate(weights) if w != 0]
            anchor = max(m for m, _ in combination)
            certificate = _linear_coefficient(coefficients, rhs)
            if not coefficients:
                if rhs != 0:
                    raise self.obstruction(anchor, certificate, INCONSISTENT, combination)
                continue
            signs = set(v > 0 for v in coefficients.values())
            if len(signs) == 1:
                positive = signs.pop()
                # all coefficients share a sign and the parameters are >= 0
                if (rhs < 0) if positive else (rhs > 0):
                    raise self.obstruction(anchor, certificate, SIGN, combination)
                if rhs == 0:
                    for i in coefficients:
                        self.assign(i, 0, anchor, certificate, combination)
                    progress = True
                    continue
            if len(coefficients) == 1:
                (i, v), = coefficients.items()
                self.assign(i, rhs / v, anchor, certificate, combination)
                progress = True
        return progress

    def univariate_step(self, equations):
        """ Nonlinear equations in a single parameter: assign the unique
        admissible rational root, or fail when there is none. """
        progress = False
        for m, c in equations:
            parameters = c.parameters
            if len(parameters) != 1 or c.degree < 2:
                continue
            index = parameters[0]
            if index in self.assignment:
                continue
            symbol = sympy.Symbol(self.names[index])
            symbols = {index: symbol}
            roots = sympy.Poly(c.to_sympy(symbols), symbol).real_roots()
            strict = index in self.positive
            admissible = sorted(set(r for r in roots if (r.is_positive if strict else r.is_nonnegative)),
                                key=sympy.default_sort_key)
            if not admissible:
                raise self.obstruction(m, c, SIGN)
            if len(admissible) == 1 and admissible[0].is_Rational:
                root = admissible[0]
                self.assign(index, Fraction(int(root.p), int(root.q)), m, c)
                progress = True
        return progress

    def solve(self, equations):
        """ Run the steps until nothing changes. Returns the equations left
        over. """
        while True:
            equations = self.substitute(equations)
            self.check_constants(equations)
            if self.linear_step(equations):
                continue
            if self.univariate_step(equations):
                continue
            return [(m, c) for m, c in equations if not c.is_zero()]


def _equations(template, assignment, degree):
    P = template.polynomial().substitute(assignment).truncate(degree + 1)
    R = residual(P, degree)
    return [(m, Coefficient(R.coefficient(m))) for m in Monomial.all_up_to(template.dim, degree)]


def _verify(candidate, symbolic_max_dim, trials, seed):
    if candidate.nvars <= symbolic_max_dim:
        return verify_solution(candidate, SYMBOLIC)
    return verify_solution(candidate, SAMPLED, trials, seed)


def obstruct(template, max_degree=DEFAULT_MAX_DEGREE, symbolic_max_dim=3, trials=20, seed=1):
    """ Decide the template degree by degree up to ``max_degree``.

    :param template: An :class:`~mapoly.ansatz.AnsatzTemplate`.
    :param max_degree: Largest residual degree examined, at least 2.
    :param symbolic_max_dim: Candidates in more variables are verified by
           sampling with ``trials`` and ``seed``.
    :return: :class:`Solution`, :class:`CoefficientObstruction` or
             :class:`Inconclusive`.
    """
    if max_degree < 2:
        raise InvalidDegree('Maximum degree must be at least 2, got {}'.format(max_degree))
    solver = _Solver(template)
    free = set(range(len(template.free)))

    fixed = template.fixed
    for m in template.positive_required:
        if m in fixed and fixed[m] == 0:
            log.info('Vertex coefficient {} is fixed to zero'.format(m))
            return CoefficientObstruction(m, Coefficient(0), m.degree, POSITIVITY, names=solver.names)

    remaining = []
    verified_failure = False
    try:
        for degree in range(1, max_degree + 1):
            solver.degree = degree
            remaining = solver.solve(_equations(template, solver.assignment, degree))
            log.info('Degree {}: {} parameters determined, {} equations open'.format(
                degree, len(solver.assignment), len(remaining)))
            if free <= set(solver.assignment) and not remaining and not verified_failure:
                candidate = template.polynomial(solver.assignment)
                if template.admits(candidate):
                    verification = _verify(candidate, symbolic_max_dim, trials, seed)
                    if verification:
                        log.info('Template solved at degree {} by {}'.format(degree, candidate))
                        return Solution(candidate, verification)
                verified_failure = True
                log.info('All parameters determined, candidate fails, continuing')
    except _Contradiction as e:
        log.info('Obstruction at degree {}: {}'.format(e.obstruction.degree, e.obstruction.monomial))
        return e.obstruction

    if free <= set(solver.assignment):
        obstruction = _lowest_nonzero(template, solver, max_degree)
        if obstruction is not None:
            return obstruction
    log.info('Inconclusive at degree {}'.format(max_degree))
    return Inconclusive(max_degree, tuple(remaining), dict(solver.assignment), solver.names)


def _lowest_nonzero(template, solver, start):
    """ Every parameter is known but the candidate isn't a solution: look
    for the first nonzero residual coefficient above ``start``. """
    candidate = template.polynomial(solver.assignment)
    bound = (2 * template.dim - 1) * candidate.degree + 1
    for degree in range(start + 1, bound + 1):
        solver.degree = degree
        R = residual(candidate.truncate(degree + 1), degree)
        for m in Monomial.all_up_to(template.dim, degree):
            value = Coefficient(R.coefficient(m))
            if not value.is_zero():
                return solver.obstruction(m, value, NONZERO).obstruction
    return None
