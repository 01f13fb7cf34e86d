""" Exceptions raised by *mapoly*.

Bad input of any kind raises a subclass of :exc:`ValueError`, so callers who
don't care about the details can catch that one. :exc:`InvariantViolation`
is different: it means *mapoly* computed something inconsistent and is a bug
(or a wrong fixture), never a user error.
"""


class UnboundedSystem(ValueError):
    """ Halfspace system does not describe a bounded set. """


class EmptyOrLowerDimensional(ValueError):
    """ Halfspace system is empty or not full-dimensional. """


class DegenerateInput(ValueError):
    """ Point set or polytope does not span its ambient space. """


class NotReflexive(ValueError):
    """ Operation requires a reflexive polytope. """


class MissingBaseVertex(ValueError):
    """ The point (-1, ..., -1) is not a vertex of the polytope. """


class InconsistentConstraints(ValueError):
    """ An ansatz index received two distinct fixed values. """


#: Name used for template errors as seen from the obstruction engine.
TemplateInconsistent = InconsistentConstraints


class VariableCountMismatch(ValueError):
    """ Polynomials over different numbers of variables were combined. """


class TruncatedEvaluation(ValueError):
    """ A truncated polynomial can't be evaluated as if it was exact. """


class ZeroConstantTerm(ValueError):
    """ Polynomial has a vanishing constant term. """


class NegativeCoefficient(ValueError):
    """ Polynomial has a negative coefficient where none is allowed. """


class InvalidDegree(ValueError):
    """ Degree bound below what the obstruction engine needs. """


class UnsupportedDimension(ValueError):
    """ Dimension outside the range covered by the catalog. """


class DimensionMismatch(ValueError):
    """ Declared and actual dimension of some input disagree. """


class ParseError(ValueError):
    """ Malformed input file. The offending line is available as ``lineno``. """

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = 'line {}: {}'.format(lineno, message)
        super().__init__(message)
        self.lineno = lineno


class InvariantViolation(RuntimeError):
    """ Internal consistency check failed. """
