"""Exception hierarchy.

``HypothesisViolation`` subclasses mean the input (or the chosen slice
degree) does not meet the assumptions the method needs; ``InternalError``
subclasses mean an invariant that should always hold was broken.
"""


class ImplicitizationError(Exception):
    pass


class ParseError(ImplicitizationError, ValueError):
    pass


class HypothesisViolation(ImplicitizationError):
    pass


class InternalError(ImplicitizationError):
    pass


class DegenerateMap(HypothesisViolation):
    """The parameterization is not generically finite (curve gcd of full degree)."""


class RankDeficient(HypothesisViolation):
    """Fewer independent columns than required after all evaluation retries."""


class NotGenericallyExact(HypothesisViolation):
    """The graded slice is not exact over the fraction field of the targets."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class InexactDivision(InternalError, ArithmeticError):
    pass


class Inconsistent(InternalError):
    """A linear system that must be solvable has no solution."""


class ComplexPropertyViolated(InternalError):
    pass


class OracleFailed(InternalError):
    """The computed determinant does not vanish on the parameterization."""
