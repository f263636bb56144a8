"""Exception types shared across the package."""


class EisenError(Exception):
    """Base class for all domain errors raised by this package."""


class NoRepresentation(EisenError):
    """The integer has no coprime positive representation a^2 + ab + b^2."""


class InvariantViolation(EisenError):
    """An internally guaranteed invariant failed; indicates a bug, not bad input."""


class Degenerate(EisenError):
    """Sign normalization hit the mixed-sign |a| = |b| case, which has no positive form."""


class InvalidParams(EisenError):
    """Generator parameters violate coprimality/ordering/congruence preconditions."""


class NonDivisible(EisenError):
    """A component expected to be divisible by 3 was not (precondition-logic bug)."""


class NotRepresentable(EisenError):
    """The requested chord cannot be realized by a rotation with coordinates in Q(sqrt 3)."""


class ConstructionFailed(EisenError):
    """No candidate orientation of a figure satisfies its expected distance table."""


class NotConcyclic(EisenError):
    """Points expected to lie on one common circle do not."""
