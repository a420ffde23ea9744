"""Exception hierarchy shared by all modules.

The CLI maps these onto its exit-code contract: parameter/domain/capacity
problems exit 2, resource caps exit 3, unmet preconditions exit 4.
"""


class MathieuError(Exception):
    """Base class for all library errors."""


class DomainError(MathieuError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class ParameterError(MathieuError, ValueError):
    """Parameter tuple violates a validity invariant."""


class CapacityError(MathieuError):
    """A fixed table (e.g. Bernoulli numbers) cannot serve the request."""


class ResourceLimitError(MathieuError):
    """Evaluation would exceed a configured term cap.

    Carries the cap and the best certified bound achieved before giving up.
    """

    def __init__(self, message, cap=None, bound_achieved=None):
        super().__init__(message)
        self.cap = cap
        self.bound_achieved = bound_achieved


class PreconditionError(MathieuError):
    """A stated precondition does not hold (e.g. radius outside the good set).

    ``diagnostics`` carries whatever context object the caller can use to
    report the failure.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics


class ContractViolationError(MathieuError):
    """A user-supplied callback broke a promise (e.g. monotonicity)."""


class NumericError(MathieuError):
    """Quadrature or iteration failed to converge to the requested accuracy."""
