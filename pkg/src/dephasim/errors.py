"""Exception hierarchy shared across the package.

Every error raised by dephasim derives from :class:`DephasimError`, so callers
can catch one base class.  The CLI and the HTTP service map these onto exit
codes / status codes: configuration-type errors (bad parameters, bad config
documents) are distinguished from numerical failures (quadrature that cannot
certify its tolerance, eigensolver breakdown).
"""


class DephasimError(Exception):
    """Base class for all package errors."""


class ParameterError(DephasimError, ValueError):
    """A constructor or operation received parameters outside its domain."""


class DomainError(DephasimError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ClassificationError(DephasimError):
    """Ohmicity class requested for a spectrum that does not declare one."""


class IntegrabilityError(DephasimError):
    """Profile parameters imply a divergent square-norm integral."""


class DegenerateCatError(DephasimError):
    """Cat-state normalization constant is numerically zero."""


class OverflowGuardError(DephasimError, ArithmeticError):
    """An exponent left the safe range; result would silently over/underflow."""


class ConvergenceError(DephasimError, RuntimeError):
    """Quadrature exhausted its budget before certifying the tolerance."""


class EigenFailure(DephasimError, RuntimeError):
    """Jacobi eigen-iteration failed to converge (should not occur at 4x4)."""


class UnsupportedSpectrumError(DephasimError):
    """Operation requires analytic tail knowledge the spectrum lacks."""


class ParseError(DephasimError, ValueError):
    """Config document is not well-formed."""


class ValidationError(DephasimError, ValueError):
    """Config document is well-formed but violates an invariant."""


#: Errors that indicate bad user input rather than a numerical failure.
CONFIG_ERRORS = (
    ParameterError,
    DomainError,
    ClassificationError,
    IntegrabilityError,
    DegenerateCatError,
    UnsupportedSpectrumError,
    ParseError,
    ValidationError,
)

#: Errors that indicate a numerical failure on valid input.
NUMERICAL_ERRORS = (ConvergenceError, OverflowGuardError, EigenFailure)
