"""Exception hierarchy shared across the package."""


class DbvpError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(DbvpError, ValueError):
    """A grid function was used outside its index domain, or domains disagree."""


class EvaluationError(DbvpError, ArithmeticError):
    """A nonlinearity or expression could not be evaluated to a finite real."""


class BoundViolation(DbvpError, ArithmeticError):
    """A truncated nonlinearity exceeded its claimed global bound M."""


class SpecError(DbvpError, ValueError):
    """A problem file is malformed or fails validation."""
