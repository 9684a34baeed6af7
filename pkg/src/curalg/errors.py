"""Exception types shared across the package."""


class CurrentAlgebraError(ValueError):
    """Base class for all domain errors raised by this package."""


class PoleError(CurrentAlgebraError):
    """A kernel or special function was evaluated at (or too close to) a pole."""


class DomainError(CurrentAlgebraError):
    """An argument lies outside the region where an operation is defined."""


class ConvergenceError(CurrentAlgebraError, ArithmeticError):
    """An iterative scheme (quadrature, series, extrapolation) failed to converge."""


class CoincidentPointError(CurrentAlgebraError):
    """Two generator points coincide where the structure kernels are singular."""


class ConfigError(CurrentAlgebraError):
    """Invalid configuration value or unparsable configuration file."""
