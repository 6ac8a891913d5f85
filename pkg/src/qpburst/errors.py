"""Exception types shared across the package."""


class QpburstError(Exception):
    """Base class for package-specific errors."""


class ParameterError(QpburstError, ValueError):
    """Invalid physical or configuration parameter."""


class ResonanceSingularityError(QpburstError, ValueError):
    """Gap difference exactly on a qubit transition; the closed-form rate
    diverges logarithmically and the caller must offset the input."""


class QuadratureError(QpburstError, RuntimeError):
    """Adaptive quadrature failed to reach the requested accuracy."""

    def __init__(self, message, achieved_error=None):
        super().__init__(message)
        self.achieved_error = achieved_error


class NonPhysicalPopulationError(QpburstError, ValueError):
    """Excitation rate at or above relaxation rate; no temperature assignable."""


class FitError(QpburstError, RuntimeError):
    """Optimization failed or produced an unusable optimum."""


class UnsupportedTraceError(QpburstError, ValueError):
    """The trace does not carry the information the operation needs."""


class ConfigError(QpburstError, ValueError):
    """Malformed or inconsistent run configuration."""
