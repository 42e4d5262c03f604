"""Exception hierarchy shared across the toolkit.

Errors are split into input/usage problems (ValueError family) and
numerical/physical failures discovered at run time (RuntimeError family).
"""


class RingQEDError(Exception):
    """Base class for all toolkit-specific errors."""


class WavelengthRangeError(RingQEDError, ValueError):
    """Wavelength outside the validity band of a dispersion model."""


class PoleError(RingQEDError, ValueError):
    """Evaluation requested at (or too close to) a resonance pole."""


class GeometryError(RingQEDError, ValueError):
    """Inconsistent geometry: misaligned grids, broken concentricity, ..."""


class DomainError(RingQEDError, ValueError):
    """Requested point lies outside the solved domain."""


class ConfigError(RingQEDError, ValueError):
    """Invalid or incomplete configuration input."""


class NoGuidedModeError(RingQEDError, RuntimeError):
    """The cross-section supports no guided mode above the cladding index."""


class EigensolverError(RingQEDError, RuntimeError):
    """Sparse eigensolver failed to converge.

    Attributes
    ----------
    diagnostics : dict
        Iteration counts / partial results from the underlying solver.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class SingularityError(RingQEDError, RuntimeError):
    """Division by a vanishing field value or rate."""


class FitError(RingQEDError, RuntimeError):
    """Nonlinear least squares failed to converge.

    Attributes
    ----------
    diagnostics : dict
        Optimizer status, message and residual history.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class InsufficientSignalError(RingQEDError, RuntimeError):
    """Spectrum feature too shallow relative to the noise level."""


class CriticalCouplingNotFound(RingQEDError, RuntimeError):
    """kappa_c never crosses kappa_i in the searched range.

    Attributes
    ----------
    best_mismatch : float
        Achieved minimum |kappa_c - kappa_i| (rad/s) over the range.
    """

    def __init__(self, message, best_mismatch=float("nan")):
        super().__init__(message)
        self.best_mismatch = best_mismatch


class UntrappedError(RingQEDError, RuntimeError):
    """Potential map contains no bound minimum above the surface."""
