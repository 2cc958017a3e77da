"""Exception hierarchy for lyapoqs."""


class LyapOQSError(Exception):
    """Base class for all lyapoqs errors."""


class ConfigError(LyapOQSError):
    """Invalid or malformed run configuration."""


class NonHermitianInput(LyapOQSError):
    """Input matrix expected to be Hermitian is not."""


class SiteOutOfRange(LyapOQSError):
    """Bath attachment site outside [0, n_sites)."""


class BosonicWideBand(LyapOQSError):
    """Wide-band spectral function attached to a bosonic bath."""


class BosonicMuAboveBand(LyapOQSError):
    """Bosonic chemical potential not strictly below the spectral support."""


class BosonicDivergence(LyapOQSError):
    """Bose occupation evaluated at or below the chemical potential."""


class QuadratureNonConvergence(LyapOQSError):
    """Frequency quadrature failed to reach the requested tolerance."""

    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class ScanHorizonExceeded(LyapOQSError):
    """Memory-time scan did not satisfy the tolerance within the horizon."""


class DegenerateSpectrum(LyapOQSError):
    """Operation requires a non-degenerate single-particle spectrum."""


class NonUniqueNESS(LyapOQSError):
    """Steady state is not unique (drift matrix has non-decaying modes)."""


class IllConditioned(LyapOQSError):
    """Linear solve too ill-conditioned to meet the residual target."""


class NearDefective(LyapOQSError):
    """Drift-matrix eigenvectors too ill-conditioned for spectral methods."""


class HermitizationDefect(LyapOQSError):
    """Computed correlation matrix deviated from Hermiticity beyond tolerance."""

    def __init__(self, message, defect=None):
        super().__init__(message)
        self.defect = defect


class RegimeRejected(LyapOQSError):
    """Weak-coupling regime condition not satisfied."""


class DarkStatePresent(LyapOQSError):
    """A system mode is detached from all baths."""


class ComplexHamiltonian(LyapOQSError):
    """Operation requires a real-symmetric Hamiltonian."""


class NotEquilibrium(LyapOQSError):
    """Operation requires all baths to share beta and mu."""


class NotTridiagonal(LyapOQSError):
    """Operation requires a 1D nearest-neighbour (tridiagonal) Hamiltonian."""


class NotSingleSite(LyapOQSError):
    """Operation requires a single-site system."""


class TooManySites(LyapOQSError):
    """Fock-space oracle limited to small site counts."""


class NonFermionic(LyapOQSError):
    """Operation implemented for fermionic statistics only."""


class RecurrenceHorizon(LyapOQSError):
    """Requested times exceed half the discretized-bath recurrence time."""


class DimensionTooLarge(LyapOQSError):
    """Total single-particle dimension exceeds the dense-solver limit."""
