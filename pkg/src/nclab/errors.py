"""Exception hierarchy shared by every nclab module."""


class NclabError(Exception):
    """Base class for all library errors."""


class DomainError(NclabError, ValueError):
    """A parameter lies outside the domain of the requested quantity."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class DegenerateState(NclabError, ValueError):
    """The state carries no photons, so a normalized quantity is undefined."""


class NonclassicalRegion(NclabError):
    """The P function is not a genuine distribution at these parameters."""

    def __init__(self, margin):
        self.margin = margin
        super().__init__(
            f"P(beta) does not exist as a distribution (margin={margin:.6g} < 0)"
        )


class DegenerateDistribution(NclabError):
    """The P function collapses to a delta function at ``center``."""

    def __init__(self, center):
        self.center = complex(center)
        super().__init__(f"P(beta) is a delta function at beta={self.center:.12g}")


class TruncationError(NclabError):
    """Fock-space truncation is too small to hold the state."""

    def __init__(self, dim, leakage):
        self.dim = dim
        self.leakage = leakage
        super().__init__(
            f"population {leakage:.3e} in the top Fock levels exceeds the gate (dim={dim})"
        )


class NoBracket(NclabError):
    """A root finder could not bracket a sign change."""
