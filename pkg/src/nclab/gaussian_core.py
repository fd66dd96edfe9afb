"""Parameters of a displaced-squeezed thermal state and the amplifier Hamiltonian.

Units follow hbar = 1. Time-dependent quantities elsewhere in the package are
functions of the dimensionless scaled time ``x = Omega * tau`` with
``Omega = r / t_prep``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError


@dataclass(frozen=True)
class GaussianParams:
    """Physical parameters of the state ``D(alpha) S(xi) rho_thermal S(-xi) D(-alpha)``.

    Attributes
    ----------
    nbar : float
        Mean photon number of the initial thermal state.
    r : float
        Squeeze magnitude, ``xi = r * exp(i theta)``.
    theta : float
        Squeeze phase in radians.
    alpha_mag : float
        Coherent amplitude ``|alpha|``.
    phi : float
        Coherent phase in radians, ``alpha = |alpha| exp(i phi)``.
    t_prep : float
        Preparation time. Only the Fock oracle needs it, through ``Omega = r / t_prep``.
    """

    nbar: float
    r: float
    theta: float = 0.0
    alpha_mag: float = 0.0
    phi: float = 0.0
    t_prep: float = 1.0

    @classmethod
    def amplitude_quadrature(cls, nbar, r, alpha_mag=0.0, phi=0.0, t_prep=1.0):
        """Build parameters with the amplitude quadrature squeezed (``theta = 2 phi``)."""
        return cls(nbar, r, 2.0 * phi, alpha_mag, phi, t_prep)

    @property
    def alpha(self) -> complex:
        return self.alpha_mag * complex(math.cos(self.phi), math.sin(self.phi))

    @property
    def xi(self) -> complex:
        return self.r * complex(math.cos(self.theta), math.sin(self.theta))

    @property
    def omega(self) -> float:
        return self.r / self.t_prep

    @property
    def is_amplitude_quadrature(self) -> bool:
        return self.theta == 2.0 * self.phi

    def with_alpha(self, alpha_mag, phi=None) -> "GaussianParams":
        """Copy with a new coherent amplitude, keeping ``theta = 2 phi`` if it held."""
        phi = self.phi if phi is None else phi
        if self.is_amplitude_quadrature:
            return replace(self, alpha_mag=alpha_mag, phi=phi, theta=2.0 * phi)
        return replace(self, alpha_mag=alpha_mag, phi=phi)


def validate(params: GaussianParams) -> GaussianParams:
    """Return ``params`` unchanged, or raise :class:`DomainError` naming the bad field."""
    for name in ("nbar", "r", "theta", "alpha_mag", "phi", "t_prep"):
        value = getattr(params, name)
        if not math.isfinite(value):
            raise DomainError(name, f"must be finite, got {value!r}")
    for name in ("nbar", "r", "alpha_mag"):
        if getattr(params, name) < 0:
            raise DomainError(name, f"must be nonnegative, got {getattr(params, name)!r}")
    if params.t_prep <= 0:
        raise DomainError("t_prep", f"must be positive, got {params.t_prep!r}")
    return params


def check_time(params: GaussianParams, x):
    """Validate a scaled time (scalar or array) against ``params``.

    Dynamics need ``r > 0``; with ``r = 0`` only the static state at ``x = 0``
    is defined.
    """
    validate(params)
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)):
        raise DomainError("x", "scaled time must be finite")
    if np.any(xs < 0):
        raise DomainError("x", "scaled time must be nonnegative")
    if params.r == 0 and np.any(xs > 0):
        raise DomainError("r", "r = 0 admits no dynamics (x > 0 requires r > 0)")
    return x


def hamiltonian_coeffs(params: GaussianParams) -> tuple[complex, complex]:
    """Coefficients ``(c, b)`` of ``H = c a+^2 + c* a^2 + b a + b* a+`` that
    prepare the state from the thermal state in time ``t_prep``."""
    validate(params)
    if params.r == 0:
        raise DomainError("r", "coth(r/2) is singular at r = 0")
    r, t = params.r, params.t_prep
    e_theta = complex(math.cos(params.theta), math.sin(params.theta))
    alpha = params.alpha
    c = -0.5j * r * e_theta / t
    b = -0.5j * (alpha / e_theta + alpha.conjugate() / math.tanh(r / 2)) * r / t
    return c, b
