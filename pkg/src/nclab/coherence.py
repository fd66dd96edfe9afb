"""Two-time second-order coherence g2(x) of the evolving Gaussian state.

The state prepared at time ``t_prep`` keeps evolving under the amplifier
Hamiltonian; ``x = Omega * tau`` is the scaled delay between the two photon
annihilations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DegenerateState, DomainError
from .gaussian_core import GaussianParams, check_time, validate

#: Imaginary residue tolerated in quantities that must be real.
IMAG_TOL = 1e-12


@dataclass(frozen=True)
class CoherenceIngredients:
    a_tau: complex
    n_tau: float
    s_tau: float
    u_tau: float
    v_tau: float
    mean_n0: float
    mean_n_tau: float


def amplitude_A(params: GaussianParams, x):
    """Mean field ``<a(tau)>``; equals ``alpha`` at ``x = 0``.

    Accepts a scalar or an array of scaled times.
    """
    check_time(params, x)
    alpha = params.alpha
    out = kernels.amplitude(params.r, params.theta, alpha.real, alpha.imag, np.atleast_1d(np.asarray(x, dtype=float)))
    return complex(out[0]) if np.ndim(x) == 0 else out.reshape(np.shape(x))


def mean_photon_number(params: GaussianParams, x):
    """``<n(tau)> = (nbar + 1/2) cosh 2(x + r) + |A|^2 - 1/2``."""
    a = amplitude_A(params, x)
    return (params.nbar + 0.5) * np.cosh(2 * (np.asarray(x, dtype=float) + params.r)) + np.abs(a) ** 2 - 0.5


def ingredients(params: GaussianParams, x: float) -> CoherenceIngredients:
    x = float(check_time(params, x))
    k = params.nbar + 0.5
    r = params.r
    alpha = params.alpha
    a = amplitude_A(params, x)
    n = k * math.cosh(x + 2 * r) - 0.5 * math.cosh(x)
    s = k * math.sinh(x + 2 * r) - 0.5 * math.sinh(x)
    u = alpha * a.conjugate() + alpha.conjugate() * a
    e_theta = complex(math.cos(params.theta), math.sin(params.theta))
    v = alpha * a / e_theta + (alpha * a).conjugate() * e_theta
    for name, value in (("u", u), ("v", v)):
        if abs(value.imag) > IMAG_TOL * max(1.0, abs(value)):
            raise ArithmeticError(f"{name}(tau) has imaginary part {value.imag:.3e}")
    mean_n0 = k * math.cosh(2 * r) + abs(alpha) ** 2 - 0.5
    mean_nt = k * math.cosh(2 * (x + r)) + abs(a) ** 2 - 0.5
    return CoherenceIngredients(a, n, s, u.real, v.real, mean_n0, mean_nt)


def _require_photons(params: GaussianParams) -> None:
    if params.nbar == 0 and params.r == 0 and params.alpha_mag == 0:
        raise DegenerateState("g2 is undefined for the vacuum (<n(0)> = 0)")


def g2(params: GaussianParams, x: float) -> float:
    """Normalized intensity correlation between annihilations separated by ``x``."""
    _require_photons(params)
    x = float(check_time(params, x))
    if x + 2 * params.r > kernels.OVERFLOW_X:
        return g2_asymptote(params)
    ing = ingredients(params, x)
    num = ing.n_tau**2 + ing.s_tau**2 + ing.u_tau * ing.n_tau - ing.v_tau * ing.s_tau
    return 1.0 + num / (ing.mean_n0 * ing.mean_n_tau)


def g2_curve(params: GaussianParams, xs) -> np.ndarray:
    """Vectorized :func:`g2` on an array of scaled times (compiled backend when built)."""
    _require_photons(params)
    xs = np.asarray(xs, dtype=float)
    check_time(params, xs)
    g_inf = g2_asymptote(params) if params.r > 0 else math.nan
    alpha = params.alpha
    return kernels.g2_curve(params.nbar, params.r, params.theta, alpha.real, alpha.imag, xs, g_inf)


def g2_asymptote(params: GaussianParams) -> float:
    """Limit of g2 as ``x -> inf``, with the exponential growth divided out analytically.

    Every growing term of ``A`` carries ``e^x / 2``; its coefficient is
    ``(1 + coth(r/2)) (alpha - conj(alpha) e^{i theta}) / 4``, which vanishes
    for ``theta = 2 phi``.
    """
    validate(params)
    if params.r == 0:
        raise DomainError("r", "the x -> inf limit needs r > 0")
    _require_photons(params)
    k = params.nbar + 0.5
    r = params.r
    alpha = params.alpha
    e_theta = complex(math.cos(params.theta), math.sin(params.theta))
    a_inf = 0.25 * (1.0 + 1.0 / math.tanh(r / 2)) * (alpha - alpha.conjugate() * e_theta)
    u_inf = 2.0 * (alpha * a_inf.conjugate()).real
    v_inf = 2.0 * (alpha * a_inf / e_theta).real
    growth = k * math.exp(2 * r) - 0.5
    mean_n0 = k * math.cosh(2 * r) + abs(alpha) ** 2 - 0.5
    num = 0.5 * growth**2 + 0.5 * growth * (u_inf - v_inf)
    return 1.0 + num / (mean_n0 * (0.5 * k * math.exp(2 * r) + abs(a_inf) ** 2))
