"""Normally ordered characteristic function, one-time moments and the Mandel Q parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .coherence import amplitude_A
from .errors import DegenerateState, DomainError
from .gaussian_core import GaussianParams, check_time


@dataclass(frozen=True)
class QuadraticKernel:
    """Coefficients of ``|xi(tau)|^2 = eta^2 T* + eta*^2 T + |eta|^2 S``."""

    t_tau: complex
    s_tau: float


@dataclass(frozen=True)
class MomentSet:
    """First and second normally ordered moments at one scaled time."""

    mean_a: complex
    n_mean: float
    aa_central: complex
    n_central: float
    a2dag_a2: float


def quadratic_kernel(params: GaussianParams, x: float) -> QuadraticKernel:
    x = float(check_time(params, x))
    y = 2.0 * (x + params.r)
    e_theta = complex(math.cos(params.theta), math.sin(params.theta))
    return QuadraticKernel(0.5 * e_theta * math.sinh(y), math.cosh(y))


def xi_tau(params: GaussianParams, x: float, eta):
    """``xi(tau) = eta cosh(x + r) + eta* e^{i theta} sinh(x + r)``."""
    x = float(check_time(params, x))
    eta = np.asarray(eta, dtype=complex)
    y = x + params.r
    return eta * math.cosh(y) + eta.conj() * np.exp(1j * params.theta) * math.sinh(y)


def chi(params: GaussianParams, x: float, eta):
    """``Tr[rho(t + tau) exp(eta a+) exp(-eta* a)]``; ``eta`` may be an array."""
    kern = quadratic_kernel(params, x)
    a = amplitude_A(params, x)
    eta = np.asarray(eta, dtype=complex)
    xi_sq = (eta**2 * kern.t_tau.conjugate() + eta.conj() ** 2 * kern.t_tau).real + np.abs(eta) ** 2 * kern.s_tau
    out = np.exp(0.5 * np.abs(eta) ** 2 + eta * a.conjugate() - eta.conj() * a - (params.nbar + 0.5) * xi_sq)
    return complex(out) if out.ndim == 0 else out


def moments(params: GaussianParams, x: float) -> MomentSet:
    """Moments read off the Gaussian exponent of :func:`chi`.

    ``<a+^2 a^2>`` follows from Wick's theorem with nonzero mean.
    """
    kern = quadratic_kernel(params, x)
    k = params.nbar + 0.5
    a = amplitude_A(params, x)
    n_central = k * kern.s_tau - 0.5
    aa_central = -2.0 * k * kern.t_tau
    mod2 = abs(a) ** 2
    pairs = (
        mod2 * mod2
        + 4.0 * mod2 * n_central
        + 2.0 * (a.conjugate() ** 2 * aa_central).real
        + 2.0 * n_central**2
        + abs(aa_central) ** 2
    )
    return MomentSet(a, mod2 + n_central, aa_central, n_central, pairs)


def _stays_coherent(params: GaussianParams) -> bool:
    # without squeezing or noise the drive only moves a coherent state, so Q = 0 at every x
    return params.nbar == 0 and params.r == 0 and params.alpha_mag > 0


def _coherent_times(params, x):
    # the r = 0 dynamics check does not apply here, only finiteness and sign
    check_time(params, np.zeros_like(np.asarray(x, dtype=float)))
    xs = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(xs)) or np.any(xs < 0):
        raise DomainError("x", "scaled time must be finite and nonnegative")
    return xs


def mandel_q(params: GaussianParams, x: float) -> float:
    if _stays_coherent(params):
        _coherent_times(params, x)
        return 0.0
    m = moments(params, x)
    if m.n_mean <= 0:
        raise DegenerateState("Mandel Q is undefined for <n> = 0")
    return (m.a2dag_a2 - m.n_mean**2) / m.n_mean


def mandel_q_curve(params: GaussianParams, xs) -> np.ndarray:
    """Vectorized :func:`mandel_q` (compiled backend when built)."""
    xs = np.asarray(xs, dtype=float)
    if _stays_coherent(params):
        return np.zeros_like(_coherent_times(params, xs))
    check_time(params, xs)
    if params.nbar == 0 and params.r == 0 and params.alpha_mag == 0:
        raise DegenerateState("Mandel Q is undefined for <n> = 0")
    alpha = params.alpha
    return kernels.qm_curve(params.nbar, params.r, params.theta, alpha.real, alpha.imag, xs)
