"""Brute-force reference in a truncated Fock basis.

Nothing here uses the closed forms of the other modules: states are built by
matrix exponentials of the displacement, squeeze and amplifier generators and
observables are read off by traces. Only the Hamiltonian coefficients are
shared, because they define the dynamics being checked.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm

from .charfunc import MomentSet
from .errors import DomainError, TruncationError
from .gaussian_core import GaussianParams, check_time, hamiltonian_coeffs, validate

DEFAULT_DIM = 80
MAX_AUTO_DIM = 320
MIN_DIM = 16
LEAKAGE_GATE = 1e-10
#: leakage is the population in this top fraction of the basis
TAIL_FRACTION = 8
#: evolutions are gated at this many evenly spaced times, not only at the end
CHECKPOINTS = 32


def default_dim() -> int:
    return int(os.environ.get("NCLAB_DEFAULT_DIM", DEFAULT_DIM))


def annihilator(dim: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1, dim, dtype=float)), 1).astype(complex)


def thermal_state(nbar: float, dim: int) -> np.ndarray:
    """Thermal populations ``(nbar / (nbar + 1))^k``, renormalized on the truncated basis."""
    if nbar == 0:
        weights = np.zeros(dim)
        weights[0] = 1.0
    else:
        weights = (nbar / (nbar + 1.0)) ** np.arange(dim)
        weights /= weights.sum()
    return np.diag(weights).astype(complex)


def unitary_exp(generator: np.ndarray) -> np.ndarray:
    """``exp(G)`` for anti-Hermitian ``G`` through the eigenbasis of ``iG``."""
    w, v = np.linalg.eigh(1j * generator)
    return (v * np.exp(-1j * w)) @ v.conj().T


@dataclass
class TruncatedState:
    dim: int
    rho: np.ndarray
    annihilator: np.ndarray = field(repr=False)

    @property
    def leakage(self) -> float:
        return tail_population(np.diag(self.rho).real)

    @property
    def number(self) -> np.ndarray:
        return self.annihilator.conj().T @ self.annihilator

    def expect(self, op: np.ndarray) -> complex:
        return complex(np.trace(self.rho @ op))

    def check(self, gate: float = LEAKAGE_GATE) -> "TruncatedState":
        _gate(np.diag(self.rho).real, gate)
        return self


def tail_population(populations) -> float:
    """Fraction of the population in the top ``1 / TAIL_FRACTION`` of the levels."""
    populations = np.asarray(populations)
    top = max(1, len(populations) // TAIL_FRACTION)
    return float(populations[-top:].sum() / max(populations.sum(), 1e-300))


def _gate(populations, gate=LEAKAGE_GATE):
    leak = tail_population(populations)
    if leak > gate:
        raise TruncationError(len(populations), leak)


def _check_dim(dim):
    if dim < MIN_DIM:
        raise DomainError("dim", f"must be at least {MIN_DIM}, got {dim}")


def build_gaussian_state(params: GaussianParams, dim: int) -> TruncatedState:
    """``D(alpha) S(xi) rho_thermal S(-xi) D(-alpha)``, operator order as written."""
    validate(params)
    _check_dim(dim)
    a = annihilator(dim)
    ad = a.conj().T
    alpha, xi = params.alpha, params.xi
    displace = unitary_exp(alpha * ad - alpha.conjugate() * a)
    squeeze = unitary_exp(-0.5 * xi * ad @ ad + 0.5 * xi.conjugate() * a @ a)
    u = displace @ squeeze
    rho = u @ thermal_state(params.nbar, dim) @ u.conj().T
    return TruncatedState(dim, rho, a).check()


def hamiltonian(params: GaussianParams, dim: int) -> np.ndarray:
    c, b = hamiltonian_coeffs(params)
    a = annihilator(dim)
    ad = a.conj().T
    return c * ad @ ad + np.conj(c) * a @ a + b * a + np.conj(b) * ad


class Propagator:
    """``exp(-i H tau)`` for many ``tau`` from one eigendecomposition of ``H``."""

    def __init__(self, params: GaussianParams, dim: int):
        self.dim = dim
        self.energies, self.vectors = np.linalg.eigh(hamiltonian(params, dim))

    def unitary(self, tau: float) -> np.ndarray:
        return (self.vectors * np.exp(-1j * self.energies * tau)) @ self.vectors.conj().T

    def evolve(self, rho: np.ndarray, tau: float) -> np.ndarray:
        if tau == 0:
            return rho.copy()
        u = self.unitary(tau)
        return u @ rho @ u.conj().T

    def evolve_checked(self, rho: np.ndarray, tau: float, gate: float = LEAKAGE_GATE) -> np.ndarray:
        """:meth:`evolve`, gating the populations along the way.

        A packet that reaches the top of the basis is reflected by the
        truncation and can come back looking clean, so the end state alone
        cannot be trusted.
        """
        for step in range(1, CHECKPOINTS):
            u = self.unitary(tau * step / CHECKPOINTS)
            _gate(np.einsum("ij,ji->i", u @ rho, u.conj().T).real, gate)
        out = self.evolve(rho, tau)
        _gate(np.diag(out).real, gate)
        return out


def build_via_hamiltonian(params: GaussianParams, dim: int) -> TruncatedState:
    """``exp(-i H t) rho_thermal exp(i H t)`` with the amplifier Hamiltonian."""
    validate(params)
    _check_dim(dim)
    prop = Propagator(params, dim)
    rho = prop.evolve_checked(thermal_state(params.nbar, dim), params.t_prep)
    return TruncatedState(dim, rho, annihilator(dim)).check()


def _dims(dim, max_dim=MAX_AUTO_DIM):
    dim = default_dim() if dim is None else dim
    _check_dim(dim)
    out = [dim]
    while out[-1] * 2 <= max_dim:
        out.append(out[-1] * 2)
    return out


def _escalate(func, params, x, dim, max_dim):
    check_time(params, x)
    error = None
    for d in _dims(dim, max_dim):
        try:
            return func(params, float(x), d)
        except TruncationError as exc:
            error = exc
    raise error


def _prepared_state(params, x, dim):
    """The state at preparation time and a propagator (``None`` when static)."""
    if params.r == 0:
        if x != 0:
            raise DomainError("r", "r = 0 admits no dynamics")
        return build_gaussian_state(params, dim), None
    prop = Propagator(params, dim)
    rho = prop.evolve_checked(thermal_state(params.nbar, dim), params.t_prep)
    return TruncatedState(dim, rho, annihilator(dim)).check(), prop


def _tau(params, x):
    return x * params.t_prep / params.r if x else 0.0


def _g2_at(params, x, dim):
    state, prop = _prepared_state(params, x, dim)
    a = state.annihilator
    n = state.number
    sigma = a @ state.rho @ a.conj().T
    if prop is not None:
        tau = _tau(params, x)
        sigma = prop.evolve_checked(sigma, tau)
        rho_tau = prop.evolve_checked(state.rho, tau)
    else:
        rho_tau = state.rho
    TruncatedState(dim, rho_tau, a).check()
    TruncatedState(dim, sigma, a).check()
    num = np.trace(sigma @ n).real
    return num / (state.expect(n).real * np.trace(rho_tau @ n).real)


def oracle_g2(params: GaussianParams, x: float, dim: int | None = None, max_dim: int = MAX_AUTO_DIM) -> float:
    """``Tr[rho_G a+ a+(tau) a(tau) a] / (<n(0)> <n(tau)>)`` by explicit evolution.

    The numerator is evaluated as ``<n>`` of the evolved operator ``a rho_G a+``.
    ``dim`` doubles up to ``max_dim`` while the leakage gate trips.
    """
    return _escalate(_g2_at, params, x, dim, max_dim)


@dataclass(frozen=True)
class OracleObservables:
    moments: MomentSet
    chi: np.ndarray
    dim: int


def evolved_state(params: GaussianParams, x: float, dim: int) -> TruncatedState:
    """``rho(t + tau)`` in a basis of size ``dim`` (no escalation)."""
    check_time(params, x)
    state, prop = _prepared_state(params, float(x), dim)
    if prop is not None:
        state = TruncatedState(dim, prop.evolve_checked(state.rho, _tau(params, float(x))), state.annihilator)
    return state.check()


def normal_char(state: TruncatedState, etas) -> np.ndarray:
    """``Tr[rho exp(eta a+) exp(-eta* a)]`` for each ``eta``.

    Both exponentials are exact in the truncated basis: powers of the shift
    operators never reach the discarded levels.
    """
    a = state.annihilator
    out = []
    for eta in np.atleast_1d(np.asarray(etas, dtype=complex)):
        op = expm(eta * a.conj().T) @ expm(-np.conj(eta) * a)
        out.append(state.expect(op))
    return np.array(out, dtype=complex)


def _observables_at(params, x, dim, etas):
    state = evolved_state(params, x, dim)
    a = state.annihilator
    ad = a.conj().T
    mean_a = state.expect(a)
    n_mean = state.expect(ad @ a).real
    aa = state.expect(a @ a)
    pairs = state.expect(ad @ ad @ a @ a).real
    m = MomentSet(mean_a, n_mean, aa - mean_a**2, n_mean - abs(mean_a) ** 2, pairs)
    return OracleObservables(m, normal_char(state, etas), dim)


def oracle_observables(
    params: GaussianParams, x: float, dim: int | None = None, etas=(), max_dim: int = MAX_AUTO_DIM
) -> OracleObservables:
    """One-time moments (and optionally the characteristic function) of ``rho(t + tau)``."""
    return _escalate(lambda p, xx, d: _observables_at(p, xx, d, etas), params, x, dim, max_dim)


def oracle_mandel_q(params: GaussianParams, x: float, dim: int | None = None, max_dim: int = MAX_AUTO_DIM) -> float:
    m = oracle_observables(params, x, dim, max_dim=max_dim).moments
    return (m.a2dag_a2 - m.n_mean**2) / m.n_mean
