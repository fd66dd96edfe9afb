import math

import numpy as np
import pytest

from nclab.charfunc import moments, mandel_q
from nclab.coherence import g2, mean_photon_number
from nclab.errors import DomainError, TruncationError
from nclab.fock_oracle import (
    Propagator,
    build_gaussian_state,
    build_via_hamiltonian,
    oracle_g2,
    oracle_mandel_q,
    oracle_observables,
    thermal_state,
)
from nclab.gaussian_core import GaussianParams


def test_vacuum():
    state = build_gaussian_state(GaussianParams(0.0, 0.0), 32)
    ref = np.zeros((32, 32))
    ref[0, 0] = 1
    np.testing.assert_allclose(state.rho, ref, atol=1e-15)


def test_thermal_mean():
    state = build_gaussian_state(GaussianParams(0.1, 0.0), 64)
    assert state.expect(state.number).real == pytest.approx(0.1, abs=1e-10)


def test_displaced_squeezed_mean(bright):
    state = build_gaussian_state(bright, 80)
    assert state.expect(state.number).real == pytest.approx(4.112040, abs=1e-6)
    assert state.expect(state.number).real == pytest.approx(mean_photon_number(bright, 0.0), rel=1e-10)


@pytest.mark.parametrize(
    "params",
    [
        GaussianParams(0.1, 0.1),
        GaussianParams(0.3, 0.2, theta=1.1),
        GaussianParams(0.2, 0.1, theta=0.4, alpha_mag=1.5, phi=0.9, t_prep=2.0),
    ],
)
def test_two_construction_paths_agree(params):
    a = build_gaussian_state(params, 64).rho
    b = build_via_hamiltonian(params, 64).rho
    assert np.max(np.abs(a - b)) < 1e-8


def test_squeezed_vacuum_second_moment():
    p = GaussianParams(0.0, 0.2, theta=0.7)
    state = build_gaussian_state(p, 64)
    aa = state.expect(state.annihilator @ state.annihilator)
    assert aa == pytest.approx(-0.5 * np.exp(0.7j) * math.sinh(0.4), abs=1e-12)
    assert aa == pytest.approx(moments(p, 0.0).aa_central, abs=1e-12)


def test_propagator_is_unitary(bright):
    u = Propagator(bright, 40).unitary(3.7)
    np.testing.assert_allclose(u @ u.conj().T, np.eye(40), atol=1e-12)


def test_thermal_state_is_normalized():
    assert np.trace(thermal_state(2.0, 20)).real == pytest.approx(1.0, abs=1e-15)


def test_g2_at_zero_weak(weak):
    assert oracle_g2(weak, 0.0, dim=80) == pytest.approx(3.1625, abs=1e-3)


def test_g2_coherent_state_is_one():
    assert oracle_g2(GaussianParams(0.0, 0.0, alpha_mag=1.2), 0.0, dim=80) == pytest.approx(1.0, abs=1e-10)


def test_g2_dynamics_bright(bright):
    got = oracle_g2(bright, 0.5, dim=120)
    assert abs(got - g2(bright, 0.5)) <= 1e-5 * g2(bright, 0.5)


def test_mean_at_threshold(hot):
    m = oracle_observables(hot, 0.4493, dim=100).moments
    want = mean_photon_number(hot, 0.4493)
    assert abs(m.n_mean - want) <= 1e-6 * want


def test_mean_amplitude_at_zero(rng):
    for _ in range(5):
        p = GaussianParams(rng.uniform(0, 0.5), rng.uniform(0.05, 0.2), rng.uniform(0, 6), rng.uniform(0, 2), rng.uniform(0, 6))
        m = oracle_observables(p, 0.0, dim=80).moments
        assert m.mean_a == pytest.approx(p.alpha, abs=1e-10)


def test_mandel_q_bright_start(bright):
    assert oracle_mandel_q(bright, 0.0) == pytest.approx(-0.0104, abs=1e-3)
    assert oracle_mandel_q(bright, 0.0) == pytest.approx(mandel_q(bright, 0.0), abs=1e-8)


@pytest.mark.parametrize("alpha_mag, x", [(0.0, 0.5), (1.0, 0.3), (2.0, 0.1)])
def test_dimension_convergence(alpha_mag, x):
    p = GaussianParams.amplitude_quadrature(0.1, 0.1, alpha_mag)
    small = oracle_g2(p, x, dim=80, max_dim=80)
    large = oracle_g2(p, x, dim=160, max_dim=160)
    assert abs(small - large) < 1e-7


def test_truncation_reported():
    p = GaussianParams(0.1, 0.1, alpha_mag=6.0)
    with pytest.raises(TruncationError) as err:
        oracle_g2(p, 0.0, dim=16, max_dim=16)
    assert err.value.dim == 16


def test_escalation_recovers():
    p = GaussianParams(0.1, 0.1, alpha_mag=6.0)
    got = oracle_g2(p, 0.0, dim=16, max_dim=320)
    assert got == pytest.approx(g2(p, 0.0), rel=1e-8)


def test_dynamics_without_squeezing_rejected():
    with pytest.raises(DomainError):
        oracle_g2(GaussianParams(0.1, 0.0, alpha_mag=1.0), 0.5)
    with pytest.raises(DomainError):
        build_via_hamiltonian(GaussianParams(0.1, 0.0), 32)


def test_small_dimension_rejected():
    with pytest.raises(DomainError):
        build_gaussian_state(GaussianParams(0.1, 0.1), 8)


def test_reflection_off_basis_edge_is_caught():
    # the packet reaches n ~ 250 and, truncated at 80 levels, bounces back with a clean-looking tail
    p = GaussianParams(0.1378759595381729, 0.06538810341229649, 4.905639489633271, 1.1048009239039704, 6.106082947458665)
    with pytest.raises(TruncationError):
        oracle_observables(p, 0.883344541897246, dim=80, max_dim=80)
