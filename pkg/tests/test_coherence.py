import math

import numpy as np
import pytest

from nclab.coherence import (
    amplitude_A,
    g2,
    g2_asymptote,
    g2_curve,
    ingredients,
    mean_photon_number,
)
from nclab.errors import DegenerateState, DomainError
from nclab.gaussian_core import GaussianParams

from conftest import random_params


def test_amplitude_at_zero_is_alpha(rng):
    for _ in range(1000):
        p = random_params(rng)
        assert amplitude_A(p, 0.0) == p.alpha


def test_amplitude_vanishes_without_displacement():
    p = GaussianParams(0.4, 0.2, theta=1.0)
    assert amplitude_A(p, 0.0) == 0
    assert np.all(amplitude_A(p, np.linspace(0, 3, 7)) == 0)


def test_amplitude_solves_mean_field_equation(rng):
    # d<a>/dx = -e^{i theta} <a>* + (conj(alpha) e^{i theta} + alpha coth(r/2)) / 2
    h = 1e-5
    for _ in range(20):
        p = random_params(rng)
        x = rng.uniform(0.1, 2.0)
        deriv = (amplitude_A(p, x + h) - amplitude_A(p, x - h)) / (2 * h)
        e = np.exp(1j * p.theta)
        rhs = -e * np.conj(amplitude_A(p, x)) + 0.5 * (np.conj(p.alpha) * e + p.alpha / math.tanh(p.r / 2))
        assert deriv == pytest.approx(rhs, rel=1e-7, abs=1e-8)


def test_amplitude_rejects_dynamics_at_zero_squeeze():
    with pytest.raises(DomainError):
        amplitude_A(GaussianParams(0.1, 0.0, alpha_mag=1.0), 0.5)


def test_ingredients_weak_at_zero():
    ing = ingredients(GaussianParams(0.1, 0.1), 0.0)
    assert ing.mean_n0 == pytest.approx(0.6 * math.cosh(0.2) - 0.5, rel=1e-15)
    assert ing.mean_n0 == pytest.approx(0.112040, abs=1e-6)
    assert ing.mean_n_tau == ing.mean_n0
    assert ing.u_tau == ing.v_tau == 0


def test_ingredients_vacuum():
    ing = ingredients(GaussianParams(0.0, 0.0), 0.0)
    assert (ing.n_tau, ing.s_tau, ing.u_tau, ing.v_tau, ing.mean_n0) == (0, 0, 0, 0, 0)


def test_ingredients_thermal_squeezed():
    ing = ingredients(GaussianParams(1.0, 0.1), 0.0)
    assert ing.u_tau == ing.v_tau == 0
    assert ing.mean_n0 == pytest.approx(1.5 * math.cosh(0.2) - 0.5, rel=1e-15)


def test_mean_photon_number_matches_ingredients(rng):
    for _ in range(50):
        p = random_params(rng)
        x = rng.uniform(0, 3)
        assert mean_photon_number(p, x) == pytest.approx(ingredients(p, x).mean_n_tau, rel=1e-13)


@pytest.mark.parametrize(
    "params, expected",
    [
        (GaussianParams(0.1, 0.1), 3.1625),
        (GaussianParams(1.0, 0.1), 2.0859),
        (GaussianParams.amplitude_quadrature(0.1, 0.1, 2.0), 0.9975),
    ],
    ids=["weak", "hot", "bright"],
)
def test_g2_at_zero_reported_values(params, expected):
    assert g2(params, 0.0) == pytest.approx(expected, abs=5e-4)


@pytest.mark.parametrize(
    "params, expected",
    [
        (GaussianParams(0.1, 0.1), 1.6603),
        (GaussianParams(1.0, 0.1), 1.9402),
        (GaussianParams.amplitude_quadrature(0.1, 0.1, 2.0), 1.0180),
    ],
    ids=["weak", "hot", "bright"],
)
def test_g2_asymptote_reported_values(params, expected):
    assert g2_asymptote(params) == pytest.approx(expected, abs=5e-4)


def test_thermal_light_g2_is_two():
    assert g2(GaussianParams(0.7, 0.0), 0.0) == 2.0


def test_g2_vacuum_is_degenerate():
    with pytest.raises(DegenerateState):
        g2(GaussianParams(0.0, 0.0), 0.0)


def test_asymptote_matches_late_time(weak, bright, hot, rng):
    for p in (weak, bright, hot):
        for x in (40.0, 60.0, 200.0):
            assert abs(g2(p, x) - g2_asymptote(p)) < 1e-8
    # generic phases: the mean field grows like e^x and enters the limit
    for _ in range(200):
        p = random_params(rng)
        assert abs(g2(p, 40.0) - g2_asymptote(p)) < 1e-8


def test_asymptote_used_beyond_overflow_threshold(bright):
    assert g2(bright, 1000.0) == g2_asymptote(bright)
    assert np.all(np.isfinite(g2_curve(bright, [349.0, 351.0, 800.0])))


def test_asymptote_requires_squeezing():
    with pytest.raises(DomainError):
        g2_asymptote(GaussianParams(0.2, 0.0, alpha_mag=1.0))


def test_g2_at_least_one_without_displacement(rng):
    for _ in range(200):
        p = GaussianParams(rng.uniform(0, 2), rng.uniform(0.01, 1), rng.uniform(0, 6))
        xs = np.linspace(0, 10, 101)
        assert np.all(g2_curve(p, xs) >= 1.0)


def test_curve_matches_scalar(rng):
    for _ in range(50):
        p = random_params(rng)
        xs = np.linspace(0, 4, 17)
        scalar = np.array([g2(p, x) for x in xs])
        np.testing.assert_allclose(g2_curve(p, xs), scalar, rtol=1e-12)
