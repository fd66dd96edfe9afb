"""Glauber-Sudarshan P function of the evolving state and its existence condition.

P is a Gaussian in ``beta`` centred on ``A(tau)`` when it exists. Its
existence is governed by the smaller eigenvalue of the quadratic form in the
exponent, which does not depend on the coherent amplitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .coherence import IMAG_TOL, amplitude_A
from .errors import DegenerateDistribution, DomainError, NonclassicalRegion
from .gaussian_core import GaussianParams, check_time, validate

#: Below this absolute margin P is reported as a delta function.
DELTA_TOL = 1e-12
MIN_GRID_POINTS = 200
MAX_GRID_POINTS = 2048


@dataclass(frozen=True)
class PCoefficients:
    a_sq: float
    b_sq: float
    c_coef: float
    discriminant: float
    eig_plus: float
    eig_minus: float


def p_coefficients(params: GaussianParams, x: float) -> PCoefficients:
    x = float(check_time(params, x))
    k = params.nbar + 0.5
    y = 2.0 * (x + params.r)
    t = 0.5 * complex(math.cos(params.theta), math.sin(params.theta)) * math.sinh(y)
    s = math.cosh(y)
    a_sq = -0.5 + k * (2.0 * t.real + s)
    b_sq = -0.5 - k * (2.0 * t.real - s)
    c = -2j * k * (t.conjugate() - t)
    if abs(c.imag) > IMAG_TOL:
        raise ArithmeticError(f"P coefficient c has imaginary part {c.imag:.3e}")
    c = c.real
    eig_plus = 2.0 * (-1.0 + 2.0 * k * math.exp(y))
    eig_minus = 2.0 * (-1.0 + 2.0 * k * math.exp(-y))
    return PCoefficients(a_sq, b_sq, c, 4.0 * a_sq * b_sq - c * c, eig_plus, eig_minus)


def p_exists_margin(params: GaussianParams, x) -> float:
    """``(2 nbar + 1) exp(-2 (x + r)) - 1``: nonnegative iff P is a genuine density."""
    validate(params)
    return (2.0 * params.nbar + 1.0) * np.exp(-2.0 * (np.asarray(x, dtype=float) + params.r)) - 1.0


def p_crossing(nbar: float, r: float) -> tuple[float | None, bool]:
    """Scaled time where P stops existing, plus a flag for the ``x = 0`` boundary case.

    Returns ``(None, False)`` when the state is nonclassical from the start and
    ``(None, True)`` when the crossing sits exactly at ``x = 0``.
    """
    if nbar < 0:
        raise DomainError("nbar", f"must be nonnegative, got {nbar!r}")
    if r < 0:
        raise DomainError("r", f"must be nonnegative, got {r!r}")
    x_star = 0.5 * math.log(2.0 * nbar + 1.0) - r
    if x_star > 0:
        return x_star, False
    return None, x_star == 0


def p_threshold(nbar: float, r: float) -> float | None:
    return p_crossing(nbar, r)[0]


def _checked_coefficients(params, x):
    margin = float(p_exists_margin(params, x))
    if abs(margin) < DELTA_TOL:
        raise DegenerateDistribution(amplitude_A(params, x))
    if margin < 0:
        raise NonclassicalRegion(margin)
    return p_coefficients(params, x)


def p_value(params: GaussianParams, x: float, beta):
    """P(beta) for scalar or array ``beta`` in the classical region."""
    coef = _checked_coefficients(params, x)
    center = amplitude_A(params, x)
    beta = np.asarray(beta, dtype=complex)
    f = 2.0 * (center.real - beta.real)
    d = -2.0 * (center.imag - beta.imag)
    quad = coef.a_sq * f * f + coef.b_sq * d * d + coef.c_coef * f * d
    out = (2.0 / math.pi) / math.sqrt(coef.discriminant) * np.exp(-quad / coef.discriminant)
    return float(out) if out.ndim == 0 else out


def p_grid(params: GaussianParams, x: float, re, im) -> np.ndarray:
    """P on the grid ``re x im`` (shape ``(len(re), len(im))``), compiled when built."""
    coef = _checked_coefficients(params, x)
    center = amplitude_A(params, x)
    return kernels.p_grid(coef.a_sq, coef.b_sq, coef.c_coef, center.real, center.imag, re, im)


def principal_widths(params: GaussianParams, x: float) -> tuple[float, float]:
    """Standard deviations of P along its narrow and wide axes in the classical region."""
    coef = _checked_coefficients(params, x)
    # axis variances (k e^{-+2y} - 1/2) / 2 are eig_minus / 8 and eig_plus / 8
    return math.sqrt(coef.eig_minus / 8.0), math.sqrt(coef.eig_plus / 8.0)


def quadrature_half_width(params: GaussianParams, x: float) -> float:
    """Half-width of a square around ``A(tau)`` holding P down to ``exp(-50)``."""
    _, wide = principal_widths(params, x)
    return 10.0 * wide


def midpoint_grid(params: GaussianParams, x: float, points: int | None = None):
    """Real and imaginary cell centres and the cell area of a square centred on ``A(tau)``.

    By default the spacing is at most the narrow width of P, which keeps the
    midpoint rule error near ``exp(-2 pi^2)``; the count is capped at
    ``MAX_GRID_POINTS``.
    """
    w = quadrature_half_width(params, x)
    if points is None:
        narrow, _ = principal_widths(params, x)
        points = int(min(max(math.ceil(2.0 * w / narrow), MIN_GRID_POINTS), MAX_GRID_POINTS))
    h = 2.0 * w / points
    offsets = -w + h * (np.arange(points) + 0.5)
    center = amplitude_A(params, x)
    return center.real + offsets, center.imag + offsets, h * h
