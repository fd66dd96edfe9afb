"""Nonclassicality criteria, regime classification over scaled time and the critical amplitude.

Margins, keyed by their report names, are oriented so that a negative value
signals nonclassicality:

``antibunching``  g2(0) - g2(x)                (antibunching when negative)
``rc``            |g2(0)-1| - |g2(x)-1|        (farther from unity than initially)
``qm``            Q_M(x)                       (sub-Poissonian when negative)
``p_exists``      (2 nbar+1) e^{-2(x+r)} - 1   (P function ceases to exist)

Crossings are found by scanning a uniform grid for sign changes and refining
each bracket by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import bisect

from . import kernels
from .charfunc import mandel_q, mandel_q_curve
from .coherence import g2, g2_asymptote, g2_curve
from .errors import DegenerateState, DomainError, NoBracket
from .gaussian_core import GaussianParams, check_time, validate
from .prep import p_exists_margin

CRITERIA = ("antibunching", "rc", "qm", "p_exists")
DEFAULT_SCAN_POINTS = 2048
CROSSING_XTOL = 1e-10
ALPHA_XTOL = 1e-6
ALPHA_CEILING = 1e3


@dataclass(frozen=True)
class CriterionVerdict:
    """Per-criterion verdicts at one scaled time; ``True`` means nonclassical.

    ``boundary`` lists criteria whose defining inequality holds with equality;
    those are reported as classical.
    """

    sub_poissonian: bool
    antibunched_at_x: bool
    rc_criterion_at_x: bool
    mandel_negative_at_x: bool
    p_nonclassical_at_x: bool
    boundary: tuple[str, ...] = ()


@dataclass
class ClassificationReport:
    params: GaussianParams
    verdict_curve: list[tuple[float, CriterionVerdict]]
    crossings: dict[str, list[float]]
    asymptotes: dict[str, float]
    amplitude_quadrature: bool = True
    notes: list[str] = field(default_factory=list)


def _require_photons(params):
    if params.nbar == 0 and params.r == 0 and params.alpha_mag == 0:
        raise DegenerateState("criteria are undefined for the vacuum")


def rc_margin(params: GaussianParams, x: float) -> float:
    """``|g2(0)-1| - |g2(x)-1|``; negative when g2 has moved farther from unity than at x = 0.

    ``x = inf`` evaluates the asymptote.
    """
    g0 = g2(params, 0.0)
    gx = g2_asymptote(params) if x == math.inf else g2(params, x)
    return abs(g0 - 1.0) - abs(gx - 1.0)


def rc_asymptote(params: GaussianParams) -> float:
    return rc_margin(params, math.inf)


def evaluate(params: GaussianParams, x: float) -> CriterionVerdict:
    _require_photons(params)
    x = float(check_time(params, x))
    g0 = g2(params, 0.0)
    gx = g2(params, x)
    q = mandel_q(params, x)
    margin_p = float(p_exists_margin(params, x))
    boundary = []
    if g0 == 1.0:
        boundary.append("sub_poissonian")
    if g0 == gx:
        boundary.append("antibunched_at_x")
    if abs(g0 - 1.0) == abs(gx - 1.0):
        boundary.append("rc_criterion_at_x")
    if q == 0.0:
        boundary.append("mandel_negative_at_x")
    if margin_p == 0.0:
        boundary.append("p_nonclassical_at_x")
    return CriterionVerdict(
        sub_poissonian=g0 < 1.0,
        antibunched_at_x=g0 < gx,
        rc_criterion_at_x=abs(g0 - 1.0) < abs(gx - 1.0),
        mandel_negative_at_x=q < 0.0,
        p_nonclassical_at_x=margin_p < 0.0,
        boundary=tuple(boundary),
    )


def margin_functions(params: GaussianParams):
    """Scalar margin callables keyed by criterion name, for root refinement."""
    _require_photons(params)
    validate(params)
    alpha = params.alpha
    args = (params.nbar, params.r, params.theta, alpha.real, alpha.imag)
    g_inf = g2_asymptote(params) if params.r > 0 else math.nan
    g0 = kernels.g2_point(*args, 0.0, g_inf)

    def antibunching(x):
        return g0 - kernels.g2_point(*args, x, g_inf)

    def rc(x):
        return abs(g0 - 1.0) - abs(kernels.g2_point(*args, x, g_inf) - 1.0)

    def qm(x):
        return kernels.qm_point(*args, x)

    def p_exists(x):
        return float(p_exists_margin(params, x))

    return {"antibunching": antibunching, "rc": rc, "qm": qm, "p_exists": p_exists}


def margin_curves(params: GaussianParams, xs) -> dict[str, np.ndarray]:
    xs = np.asarray(xs, dtype=float)
    g = g2_curve(params, xs)
    g0 = g2(params, 0.0)
    return {
        "antibunching": g0 - g,
        "rc": abs(g0 - 1.0) - np.abs(g - 1.0),
        "qm": mandel_q_curve(params, xs),
        "p_exists": p_exists_margin(params, xs),
    }


def find_crossings(func, xs, values, xtol=CROSSING_XTOL) -> list[float]:
    """Roots of ``func`` bracketed by sign changes of ``values`` sampled on ``xs``.

    Zeros at the first grid point are ignored: several margins vanish
    identically at ``x = 0`` by construction.
    """
    sign = np.sign(values)
    roots = []
    last = None  # index of the last nonzero sample
    for i in range(len(xs)):
        if sign[i] == 0:
            if 0 < i < len(xs) - 1 and last is not None and sign[i + 1] != 0 and sign[i + 1] != sign[last]:
                roots.append(float(xs[i]))
            continue
        if last is not None and sign[i] != sign[last] and last == i - 1:
            roots.append(bisect(func, xs[last], xs[i], xtol=xtol))
        last = i
    return sorted(set(roots))


def classify(
    params: GaussianParams, x_max: float, n_points: int, scan_points: int = DEFAULT_SCAN_POINTS
) -> ClassificationReport:
    """Verdicts on ``n_points`` scaled times in ``[0, x_max]`` plus refined crossings."""
    if not x_max > 0:
        raise DomainError("x_max", f"must be positive, got {x_max!r}")
    if n_points < 2:
        raise DomainError("n_points", f"must be at least 2, got {n_points!r}")
    _require_photons(params)
    check_time(params, x_max)
    xs = np.linspace(0.0, x_max, n_points)
    curve = [(float(x), evaluate(params, float(x))) for x in xs]

    scan = np.linspace(0.0, x_max, max(scan_points, n_points))
    values = margin_curves(params, scan)
    funcs = margin_functions(params)
    crossings = {name: find_crossings(funcs[name], scan, values[name]) for name in CRITERIA}

    asymptotes = {}
    if params.r > 0:
        asymptotes = {"g2_inf": g2_asymptote(params), "rc_inf": rc_asymptote(params)}
    notes = []
    if not params.is_amplitude_quadrature:
        notes.append("theta != 2 phi: amplitude quadrature is not the squeezed one")
    return ClassificationReport(
        params, curve, crossings, asymptotes, params.is_amplitude_quadrature, notes
    )


def critical_alpha(nbar: float, r: float, xtol: float = ALPHA_XTOL) -> float:
    """Coherent amplitude where ``g2(inf) = g2(0)``, with ``theta = 2 phi`` imposed."""
    base = validate(GaussianParams.amplitude_quadrature(nbar, r, 0.0))
    if r <= 0:
        raise DomainError("r", "critical amplitude needs r > 0")

    def gap(alpha_mag):
        p = base.with_alpha(alpha_mag)
        return g2_asymptote(p) - g2(p, 0.0)

    lo, hi = 0.0, 1.0
    f_lo = gap(lo)
    f_hi = gap(hi)
    while f_hi != 0.0 and np.sign(f_hi) == np.sign(f_lo):
        if hi >= ALPHA_CEILING:
            raise NoBracket(f"g2(inf) - g2(0) keeps its sign up to |alpha| = {ALPHA_CEILING:g}")
        lo, hi = hi, min(2.0 * hi, ALPHA_CEILING)
        f_hi = gap(hi)
    if f_hi == 0.0:
        return hi
    return bisect(gap, lo, hi, xtol=xtol)
