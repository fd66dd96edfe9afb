"""Parameter sets and reported constants for the seven reference figures."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .charfunc import mandel_q, mandel_q_curve
from .coherence import g2, g2_asymptote, g2_curve
from .criteria import classify, rc_asymptote
from .gaussian_core import GaussianParams
from .prep import p_exists_margin

WEAK_PARAMS = GaussianParams.amplitude_quadrature(0.1, 0.1, 0.0)
BRIGHT_PARAMS = GaussianParams.amplitude_quadrature(0.1, 0.1, 2.0)
HOT_PARAMS = GaussianParams.amplitude_quadrature(1.0, 0.1, 0.0)


@dataclass(frozen=True)
class Figure:
    number: int
    quantity: str
    params: GaussianParams
    x_max: float
    reported: dict[str, float]
    tolerance: dict[str, float]


FIGURES = {
    1: Figure(1, "g2", WEAK_PARAMS, 5.0, {"g2_0": 3.1625, "g2_inf": 1.6603}, {"g2_0": 5e-4, "g2_inf": 5e-4}),
    2: Figure(2, "rc", WEAK_PARAMS, 5.0, {"rc_inf": 1.5022}, {"rc_inf": 5e-4}),
    3: Figure(3, "g2", BRIGHT_PARAMS, 5.0, {"g2_0": 0.9975, "g2_inf": 1.0180}, {"g2_0": 5e-4, "g2_inf": 5e-4}),
    4: Figure(4, "rc", BRIGHT_PARAMS, 5.0, {"rc_inf": -0.0155, "rc_crossing": 2.5793}, {"rc_inf": 5e-4, "rc_crossing": 1e-3}),
    5: Figure(
        5,
        "g2",
        HOT_PARAMS,
        3.0,
        {"g2_0": 2.0859, "g2_inf": 1.9402, "antibunching_crossing": 0.5605},
        {"g2_0": 5e-4, "g2_inf": 5e-4, "antibunching_crossing": 1e-3},
    ),
    6: Figure(6, "rc", HOT_PARAMS, 3.0, {"rc_inf": 0.1457, "rc_crossing": 0.5605}, {"rc_inf": 5e-4, "rc_crossing": 1e-3}),
    7: Figure(7, "qm", BRIGHT_PARAMS, 5.0, {"qm_0": -0.0104, "qm_crossing": 1.7704}, {"qm_0": 5e-4, "qm_crossing": 1e-3}),
}


def curve(quantity: str, params: GaussianParams, xs) -> np.ndarray:
    """Values of ``g2``, ``rc``, ``qm`` or ``pmargin`` on the scaled times ``xs``."""
    xs = np.asarray(xs, dtype=float)
    if quantity == "g2":
        return g2_curve(params, xs)
    if quantity == "rc":
        g0 = g2(params, 0.0)
        return abs(g0 - 1.0) - np.abs(g2_curve(params, xs) - 1.0)
    if quantity == "qm":
        return mandel_q_curve(params, xs)
    if quantity == "pmargin":
        return np.broadcast_to(p_exists_margin(params, xs), xs.shape).copy()
    raise ValueError(f"unknown quantity {quantity!r}")


def computed_constants(fig: Figure) -> dict[str, float]:
    """The figure's reported constants recomputed from the closed forms."""
    p = fig.params
    out = {}
    for key in fig.reported:
        if key == "g2_0":
            out[key] = g2(p, 0.0)
        elif key == "g2_inf":
            out[key] = g2_asymptote(p)
        elif key == "rc_inf":
            out[key] = rc_asymptote(p)
        elif key == "qm_0":
            out[key] = mandel_q(p, 0.0)
        elif key.endswith("_crossing"):
            name = key[: -len("_crossing")]
            roots = classify(p, fig.x_max, 2).crossings[name]
            out[key] = roots[0] if roots else float("nan")
    return out

