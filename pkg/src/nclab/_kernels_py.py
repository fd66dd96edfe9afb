"""Vectorized numpy kernels; the fallback when the compiled module is absent.

Every function takes plain floats plus 1-D arrays so both backends share one
signature. Complex amplitudes are passed as separate real and imaginary parts.
"""

import numpy as np

#: Above this value of ``x + 2r`` the g2 kernels return the supplied asymptote.
OVERFLOW_X = 350.0


def amplitude(r, theta, ar, ai, xs):
    """Mean field ``A(x)`` for coherent amplitude ``ar + i ai``."""
    xs = np.asarray(xs, dtype=float)
    alpha = complex(ar, ai)
    if alpha == 0:
        return np.zeros(xs.shape, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        coth = 1.0 / np.tanh(r / 2.0)
        cm1 = 2.0 * np.sinh(xs / 2.0) ** 2
        direct = np.cosh(xs) + 0.5 * coth * np.sinh(xs) - 0.5 * cm1
        crossed = -0.5 * np.sinh(xs) - 0.5 * coth * cm1
    direct = np.where(xs == 0, 1.0, direct)
    crossed = np.where(xs == 0, 0.0, crossed)
    return alpha * direct + alpha.conjugate() * np.exp(1j * theta) * crossed


def g2_curve(nbar, r, theta, ar, ai, xs, g2_inf):
    xs = np.asarray(xs, dtype=float)
    out = np.empty(xs.shape)
    far = xs + 2.0 * r > OVERFLOW_X
    out[far] = g2_inf
    x = xs[~far]
    k = nbar + 0.5
    alpha = complex(ar, ai)
    a = amplitude(r, theta, ar, ai, x)
    n = k * np.cosh(x + 2 * r) - 0.5 * np.cosh(x)
    s = k * np.sinh(x + 2 * r) - 0.5 * np.sinh(x)
    u = 2.0 * (alpha * a.conj()).real
    v = 2.0 * (alpha * a * np.exp(-1j * theta)).real
    n0 = k * np.cosh(2 * r) - 0.5 + abs(alpha) ** 2
    nt = k * np.cosh(2 * (x + r)) - 0.5 + np.abs(a) ** 2
    out[~far] = 1.0 + (n * n + s * s + u * n - v * s) / (n0 * nt)
    return out


def qm_curve(nbar, r, theta, ar, ai, xs):
    xs = np.asarray(xs, dtype=float)
    with np.errstate(over="ignore", invalid="ignore"):
        return _qm(nbar, r, theta, ar, ai, xs)


def _qm(nbar, r, theta, ar, ai, xs):
    k = nbar + 0.5
    a = amplitude(r, theta, ar, ai, xs)
    y = 2.0 * (xs + r)
    central_n = k * np.cosh(y) - 0.5
    central_aa = -k * np.exp(1j * theta) * np.sinh(y)
    mod2 = np.abs(a) ** 2
    # (N^2 + |M|^2 + 2|A|^2 N + 2 Re(A*^2 M)) / (|A|^2 + N), scaled by 1/max(N, 1)
    scale = 1.0 / np.maximum(central_n, 1.0)
    num = (
        central_n * (central_n * scale)
        + np.abs(central_aa) * (np.abs(central_aa) * scale)
        + 2.0 * mod2 * (central_n * scale)
        + 2.0 * (a.conj() ** 2 * (central_aa * scale)).real
    )
    out = num / ((mod2 + central_n) * scale)
    # the variance term wins once doubles run out
    return np.where(xs + r > OVERFLOW_X, np.inf, out)


def p_grid(a_sq, b_sq, c, center_re, center_im, re, im):
    """P on the outer product grid ``re x im``; result has shape ``(len(re), len(im))``."""
    re = np.asarray(re, dtype=float)
    im = np.asarray(im, dtype=float)
    disc = 4.0 * a_sq * b_sq - c * c
    f = 2.0 * (center_re - re)[:, None]
    d = -2.0 * (center_im - im)[None, :]
    quad = a_sq * f * f + b_sq * d * d + c * f * d
    return (2.0 / np.pi) / np.sqrt(disc) * np.exp(-quad / disc)


def g2_point(nbar, r, theta, ar, ai, x, g2_inf):
    return float(g2_curve(nbar, r, theta, ar, ai, np.array([x]), g2_inf)[0])


def qm_point(nbar, r, theta, ar, ai, x):
    return float(qm_curve(nbar, r, theta, ar, ai, np.array([x]))[0])
