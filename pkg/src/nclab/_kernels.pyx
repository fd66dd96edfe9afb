# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring :mod:`nclab._kernels_py` point for point."""

import numpy as np
cimport numpy as cnp
from cython.parallel cimport prange
from libc.math cimport cosh, tanh, exp, expm1, sqrt, cos, sin, M_PI, INFINITY

cnp.import_array()

cdef double _OVERFLOW = 350.0
OVERFLOW_X = _OVERFLOW


ctypedef struct State:
    double nbar
    double r
    double k
    double ar
    double ai
    double br       # conj(alpha) * exp(i theta)
    double bi
    double ct
    double st
    double coth
    double e2r      # exp(2 r)
    double n0
    bint coherent


cdef State _state(double nbar, double r, double theta, double ar, double ai) noexcept nogil:
    cdef State s
    s.nbar = nbar
    s.r = r
    s.k = nbar + 0.5
    s.ar = ar
    s.ai = ai
    s.ct = cos(theta)
    s.st = sin(theta)
    s.br = ar * s.ct + ai * s.st
    s.bi = ar * s.st - ai * s.ct
    s.coth = 1.0 / tanh(r / 2.0) if r > 0.0 else 0.0
    s.e2r = exp(2.0 * r)
    s.n0 = s.k * cosh(2.0 * r) - 0.5 + ar * ar + ai * ai
    s.coherent = ar != 0.0 or ai != 0.0
    return s


cdef inline void _amplitude(State* s, double x, double ch, double sh, double cm1,
                            double* out_re, double* out_im) noexcept nogil:
    # ch, sh, cm1 = cosh x, sinh x, cosh x - 1
    cdef double direct, crossed
    if not s.coherent:
        out_re[0] = 0.0
        out_im[0] = 0.0
        return
    if x == 0.0:
        out_re[0] = s.ar
        out_im[0] = s.ai
        return
    direct = ch + 0.5 * s.coth * sh - 0.5 * cm1
    crossed = -0.5 * sh - 0.5 * s.coth * cm1
    out_re[0] = s.ar * direct + s.br * crossed
    out_im[0] = s.ai * direct + s.bi * crossed


cdef inline void _hyper(double x, double* ch, double* sh, double* cm1) noexcept nogil:
    # all three from one expm1 call, accurate near x = 0
    cdef double em = expm1(x)
    cm1[0] = em * em / (2.0 * (em + 1.0))
    ch[0] = 1.0 + cm1[0]
    sh[0] = em * (em + 2.0) / (2.0 * (em + 1.0))


def amplitude(double r, double theta, double ar, double ai, xs):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef Py_ssize_t i, m = xv.shape[0]
    cdef State s = _state(0.0, r, theta, ar, ai)
    cdef double ch, sh, cm1
    out = np.empty(m, dtype=np.complex128)
    cdef double[::1] buf = out.view(np.float64)
    with nogil:
        for i in range(m):
            _hyper(xv[i], &ch, &sh, &cm1)
            _amplitude(&s, xv[i], ch, sh, cm1, &buf[2 * i], &buf[2 * i + 1])
    return out.reshape(np.shape(xs))


cdef inline double _g2(State* s, double x, double g2_inf) noexcept nogil:
    cdef double ch, sh, cm1, a_re, a_im, n, s_, u, v, nt, ep, em, wr, wi
    if x + 2.0 * s.r > _OVERFLOW:
        return g2_inf
    _hyper(x, &ch, &sh, &cm1)
    _amplitude(s, x, ch, sh, cm1, &a_re, &a_im)
    # cosh/sinh(x + 2r) from exp(x) and exp(2r)
    ep = (ch + sh) * s.e2r
    em = 1.0 / ep
    n = s.k * 0.5 * (ep + em) - 0.5 * ch
    s_ = s.k * 0.5 * (ep - em) - 0.5 * sh
    u = 2.0 * (s.ar * a_re + s.ai * a_im)
    # Re(alpha * A * exp(-i theta))
    wr = s.ar * a_re - s.ai * a_im
    wi = s.ar * a_im + s.ai * a_re
    v = 2.0 * (wr * s.ct + wi * s.st)
    # cosh 2(x + r) = 2 sinh^2(x + r) + 1
    ep = (ch + sh) * sqrt(s.e2r)
    nt = s.k * (0.5 * (ep * ep + 1.0 / (ep * ep))) - 0.5 + a_re * a_re + a_im * a_im
    return 1.0 + (n * n + s_ * s_ + u * n - v * s_) / (s.n0 * nt)


def g2_curve(double nbar, double r, double theta, double ar, double ai, xs,
             double g2_inf):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef Py_ssize_t i, m = xv.shape[0]
    cdef State s = _state(nbar, r, theta, ar, ai)
    out = np.empty(m)
    cdef double[::1] ov = out
    for i in prange(m, nogil=True, schedule="static"):
        ov[i] = _g2(&s, xv[i], g2_inf)
    return out.reshape(np.shape(xs))


def g2_point(double nbar, double r, double theta, double ar, double ai, double x,
             double g2_inf):
    cdef State s = _state(nbar, r, theta, ar, ai)
    return _g2(&s, x, g2_inf)


cdef inline double _qm(State* s, double x) noexcept nogil:
    # (N^2 + |M|^2 + 2|A|^2 N + 2 Re(A*^2 M)) / (|A|^2 + N), scaled by 1/max(N, 1)
    cdef double ch, sh, cm1, a_re, a_im, e, cn, sn, m_re, m_im, mod2, c2_re, c2_im
    cdef double scale, num
    if x + s.r > _OVERFLOW:
        # the variance term wins once doubles run out
        return INFINITY
    _hyper(x, &ch, &sh, &cm1)
    _amplitude(s, x, ch, sh, cm1, &a_re, &a_im)
    e = (ch + sh) * (ch + sh) * s.e2r       # exp(2 (x + r))
    cn = s.k * 0.5 * (e + 1.0 / e) - 0.5
    sn = 0.5 * (e - 1.0 / e)
    m_re = -s.k * s.ct * sn
    m_im = -s.k * s.st * sn
    mod2 = a_re * a_re + a_im * a_im
    c2_re = a_re * a_re - a_im * a_im
    c2_im = -2.0 * a_re * a_im
    scale = 1.0 / cn if cn > 1.0 else 1.0
    num = (cn * (cn * scale) + m_re * (m_re * scale) + m_im * (m_im * scale)
           + 2.0 * mod2 * (cn * scale) + 2.0 * (c2_re * (m_re * scale) - c2_im * (m_im * scale)))
    return num / ((mod2 + cn) * scale)


def qm_curve(double nbar, double r, double theta, double ar, double ai, xs):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64).ravel()
    cdef Py_ssize_t i, m = xv.shape[0]
    cdef State s = _state(nbar, r, theta, ar, ai)
    out = np.empty(m)
    cdef double[::1] ov = out
    for i in prange(m, nogil=True, schedule="static"):
        ov[i] = _qm(&s, xv[i])
    return out.reshape(np.shape(xs))


def qm_point(double nbar, double r, double theta, double ar, double ai, double x):
    cdef State s = _state(nbar, r, theta, ar, ai)
    return _qm(&s, x)


def p_grid(double a_sq, double b_sq, double c, double center_re, double center_im,
           re, im):
    cdef double[::1] rv = np.ascontiguousarray(re, dtype=np.float64).ravel()
    cdef double[::1] iv = np.ascontiguousarray(im, dtype=np.float64).ravel()
    cdef Py_ssize_t i, j, nr = rv.shape[0], ni = iv.shape[0]
    cdef double disc = 4.0 * a_sq * b_sq - c * c
    cdef double norm = (2.0 / M_PI) / sqrt(disc)
    cdef double f, d
    out = np.empty((nr, ni))
    cdef double[:, ::1] ov = out
    for i in prange(nr, nogil=True, schedule="static"):
        f = 2.0 * (center_re - rv[i])
        for j in range(ni):
            d = -2.0 * (center_im - iv[j])
            ov[i, j] = norm * exp(-(a_sq * f * f + b_sq * d * d + c * f * d) / disc)
    return out
