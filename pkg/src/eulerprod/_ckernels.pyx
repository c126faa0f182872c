# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops; see ``_pykernels`` for the reference semantics."""

from libc.math cimport fma, log, log1p, exp, sinh, cosh, fabs, INFINITY, M_PI

BACKEND = "cython"

cdef double _HALF_PI = 0.5 * M_PI


cdef inline void _nsum(double *s, double *c, double x) noexcept nogil:
    cdef double t = s[0] + x
    if fabs(s[0]) >= fabs(x):
        c[0] += (s[0] - t) + x
    else:
        c[0] += (x - t) + s[0]
    s[0] = t


def stepped_product(double a, double b, long long stride, long long offset, long long n):
    cdef double p = 1.0
    cdef long long j
    with nogil:
        for j in range(n):
            p *= fma(<double>(stride * j + offset), b, a)
            if p == INFINITY:
                break
    return p


def stepped_log_sum(double a, double b, long long stride, long long offset, long long n):
    cdef double s = 0.0, c = 0.0
    cdef long long j
    with nogil:
        for j in range(n):
            _nsum(&s, &c, log(fma(<double>(stride * j + offset), b, a)))
    return s + c


def ratio_product(double n1, double n2, double d1, double d2, double step,
                  long long count, long long log_threshold):
    cdef double p = 1.0, s = 0.0, c = 0.0, fi
    cdef long long i
    with nogil:
        if count <= log_threshold:
            for i in range(count):
                fi = <double>i
                p *= (fma(fi, step, n1) / fma(fi, step, d1)) * (
                    fma(fi, step, n2) / fma(fi, step, d2))
        else:
            for i in range(count):
                fi = <double>i
                _nsum(&s, &c, log((fma(fi, step, n1) / fma(fi, step, d1))
                                  * (fma(fi, step, n2) / fma(fi, step, d2))))
            p = exp(s + c)
    return p


def alternating_ratio_product(double num_start, double den_start, double step,
                              long long count, long long log_threshold):
    cdef double p = 1.0, s = 0.0, c = 0.0
    cdef long long j
    with nogil:
        if count <= log_threshold:
            for j in range(count):
                p *= fma(<double>((j + 1) // 2), step, num_start) / fma(
                    <double>(j // 2), step, den_start)
        else:
            for j in range(count):
                _nsum(&s, &c, log(fma(<double>((j + 1) // 2), step, num_start)
                                  / fma(<double>(j // 2), step, den_start)))
            p = exp(s + c)
    return p


cdef inline double _softplus(double z) noexcept nogil:
    if z > 0.0:
        return z + log1p(exp(-z))
    return log1p(exp(z))


def de_beta_level(double u, double v, double h, long long kmax, bint odd_only):
    cdef double s = 0.0, c = 0.0, tau, sh, log_t, log_1mt
    cdef long long k = -kmax, stride = 1, n = 0
    if odd_only:
        if k % 2 == 0:
            k += 1
        stride = 2
    with nogil:
        while k <= kmax:
            tau = k * h
            sh = _HALF_PI * sinh(tau)
            log_t = -_softplus(-2.0 * sh)
            log_1mt = -_softplus(2.0 * sh)
            _nsum(&s, &c, M_PI * cosh(tau) * exp(u * log_t + v * log_1mt))
            n += 1
            k += stride
    return s + c, n
