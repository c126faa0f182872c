"""Pure-Python hot loops.

Mirrors ``_ckernels.pyx`` operation for operation, so both backends give the
same bits on IEEE-754 hardware.  Fused multiply-add is emulated exactly with a
Dekker two-product and ``math.fsum``.
"""

import math

BACKEND = "python"

_SPLIT = 134217729.0  # 2**27 + 1
_HALF_PI = 0.5 * math.pi


def _two_prod(x, y):
    p = x * y
    t = _SPLIT * x
    xh = t - (t - x)
    xl = x - xh
    t = _SPLIT * y
    yh = t - (t - y)
    yl = y - yh
    e = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl
    return p, e


def fma(x, y, z):
    """Correctly rounded ``x*y + z``."""
    p, e = _two_prod(x, y)
    return math.fsum((z, p, e))


def stepped_product(a, b, stride, offset, n):
    """Direct product of ``a + (stride*j + offset)*b`` for ``j < n``."""
    p = 1.0
    for j in range(n):
        p *= fma(float(stride * j + offset), b, a)
        if p == math.inf:
            break
    return p


def stepped_log_sum(a, b, stride, offset, n):
    """Neumaier-compensated sum of ``log(a + (stride*j + offset)*b)``."""
    s = 0.0
    c = 0.0
    log = math.log
    for j in range(n):
        x = log(fma(float(stride * j + offset), b, a))
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    return s + c


def ratio_product(n1, n2, d1, d2, step, count, log_threshold):
    """Product over ``i < count`` of ``(n1+i s)/(d1+i s) * (n2+i s)/(d2+i s)``.

    Switches to compensated log-space accumulation when ``count`` exceeds
    ``log_threshold``.
    """
    if count <= log_threshold:
        p = 1.0
        for i in range(count):
            fi = float(i)
            p *= (fma(fi, step, n1) / fma(fi, step, d1)) * (
                fma(fi, step, n2) / fma(fi, step, d2)
            )
        return p
    s = 0.0
    c = 0.0
    log = math.log
    for i in range(count):
        fi = float(i)
        x = log(
            (fma(fi, step, n1) / fma(fi, step, d1))
            * (fma(fi, step, n2) / fma(fi, step, d2))
        )
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    return math.exp(s + c)


def alternating_ratio_product(num_start, den_start, step, count, log_threshold):
    """Product over ``j < count`` of ``(num_start + ceil(j/2) s) / (den_start + floor(j/2) s)``."""
    if count <= log_threshold:
        p = 1.0
        for j in range(count):
            p *= fma(float((j + 1) // 2), step, num_start) / fma(
                float(j // 2), step, den_start
            )
        return p
    s = 0.0
    c = 0.0
    log = math.log
    for j in range(count):
        x = log(
            fma(float((j + 1) // 2), step, num_start)
            / fma(float(j // 2), step, den_start)
        )
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    return math.exp(s + c)


def _softplus(z):
    if z > 0.0:
        return z + math.log1p(math.exp(-z))
    return math.log1p(math.exp(z))


def de_beta_level(u, v, h, kmax, odd_only):
    """Sum of double-exponential terms of the unit Beta integrand.

    Nodes are ``tau = k*h`` for ``|k| <= kmax`` (odd ``k`` only when
    ``odd_only``).  The integrand ``t**(u-1) (1-t)**(v-1)`` times the
    Jacobian is evaluated in log form with ``t = 1/(1+exp(-2s))``,
    ``s = pi/2 sinh(tau)``, so ``t`` never reaches 0 or 1.

    Returns ``(sum, evaluations)``; the caller multiplies by ``h``.
    """
    s = 0.0
    c = 0.0
    n = 0
    k = -kmax
    stride = 1
    if odd_only:
        if k % 2 == 0:
            k += 1
        stride = 2
    while k <= kmax:
        tau = k * h
        sh = _HALF_PI * math.sinh(tau)
        log_t = -_softplus(-2.0 * sh)
        log_1mt = -_softplus(2.0 * sh)
        x = math.pi * math.cosh(tau) * math.exp(u * log_t + v * log_1mt)
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
        n += 1
        k += stride
    return s + c, n
