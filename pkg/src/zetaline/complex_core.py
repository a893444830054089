"""Scalar double-precision kernels: restricted powers, sin(pi z), squared
reciprocal hyperbolics, and log-gamma.

Everything here is branch-audited for three properties the rest of the
package leans on:

* conjugation symmetry is bitwise (f(conj z) == conj(f(z))) so contour
  evaluations inherit Schwarz reflection exactly,
* zeros that are exact in exact arithmetic stay exact in floats
  (sin(pi n) == 0 for integer n, cos(pi/2) == 0, ...),
* large arguments never overflow when the true value is representable
  (scaled forms for 1/cosh^2 and 1/sinh^2).

Only `math`/`cmath` are used; no state, no configuration.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError, PoleError

__all__ = [
    "cpow_principal",
    "sin_pi_z",
    "cos_pi_z",
    "sech_sq_pi",
    "csch_sq_half",
    "sinhc_half",
    "log_gamma",
    "gamma",
]

_TWO_PI = 2.0 * math.pi
_HALF_LOG_TWO_PI = 0.5 * math.log(_TWO_PI)

# Lanczos approximation, g = 607/128, 15 terms.  Good to ~1e-15 relative on
# the half-plane Re z >= 1/2 in doubles.
_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)


def cpow_principal(z: complex, w: complex) -> complex:
    """z**w on the closed right half-plane, arg z restricted to [-pi/2, pi/2].

    Defined as exp(w * (ln|z| + i*arg z)).  With Re z >= 0 the atan2 argument
    already lies in [-pi/2, pi/2], so no branch folding is needed.  0**w is 0
    when Re w > 0 and undefined otherwise.

    Raises DomainError off the half-plane and lets OverflowError propagate
    when exp(Re(w log z)) leaves double range.
    """
    z = complex(z)
    w = complex(w)
    if z.real == 0.0 and z.imag == 0.0:
        if w.real > 0.0:
            return complex(0.0, 0.0)
        raise DomainError(f"0**w undefined for Re w <= 0 (w={w})")
    if z.real < 0.0:
        raise DomainError(f"cpow_principal needs Re z >= 0, got z={z}")
    if w.real == 0.0 and w.imag == 0.0:
        return complex(1.0, 0.0)
    if z.imag == 0.0 and w.imag == 0.0 and z.real > 0.0:
        # exact on positive reals (pow(4.0, 0.5) == 2.0 bitwise)
        return complex(math.pow(z.real, w.real), 0.0)
    lr = math.log(math.hypot(z.real, z.imag))
    th = math.atan2(z.imag, z.real)
    a = w.real * lr - w.imag * th
    b = w.real * th + w.imag * lr
    m = math.exp(a)
    return complex(m * math.cos(b), m * math.sin(b))


def _sin_pi(x: float) -> float:
    """sin(pi*x) with exact zeros at integer x."""
    r = math.fmod(x, 2.0)  # (-2, 2), exact
    if r > 1.0:
        r -= 2.0  # Sterbenz-exact
    elif r < -1.0:
        r += 2.0
    if r == 0.0 or r == 1.0 or r == -1.0:
        return 0.0
    # fold into [-1/2, 1/2] where sin(pi*r) is well conditioned
    if r > 0.5:
        r = 1.0 - r
    elif r < -0.5:
        r = -1.0 - r
    return math.sin(math.pi * r)


def _cos_pi(x: float) -> float:
    """cos(pi*x) with exact zeros at half-integer x."""
    r = math.fmod(abs(x), 2.0)
    if r > 1.0:
        r = 2.0 - r  # cos(pi r) even around r = 1, fold is exact
    return math.sin(math.pi * (0.5 - r))


def sin_pi_z(z: complex) -> complex:
    """sin(pi z) via the split form sin(pi x)cosh(pi y) + i cos(pi x)sinh(pi y).

    Exactly zero at real integers.  Supports |Im z| <= 300; cosh raises
    OverflowError before the cap (|Im z| > ~225.9) since the true value
    itself leaves double range there.
    """
    z = complex(z)
    if abs(z.imag) > 300.0:
        raise DomainError(f"sin_pi_z supports |Im z| <= 300, got {z.imag}")
    py = math.pi * z.imag
    return complex(_sin_pi(z.real) * math.cosh(py), _cos_pi(z.real) * math.sinh(py))


def cos_pi_z(z: complex) -> complex:
    """cos(pi z) in the same split style; exactly zero at real half-integers."""
    z = complex(z)
    if abs(z.imag) > 300.0:
        raise DomainError(f"cos_pi_z supports |Im z| <= 300, got {z.imag}")
    py = math.pi * z.imag
    return complex(_cos_pi(z.real) * math.cosh(py), -_sin_pi(z.real) * math.sinh(py))


def sech_sq_pi(y: float) -> float:
    """1/cosh(pi y)^2 without overflow, even in y bitwise.

    Scaled form 4 e^{-2 pi |y|} / (1 + e^{-2 pi |y|})^2; underflows cleanly
    to 0.0 once e^{-2 pi |y|} does (|y| >~ 118.6).
    """
    q = math.exp(-_TWO_PI * abs(y))
    return 4.0 * q / ((1.0 + q) * (1.0 + q))


def csch_sq_half(t: float) -> float:
    """1/sinh(t/2)^2 for t > 0, overflow-free for large t.

    Uses 4/t^2 - 1/3 below t = 1e-4 (next term t^2/60 is ~4e-19 relative
    there) and the scaled form 4 e^{-t} / (1 - e^{-t})^2 elsewhere, with the
    denominator via expm1 so small t loses nothing to cancellation.
    """
    if not t > 0.0:
        raise DomainError(f"csch_sq_half needs t > 0, got {t}")
    if t < 1e-4:
        h = 2.0 / t  # (2/t)^2 stays finite down to t ~ 1.2e-154, then inf
        return h * h - 1.0 / 3.0
    em = -math.expm1(-t)  # 1 - e^{-t}
    return 4.0 * math.exp(-t) / (em * em)


def sinhc_half(t: float) -> float:
    """sinh(t/2)/(t/2), even in t, >= 1 everywhere, exactly 1 at t = 0.

    The reciprocal square (t/2)^2/sinh^2(t/2) is the overflow-free way to
    write t^2 * csch_sq_half(t): safe however small t gets, which the bare
    csch_sq_half is not.  Valid for |t| <= 1400 (sinh overflows beyond).
    """
    x = 0.5 * abs(t)
    if x < 5e-5:
        return 1.0 + x * x / 6.0  # next term x^4/120 is below 1 ulp here
    return math.sinh(x) / x


def log_gamma(z: complex) -> complex:
    """A logarithm of Gamma(z): exp(log_gamma(z)) == Gamma(z), real on (0, inf).

    Lanczos sum on Re z >= 1/2, reflection via ln(pi / sin(pi z)) - log_gamma(1 - z)
    on the left half-plane (principal logs; the imaginary part may fold by
    2 pi there, which callers using exp() never see).

    Raises PoleError within 1e-12 of the poles 0, -1, -2, ...
    """
    z = complex(z)
    if z.real < 0.5:
        n = round(z.real)
        if n <= 0 and math.hypot(z.real - n, z.imag) <= 1e-12:
            raise PoleError(f"log_gamma pole at z={z}")
        s = sin_pi_z(z)
        return cmath.log(math.pi) - cmath.log(s) - log_gamma(1.0 - z)
    ser = _LANCZOS_C[0]
    for k in range(1, 15):
        ser += _LANCZOS_C[k] / (z + (k - 1))
    base = z + (_LANCZOS_G - 0.5)
    return (z - 0.5) * cmath.log(base) - base + _HALF_LOG_TWO_PI + cmath.log(ser)


def gamma(z: complex) -> complex:
    """Gamma(z) = exp(log_gamma(z)); OverflowError when the value leaves doubles."""
    return cmath.exp(log_gamma(complex(z)))
