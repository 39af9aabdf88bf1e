"""Direct evaluation of the finite products; the brute-force oracle.

Everything is accumulated in log space: the exponential damping factors
contribute ``-p/j`` terms and each polynomial factor contributes
``log(1 + p/j + q/j^2)``.  Real and imaginary parts are summed with a
Neumaier compensated accumulator so that a million factors keep the
aggregate rounding at the few-ulp level.  Negative real factors are
handled by explicit sign tracking instead of complex logs when the
parameters are real.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "ProductResult",
    "w_product",
    "r_product",
    "wallis_seq",
    "wallis_seq_exact",
]

_ZERO_TOL = 1e-15
_EXP_OVERFLOW = 709.0  # log of the largest finite double, minus slack


class _Neumaier:
    """Running compensated sum (Neumaier's variant of Kahan summation)."""

    __slots__ = ("_s", "_c")

    def __init__(self) -> None:
        self._s = 0.0
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s + x
        if abs(self._s) >= abs(x):
            self._c += (self._s - s) + x
        else:
            self._c += (x - s) + self._s
        self._s = s

    @property
    def total(self) -> float:
        return self._s + self._c


@dataclass(frozen=True)
class ProductResult:
    """Value of a finite product with log-space and zero diagnostics.

    ``value = exp(log_abs) * phase`` when no factor vanished.  For real
    parameters ``phase_or_sign`` is the accumulated sign (+1.0 or -1.0);
    for complex parameters it is the unreduced sum of the factor phases
    in radians.  ``zero_factor_at`` is the first index whose polynomial
    part is exactly zero (then ``value == 0`` and ``log_abs == -inf``).
    ``near_zero_at`` flags the first factor that came within 1e-15 of
    zero without being an exact rational root: the result is still
    returned but its precision is reduced.
    """

    value: complex
    log_abs: float
    phase_or_sign: float
    zero_factor_at: int | None
    terms: int
    near_zero_at: int | None = None

    def to_json_dict(self) -> dict:
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "log_abs": self.log_abs,
            "phase_or_sign": self.phase_or_sign,
            "zero_factor_at": self.zero_factor_at,
            "terms": self.terms,
            "near_zero_at": self.near_zero_at,
        }


def _exact_zero_real(den: int, p: float, q: float) -> bool:
    # den^2 + p*den + q == 0 checked in exact rational arithmetic
    # (floats convert to Fractions exactly)
    d = Fraction(den)
    return d * d + Fraction(p) * d + Fraction(q) == 0


def _product(n: int, p: complex, q: complex, denominator) -> ProductResult:
    p = complex(p)
    q = complex(q)
    real_mode = p.imag == 0.0 and q.imag == 0.0
    re_sum = _Neumaier()
    im_sum = _Neumaier()
    sign = 1.0
    zero_at: int | None = None
    near_at: int | None = None

    underflow = False
    for j in range(1, n + 1):
        den = denominator(j)
        factor = 1 + p / den + q / (den * den)
        if abs(factor) < _ZERO_TOL:
            if real_mode and _exact_zero_real(den, p.real, q.real):
                zero_at = j
                break
            if near_at is None:
                near_at = j
            if factor == 0:
                # rounded to zero in double without being an exact root:
                # the product is unrepresentably small, not exactly zero
                underflow = True
                break
        if real_mode:
            x = factor.real
            if x < 0.0:
                sign = -sign
            re_sum.add(math.log(abs(x)))
            re_sum.add(-p.real / den)
        else:
            term = cmath.log(factor)
            re_sum.add(term.real)
            im_sum.add(term.imag)
            re_sum.add(-p.real / den)
            im_sum.add(-p.imag / den)

    if zero_at is not None:
        return ProductResult(0j, -math.inf, 0.0, zero_at, n, near_at)
    if underflow:
        return ProductResult(0j, -math.inf, 0.0, None, n, near_at)

    log_abs = re_sum.total
    if real_mode:
        mag = math.inf if log_abs > _EXP_OVERFLOW else math.exp(log_abs)
        return ProductResult(complex(sign * mag, 0.0), log_abs, sign, None, n, near_at)
    phase = im_sum.total
    if log_abs > _EXP_OVERFLOW:
        value = complex(math.inf, math.inf)
    else:
        value = cmath.exp(complex(log_abs, phase))
    return ProductResult(value, log_abs, phase, None, n, near_at)


def w_product(n: int, p: complex, q: complex) -> ProductResult:
    """``prod_{j=1..n} exp(-p/j) (1 + p/j + q/j^2)`` by direct accumulation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _product(n, p, q, lambda j: j)


def r_product(n: int, p: complex, q: complex) -> ProductResult:
    """Odd-denominator analogue over ``2j - 1`` by direct accumulation."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _product(n, p, q, lambda j: 2 * j - 1)


def wallis_seq(n: int) -> float:
    """Classical Wallis partial product ``prod_{k=1..n} 4k^2 / (4k^2 - 1)``.

    Evaluated as ``exp(sum log1p(1/(4k^2-1)))`` with exact summation, so
    the relative error stays at the few-ulp level even for ``n = 10^6``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.exp(math.fsum(math.log1p(1.0 / (4.0 * k * k - 1.0)) for k in range(1, n + 1)))


def wallis_seq_exact(n: int) -> Fraction:
    """The same partial product as an exact rational.

    ``prod 4k^2/(4k^2-1) = 16^n (n!)^4 / ((2n)! (2n+1)!)`` after
    telescoping the odd factors into factorials.  Intended for oracle
    use at moderate ``n``; the integers grow fast.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(16**n * math.factorial(n) ** 4,
                    math.factorial(2 * n) * math.factorial(2 * n + 1))
