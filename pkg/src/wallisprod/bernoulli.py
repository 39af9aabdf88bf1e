"""Exact Bernoulli numbers and Bernoulli polynomials over rationals.

Sign convention
---------------
All values follow the generating function ``z*exp(t*z)/(exp(z) - 1)``,
so ``B_1 = B_1(0) = -1/2``.  The opposite convention (``B_1 = +1/2``)
flips the sign of every odd-order contribution downstream, so the
convention is pinned here once and for all.  Even-index numbers agree
under both conventions, and ``B_{2k+1} = 0`` for ``k >= 1``.

Everything in this module is exact: values are `fractions.Fraction`
and polynomial evaluation at a rational point stays rational.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Rational",
    "format_rational",
    "parse_rational",
    "binomial",
    "UniPoly",
    "BernoulliTable",
    "bernoulli_number",
    "bernoulli_poly",
    "eval_unipoly",
    "eval_unipoly_complex",
]

# Exact rational substrate.  `fractions.Fraction` already guarantees the
# canonical form we need: lowest terms, positive denominator, value equality.
Rational = Fraction


def format_rational(x: Fraction) -> str:
    """Render a rational as ``"num/den"``, or ``"num"`` for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational` (also accepts decimal strings)."""
    return Fraction(text.strip())


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient C(n, k); zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires non-negative arguments")
    return math.comb(n, k)


@dataclass(frozen=True)
class UniPoly:
    """Dense univariate polynomial with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``.  Trailing zero
    coefficients are stripped on construction, so equality of the
    coefficient tuples is equality of polynomials.  The zero polynomial
    is the empty tuple.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def evaluate(self, x: Fraction | int) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_complex(self, z: complex) -> complex:
        """Horner evaluation in double-precision complex arithmetic.

        Raises OverflowError if a coefficient does not fit in a double.
        """
        z = complex(z)
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc


class BernoulliTable:
    """Monotonically growing cache of Bernoulli numbers and polynomials.

    Numbers are produced by the Akiyama-Tanigawa triangle (which natively
    yields the ``B_1 = +1/2`` convention; the sign of index 1 is flipped
    on storage).  Polynomials come from ``B_n(t) = sum_k C(n,k) B_{n-k} t^k``.
    Growth is serialized by an internal lock; reads of already computed
    entries are safe from any thread.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._row: list[Fraction] = []          # Akiyama-Tanigawa working row
        self._numbers: list[Fraction] = []      # B_0 .. B_m with B_1 = -1/2
        self._polys: dict[int, UniPoly] = {}

    def _grow(self, n: int) -> None:
        for m in range(len(self._numbers), n + 1):
            self._row.append(Fraction(0))
            self._row[m] = Fraction(1, m + 1)
            for j in range(m, 0, -1):
                self._row[j - 1] = j * (self._row[j - 1] - self._row[j])
            value = self._row[0]
            if m == 1:
                value = Fraction(-1, 2)
            self._numbers.append(value)

    def number(self, n: int) -> Fraction:
        """Exact ``B_n`` (with ``B_1 = -1/2``)."""
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        with self._lock:
            self._grow(n)
            return self._numbers[n]

    def polynomial(self, n: int) -> UniPoly:
        """Exact coefficient list of the Bernoulli polynomial ``B_n(t)``."""
        if n < 0:
            raise ValueError("Bernoulli index must be non-negative")
        with self._lock:
            self._grow(n)
            poly = self._polys.get(n)
            if poly is None:
                coeffs = [
                    Fraction(math.comb(n, k)) * self._numbers[n - k]
                    for k in range(n + 1)
                ]
                poly = UniPoly(tuple(coeffs))
                self._polys[n] = poly
            return poly


_TABLE = BernoulliTable()


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number ``B_n`` from the shared table."""
    return _TABLE.number(n)


def bernoulli_poly(n: int) -> UniPoly:
    """Exact Bernoulli polynomial ``B_n(t)`` from the shared table."""
    return _TABLE.polynomial(n)


def eval_unipoly(poly: UniPoly, x: Fraction | int) -> Fraction:
    """Exact value of ``poly`` at the rational point ``x``."""
    return poly.evaluate(x)


def eval_unipoly_complex(poly: UniPoly, z: complex) -> complex:
    """Double-precision value of ``poly`` at the complex point ``z``."""
    return poly.evaluate_complex(z)
