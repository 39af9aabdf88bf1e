"""Exact coefficient families for the Wallis-type product expansions.

Two kinds of objects live here:

* ``a_poly(j)`` / ``b_poly(j)``: the coefficients of the ``1/(n+1)^j``
  (resp. ``1/(n+1/2)^j``) correction series of the generalized products
  ``W_n(p,q)`` and ``R_n(p,q)``, as exact bivariate polynomials in
  ``(p, q)``.  They are built by expanding the symmetric Bernoulli pair
  ``B_m(c*p + c*D) + B_m(c*p - c*D)`` in a formal variable ``D``,
  asserting that every odd power of ``D`` cancels, and then replacing
  ``D^2`` by ``p^2 - 4q``.  No square roots are ever taken, so the
  construction is exact end to end.

* the scalar families for the classical Wallis sequence
  ``W_n = prod 4k^2/(4k^2-1)``:

  - ``nu_j``:   ``ln(2 W_n / pi) ~ sum nu_j / n^j``
  - ``mu_j``:   ``2 W_n / pi ~ 1 + sum mu_j / n^j`` (exp-composition of nu)
  - ``(alpha_l, beta_l)``: shifted odd-power series
    ``1 + sum alpha_l / (n + beta_l)^(2l-1)``
  - ``omega_l``: odd-power series at the half-integer shift,
    ``exp(sum omega_l / (n + 1/2)^(2l-1))``, with two independent
    recurrences (odd-index and even-index matching) that must agree.

All values are exact `Fraction`s; nothing here touches floating point
except the complex evaluation helpers.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bernoulli import (
    bernoulli_number,
    bernoulli_poly,
    binomial,
    eval_unipoly_complex,
    format_rational,
    parse_rational,
)

__all__ = [
    "BiPoly",
    "GenericParams",
    "Family",
    "CoeffSeries",
    "generic_a",
    "a_poly",
    "b_poly",
    "eval_bipoly",
    "wallis_nu",
    "wallis_nu_raw",
    "exp_compose",
    "wallis_mu",
    "alpha_beta",
    "omega",
    "omega_alt",
]


class BiPoly:
    """Sparse bivariate polynomial ``sum c_ij * p^i * q^j`` over Fractions.

    The term map never stores zero coefficients, so two polynomials are
    equal iff their maps are equal.  Instances are treated as immutable;
    arithmetic returns new objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        if terms:
            for key, val in terms.items():
                val = Fraction(val)
                if val != 0:
                    clean[(int(key[0]), int(key[1]))] = val
        self.terms = clean

    @classmethod
    def constant(cls, c: Fraction | int) -> "BiPoly":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def var_p(cls) -> "BiPoly":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def var_q(cls) -> "BiPoly":
        return cls({(0, 1): Fraction(1)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None  # mutable dict inside; not hashable

    def __add__(self, other: "BiPoly | Fraction | int") -> "BiPoly":
        other = _as_bipoly(other)
        out = dict(self.terms)
        for key, val in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + val
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "BiPoly | Fraction | int") -> "BiPoly":
        return self + (-_as_bipoly(other))

    def __rsub__(self, other: "BiPoly | Fraction | int") -> "BiPoly":
        return _as_bipoly(other) + (-self)

    def __mul__(self, other: "BiPoly | Fraction | int") -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return BiPoly({k: v * c for k, v in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c: Fraction | int) -> "BiPoly":
        return self * (Fraction(1) / Fraction(c))

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("negative power of a polynomial")
        result = BiPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, p: complex, q: complex) -> complex:
        """Double-precision complex value at ``(p, q)``."""
        p = complex(p)
        q = complex(q)
        acc = 0j
        for (i, j), c in self.terms.items():
            acc += float(c) * p**i * q**j
        return acc

    def evaluate_exact(self, p: Fraction | int, q: Fraction | int) -> Fraction:
        """Exact rational value at a rational point ``(p, q)``."""
        p = Fraction(p)
        q = Fraction(q)
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * p**i * q**j
        return acc

    def _sorted_terms(self):
        # weighted degree (q counts double) descending, then p-degree descending
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + 2 * kv[0][1]), -kv[0][0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for (i, j), c in self._sorted_terms():
            mono = "*".join(
                filter(None, [
                    "p" if i == 1 else (f"p^{i}" if i > 1 else ""),
                    "q" if j == 1 else (f"q^{j}" if j > 1 else ""),
                ])
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"BiPoly({self})"


def _as_bipoly(x: "BiPoly | Fraction | int") -> BiPoly:
    if isinstance(x, BiPoly):
        return x
    return BiPoly.constant(x)


# ---------------------------------------------------------------------------
# Symbolic construction of a_j(p, q) and b_j(p, q)
# ---------------------------------------------------------------------------

def _expand_branch(m: int, c: Fraction, branch: int) -> BiPoly:
    """Expand ``B_m(c*p + branch*c*D)`` as a polynomial with axes (p, D)."""
    out: dict[tuple[int, int], Fraction] = {}
    poly = bernoulli_poly(m)
    for k, coef in enumerate(poly.coeffs):
        if coef == 0:
            continue
        ck = coef * c**k
        for r in range(k + 1):
            key = (k - r, r)
            val = ck * binomial(k, r) * Fraction(branch) ** r
            out[key] = out.get(key, Fraction(0)) + val
    return BiPoly(out)


def _symmetric_pair(m: int, c: Fraction, delta_sign: int = 1) -> BiPoly:
    """``B_m(c p + c D) + B_m(c p - c D)`` with odd powers of D checked to cancel.

    The (p, D) axes are reused from BiPoly; the second exponent is the
    formal power of D here, not of q.  ``delta_sign = -1`` swaps the two
    branches, which must produce the identical polynomial.
    """
    total = _expand_branch(m, c, delta_sign) + _expand_branch(m, c, -delta_sign)
    odd = [key for key in total.terms if key[1] % 2 == 1]
    if odd:
        raise AssertionError(f"odd powers of the discriminant root survived: {odd}")
    return total


def _substitute_disc(poly_pd: BiPoly) -> BiPoly:
    """Replace ``D^(2m)`` by ``(p^2 - 4q)^m``, returning a genuine (p, q) polynomial."""
    out: dict[tuple[int, int], Fraction] = {}
    for (i, r), coef in poly_pd.terms.items():
        m = r // 2
        for s in range(m + 1):
            key = (i + 2 * (m - s), s)
            val = coef * binomial(m, s) * Fraction(-4) ** s
            out[key] = out.get(key, Fraction(0)) + val
    return BiPoly(out)


def _coeff_poly(j: int, c: Fraction, lam_coeff: Fraction, delta_sign: int = 1) -> BiPoly:
    # shared shape of the two families: a linear term lam_coeff * p plus the
    # symmetrized Bernoulli pair at scale c
    if j < 1:
        raise ValueError("coefficient index must be >= 1")
    if j == 1:
        pair = _substitute_disc(_symmetric_pair(2, c, delta_sign))
        num = BiPoly.var_p() * lam_coeff + pair - 2 * bernoulli_number(2)
        return num / 2
    sign = Fraction((-1) ** (j + 1))
    pair = _substitute_disc(_symmetric_pair(j + 1, c, delta_sign))
    head = BiPoly.var_p() * (lam_coeff * bernoulli_number(j) / j)
    tail = (pair - 2 * bernoulli_number(j + 1)) * (sign / Fraction(j * (j + 1)))
    return head + tail


_POLY_LOCK = threading.Lock()
_A_CACHE: dict[int, BiPoly] = {}
_B_CACHE: dict[int, BiPoly] = {}


def a_poly(j: int, _delta_sign: int = 1) -> BiPoly:
    """Exact correction coefficient of ``1/(n+1)^j`` for ``W_n(p, q)``."""
    if _delta_sign == 1:
        with _POLY_LOCK:
            poly = _A_CACHE.get(j)
            if poly is None:
                poly = _coeff_poly(j, Fraction(1, 2), Fraction(1))
                _A_CACHE[j] = poly
            return poly
    return _coeff_poly(j, Fraction(1, 2), Fraction(1), _delta_sign)


def b_poly(j: int, _delta_sign: int = 1) -> BiPoly:
    """Exact correction coefficient of ``1/(n+1/2)^j`` for ``R_n(p, q)``."""
    if _delta_sign == 1:
        with _POLY_LOCK:
            poly = _B_CACHE.get(j)
            if poly is None:
                poly = _coeff_poly(j, Fraction(1, 4), Fraction(1, 2))
                _B_CACHE[j] = poly
            return poly
    return _coeff_poly(j, Fraction(1, 4), Fraction(1, 2), _delta_sign)


def eval_bipoly(poly: BiPoly, p: complex, q: complex) -> complex:
    """Double-precision value of a coefficient polynomial at complex ``(p, q)``."""
    return poly.evaluate(p, q)


# ---------------------------------------------------------------------------
# Generic complex coefficients a_j(lam, mu, nu)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenericParams:
    """Arbitrary complex triple (lam, mu, nu) for the generic coefficient."""

    lam: complex
    mu: complex
    nu: complex


def generic_a(j: int, params: GenericParams) -> complex:
    """Coefficient of ``1/z^j`` in the log-expansion of the gamma-ratio kernel.

    ``a_1 = (lam + B_2(mu) + B_2(nu) - 2 B_2) / 2`` and for ``j >= 2``
    ``a_j = lam B_j / j + (-1)^(j+1) (B_{j+1}(mu) + B_{j+1}(nu) - 2 B_{j+1}) / (j (j+1))``.
    """
    if j < 1:
        raise ValueError("coefficient index must be >= 1")
    lam = complex(params.lam)
    mu = complex(params.mu)
    nu = complex(params.nu)
    if j == 1:
        poly = bernoulli_poly(2)
        b2 = float(bernoulli_number(2))
        return (lam + eval_unipoly_complex(poly, mu) + eval_unipoly_complex(poly, nu) - 2 * b2) / 2
    poly = bernoulli_poly(j + 1)
    bj = float(bernoulli_number(j))
    bj1 = float(bernoulli_number(j + 1))
    pair = eval_unipoly_complex(poly, mu) + eval_unipoly_complex(poly, nu) - 2 * bj1
    return lam * bj / j + ((-1) ** (j + 1)) * pair / (j * (j + 1))


# ---------------------------------------------------------------------------
# Wallis-sequence coefficient families
# ---------------------------------------------------------------------------

class Family(str, Enum):
    NU = "nu"
    MU = "mu"
    OMEGA = "omega"
    ALPHA_BETA = "alpha_beta"


@dataclass(frozen=True)
class CoeffSeries:
    """Ordered exact coefficient list; ``values[k]`` is the index ``k+1`` entry."""

    family: Family
    order: int
    values: tuple

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("series order must be >= 1")
        if len(self.values) != self.order:
            raise ValueError("value count must equal the order")

    def to_json_dict(self) -> dict:
        if self.family is Family.ALPHA_BETA:
            vals = [[format_rational(a), format_rational(b)] for a, b in self.values]
        else:
            vals = [format_rational(v) for v in self.values]
        return {"family": self.family.value, "order": self.order, "values": vals}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, data: dict) -> "CoeffSeries":
        family = Family(data["family"])
        if family is Family.ALPHA_BETA:
            values = tuple((parse_rational(a), parse_rational(b)) for a, b in data["values"])
        else:
            values = tuple(parse_rational(v) for v in data["values"])
        return cls(family, int(data["order"]), values)

    def csv_rows(self) -> list[list[str]]:
        if self.family is Family.ALPHA_BETA:
            header = ["index", "alpha", "beta"]
            rows = [[str(k + 1), format_rational(a), format_rational(b)]
                    for k, (a, b) in enumerate(self.values)]
        else:
            header = ["index", "value"]
            rows = [[str(k + 1), format_rational(v)] for k, v in enumerate(self.values)]
        return [header, *rows]


def _nu_closed(j: int) -> Fraction:
    # reduced closed form: only B_{j+1} and powers of two appear
    scale = Fraction(4) - Fraction(1, 2 ** (j - 1))
    corr = Fraction(j + 1, 2**j)
    return Fraction((-1) ** (j + 1)) * (scale * bernoulli_number(j + 1) - corr) / (j * (j + 1))


_SERIES_LOCK = threading.Lock()
_NU_CACHE: list[Fraction] = []
_MU_CACHE: list[Fraction] = [Fraction(1)]  # index 0 entry of the exp-composition


def _nu_values(order: int) -> list[Fraction]:
    with _SERIES_LOCK:
        for j in range(len(_NU_CACHE) + 1, order + 1):
            _NU_CACHE.append(_nu_closed(j))
        return _NU_CACHE[:order]


def wallis_nu(order: int) -> CoeffSeries:
    """Exact ``nu_1 .. nu_order`` of ``ln(2 W_n / pi) ~ sum nu_j / n^j``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return CoeffSeries(Family.NU, order, tuple(_nu_values(order)))


def wallis_nu_raw(order: int) -> CoeffSeries:
    """Same coefficients from the unreduced Bernoulli-polynomial definition.

    ``nu_j = (-1)^(j+1) (2 B_{j+1} - B_{j+1}(1/2) - B_{j+1}(3/2)) / (j (j+1))``.
    Kept as an independent route for consistency checks.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    values = []
    for j in range(1, order + 1):
        poly = bernoulli_poly(j + 1)
        num = (2 * bernoulli_number(j + 1)
               - poly.evaluate(Fraction(1, 2))
               - poly.evaluate(Fraction(3, 2)))
        values.append(Fraction((-1) ** (j + 1)) * num / (j * (j + 1)))
    return CoeffSeries(Family.NU, order, tuple(values))


def exp_compose(a: list[Fraction] | tuple[Fraction, ...], order: int) -> list[Fraction]:
    """Coefficients ``b_1 .. b_order`` of ``exp(sum a_k x^-k)``.

    Uses ``b_0 = 1`` and ``b_n = (1/n) sum_{k=1}^{n} k a_k b_{n-k}``.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if len(a) < order:
        raise ValueError("need at least `order` input coefficients")
    b = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += k * Fraction(a[k - 1]) * b[n - k]
        b.append(acc / n)
    return b[1:]


def wallis_mu(order: int) -> CoeffSeries:
    """Exact ``mu_1 .. mu_order`` of ``2 W_n / pi ~ 1 + sum mu_j / n^j``."""
    if order < 1:
        raise ValueError("order must be >= 1")
    nu = _nu_values(order)
    with _SERIES_LOCK:
        for n in range(len(_MU_CACHE), order + 1):
            acc = Fraction(0)
            for k in range(1, n + 1):
                acc += k * nu[k - 1] * _MU_CACHE[n - k]
            _MU_CACHE.append(acc / n)
        return CoeffSeries(Family.MU, order, tuple(_MU_CACHE[1:order + 1]))


def _alpha_beta_from_mu(mu: list[Fraction], levels: int) -> list[tuple[Fraction, Fraction]]:
    """Solve the shifted-series matching equations level by level.

    Matching the ``1/n^(2l-1)`` and ``1/n^(2l)`` coefficients of
    ``sum alpha_l / (n + beta_l)^(2l-1)`` against the mu-series gives one
    linear solve per level; it divides by ``alpha_l``, so a vanishing
    ``alpha_l`` means the family degenerates at that level.
    """
    if len(mu) < 2 * levels:
        raise ValueError("need mu coefficients up to order 2*levels")
    pairs: list[tuple[Fraction, Fraction]] = []
    for level in range(1, levels + 1):
        alpha = mu[2 * level - 2]
        for k in range(1, level):
            ak, bk = pairs[k - 1]
            alpha -= ak * bk ** (2 * level - 2 * k) * binomial(2 * level - 2, 2 * level - 2 * k)
        if alpha == 0:
            raise ZeroDivisionError(
                f"alpha_{level} = 0: the shifted expansion degenerates at level {level}"
            )
        acc = mu[2 * level - 1]
        for k in range(1, level):
            ak, bk = pairs[k - 1]
            acc += ak * bk ** (2 * level - 2 * k + 1) * binomial(2 * level - 1, 2 * level - 2 * k + 1)
        beta = -acc / ((2 * level - 1) * alpha)
        pairs.append((alpha, beta))
    return pairs


def alpha_beta(levels: int) -> CoeffSeries:
    """Exact ``(alpha_l, beta_l)`` pairs of the shifted odd-power series."""
    if levels < 1:
        raise ValueError("levels must be >= 1")
    mu = list(wallis_mu(2 * levels).values)
    return CoeffSeries(Family.ALPHA_BETA, levels, tuple(_alpha_beta_from_mu(mu, levels)))


def omega(levels: int) -> CoeffSeries:
    """Exact ``omega_l`` via matching of the odd-index nu coefficients."""
    if levels < 1:
        raise ValueError("levels must be >= 1")
    nu = _nu_values(max(1, 2 * levels - 1))
    out: list[Fraction] = []
    for level in range(1, levels + 1):
        if level == 1:
            out.append(Fraction(-1, 4))
            continue
        val = nu[2 * level - 2]
        for k in range(1, level):
            val -= out[k - 1] * Fraction(1, 2 ** (2 * level - 2 * k)) \
                * binomial(2 * level - 2, 2 * level - 2 * k)
        out.append(val)
    return CoeffSeries(Family.OMEGA, levels, tuple(out))


def omega_alt(levels: int) -> CoeffSeries:
    """Same ``omega_l`` via the even-index nu matching; must agree with :func:`omega`."""
    if levels < 1:
        raise ValueError("levels must be >= 1")
    nu = _nu_values(2 * levels)
    out: list[Fraction] = []
    for level in range(1, levels + 1):
        if level == 1:
            out.append(Fraction(-1, 4))
            continue
        acc = nu[2 * level - 1]
        for k in range(1, level):
            acc += out[k - 1] * Fraction(1, 2 ** (2 * level - 2 * k + 1)) \
                * binomial(2 * level - 1, 2 * level - 2 * k + 1)
        out.append(-Fraction(2, 2 * level - 1) * acc)
    return CoeffSeries(Family.OMEGA, levels, tuple(out))
