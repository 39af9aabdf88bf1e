"""Truncated asymptotic expansions, their measured errors, and sharp bounds.

The evaluators return plain floats/complex; errors are always measured
against the brute-force product oracle, never against the gamma closed
form (that equivalence is checked separately in :mod:`.products` tests).

For the Wallis-sequence families the truncation error at large ``n``
drops far below double precision (the order-5 odd family is already at
1e-24 by ``n = 100``), so :func:`convergence_order` measures those
errors in exact rational arithmetic: the coefficients are exact, the
oracle ``prod 4k^2/(4k^2-1)`` is exact, and ``pi`` and ``exp`` are
carried as 50-digit rational surrogates.  The two families with complex
parameters are measured in double precision, where their errors sit far
above the float noise for the orders of interest; estimates that would
be dominated by noise are flagged as NaN.
"""

from __future__ import annotations

import cmath
import math
import sys
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .coeffs import a_poly, alpha_beta, b_poly, eval_bipoly, omega, wallis_mu, wallis_nu
from .products import r_product, w_product, wallis_seq, wallis_seq_exact
from .special import PI_STR, PoleError, r_inf, w_inf

__all__ = [
    "ExpansionTag",
    "ExpansionFamily",
    "ErrorReport",
    "error_report",
    "eval_w_expansion",
    "eval_r_expansion",
    "eval_wallis_mu",
    "eval_wallis_nu_exp",
    "eval_wallis_alpha_beta",
    "eval_wallis_omega",
    "eval_elezovic",
    "ELEZOVIC_TERMS",
    "wallis_error_exact",
    "convergence_order",
    "BoundsReport",
    "check_bounds",
    "DENG_ALPHA",
    "deng_beta",
]

_PI_RATIONAL = Fraction(PI_STR)
_HALF = Fraction(1, 2)


class ExpansionTag(str, Enum):
    W_PQ = "w_pq"
    R_PQ = "r_pq"
    WALLIS_MU = "wallis_mu"
    WALLIS_NU_EXP = "wallis_nu_exp"
    WALLIS_ALPHA_BETA = "wallis_alpha_beta"
    WALLIS_OMEGA = "wallis_omega"
    ELEZOVIC = "elezovic"


_NEEDS_PARAMS = {ExpansionTag.W_PQ, ExpansionTag.R_PQ}


@dataclass(frozen=True)
class ExpansionFamily:
    """A truncated expansion: which family, how many terms, which (p, q)."""

    tag: ExpansionTag
    order: int
    params: tuple[complex, complex] | None = None

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if (self.tag in _NEEDS_PARAMS) != (self.params is not None):
            raise ValueError("params are required exactly for the (p, q) families")


@dataclass(frozen=True)
class ErrorReport:
    """Approximation vs oracle at a single ``n``."""

    n: int
    approx: complex
    exact: complex
    abs_err: float
    rel_err: float | None
    note: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "approx": {"re": self.approx.real, "im": self.approx.imag},
            "exact": {"re": self.exact.real, "im": self.exact.imag},
            "abs_err": self.abs_err,
            "rel_err": self.rel_err,
            "note": self.note,
        }


def error_report(n: int, approx: complex, exact: complex, note: str | None = None) -> ErrorReport:
    approx = complex(approx)
    exact = complex(exact)
    abs_err = abs(approx - exact)
    rel_err = abs_err / abs(exact) if exact != 0 else None
    return ErrorReport(n, approx, exact, abs_err, rel_err, note)


# ---------------------------------------------------------------------------
# Evaluators
# ---------------------------------------------------------------------------

def eval_w_expansion(n: int, p: complex, q: complex, order: int) -> complex:
    """``W_inf(p,q) * exp(sum_{j<=order} a_j(p,q) / (n+1)^j)``."""
    if n < 1 or order < 1:
        raise ValueError("n and order must be >= 1")
    limit = w_inf(p, q)
    if limit == 0:
        raise PoleError("W_inf(p, q) vanishes through a gamma pole; expansion undefined")
    x = n + 1.0
    s = 0j
    for j in range(1, order + 1):
        s += eval_bipoly(a_poly(j), p, q) / x**j
    return limit * cmath.exp(s)


def eval_r_expansion(n: int, p: complex, q: complex, order: int) -> complex:
    """``R_inf(p,q) * exp(sum_{j<=order} b_j(p,q) / (n+1/2)^j)``."""
    if n < 1 or order < 1:
        raise ValueError("n and order must be >= 1")
    limit = r_inf(p, q)
    if limit == 0:
        raise PoleError("R_inf(p, q) vanishes through a gamma pole; expansion undefined")
    x = n + 0.5
    s = 0j
    for j in range(1, order + 1):
        s += eval_bipoly(b_poly(j), p, q) / x**j
    return limit * cmath.exp(s)


def eval_wallis_mu(n: int, order: int) -> float:
    """``(pi/2) (1 + sum_{j<=order} mu_j / n^j)``."""
    if n < 1 or order < 1:
        raise ValueError("n and order must be >= 1")
    mu = wallis_mu(order).values
    s = 1.0 + math.fsum(float(mu[j - 1]) / n**j for j in range(1, order + 1))
    return (math.pi / 2) * s


def eval_wallis_nu_exp(n: int, order: int) -> float:
    """``(pi/2) exp(sum_{j<=order} nu_j / n^j)``."""
    if n < 1 or order < 1:
        raise ValueError("n and order must be >= 1")
    nu = wallis_nu(order).values
    s = math.fsum(float(nu[j - 1]) / n**j for j in range(1, order + 1))
    return (math.pi / 2) * math.exp(s)


def eval_wallis_alpha_beta(n: int, levels: int) -> float:
    """``(pi/2) (1 + sum_{l<=levels} alpha_l / (n + beta_l)^(2l-1))``."""
    if n < 1 or levels < 1:
        raise ValueError("n and levels must be >= 1")
    pairs = alpha_beta(levels).values
    s = 1.0 + math.fsum(
        float(a) / (n + float(b)) ** (2 * l - 1) for l, (a, b) in enumerate(pairs, start=1)
    )
    return (math.pi / 2) * s


def eval_wallis_omega(n: int, levels: int) -> float:
    """``(pi/2) exp(sum_{l<=levels} omega_l / (n + 1/2)^(2l-1))``."""
    if n < 1 or levels < 1:
        raise ValueError("n and levels must be >= 1")
    om = omega(levels).values
    s = math.fsum(float(w) / (n + 0.5) ** (2 * l - 1) for l, w in enumerate(om, start=1))
    return (math.pi / 2) * math.exp(s)


# Shifted expansion of Elezovic, Lin and Vuksic: coefficient and power of
# 1/(n + 5/8) for each term beyond the constant.
ELEZOVIC_TERMS: tuple[tuple[Fraction, int], ...] = (
    (Fraction(-1, 4), 1),
    (Fraction(3, 256), 3),
    (Fraction(3, 2048), 4),
    (Fraction(-51, 16384), 5),
    (Fraction(-75, 65536), 6),
    (Fraction(2253, 1048576), 7),
)


def eval_elezovic(n: int, terms: int) -> float:
    """Truncation of the published ``(n + 5/8)``-shifted series, 1..6 terms."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 1 <= terms <= len(ELEZOVIC_TERMS):
        raise ValueError(f"terms must be in 1..{len(ELEZOVIC_TERMS)}")
    s = 1.0 + math.fsum(
        float(c) / (n + 0.625) ** e for c, e in ELEZOVIC_TERMS[:terms]
    )
    return (math.pi / 2) * s


# ---------------------------------------------------------------------------
# Exact error kernel for the Wallis-sequence families
# ---------------------------------------------------------------------------

def _exp_rational(x: Fraction, cutoff: Fraction = Fraction(1, 10**45)) -> Fraction:
    """Taylor ``exp(x)`` over rationals; requires ``|x| <= 1/2``."""
    if abs(x) > _HALF:
        raise ValueError("rational exp kernel needs |x| <= 1/2")
    term = Fraction(1)
    total = Fraction(1)
    k = 1
    while abs(term) > cutoff:
        term = term * x / k
        total += term
        k += 1
    return total


def _exact_wallis_approx(tag: ExpansionTag, order: int, n: int) -> Fraction:
    half_pi = _PI_RATIONAL / 2
    nf = Fraction(n)
    if tag is ExpansionTag.WALLIS_MU:
        mu = wallis_mu(order).values
        return half_pi * (1 + sum(mu[j - 1] / nf**j for j in range(1, order + 1)))
    if tag is ExpansionTag.WALLIS_NU_EXP:
        nu = wallis_nu(order).values
        return half_pi * _exp_rational(sum(nu[j - 1] / nf**j for j in range(1, order + 1)))
    if tag is ExpansionTag.WALLIS_ALPHA_BETA:
        pairs = alpha_beta(order).values
        return half_pi * (1 + sum(
            a / (nf + b) ** (2 * l - 1) for l, (a, b) in enumerate(pairs, start=1)
        ))
    if tag is ExpansionTag.WALLIS_OMEGA:
        om = omega(order).values
        return half_pi * _exp_rational(sum(
            w / (nf + _HALF) ** (2 * l - 1) for l, w in enumerate(om, start=1)
        ))
    if tag is ExpansionTag.ELEZOVIC:
        return half_pi * (1 + sum(
            c / (nf + Fraction(5, 8)) ** e for c, e in ELEZOVIC_TERMS[:order]
        ))
    raise ValueError(f"not a Wallis-sequence family: {tag}")


def wallis_error_exact(tag: ExpansionTag, order: int, n: int) -> Fraction:
    """Exact |truncation - oracle| for a Wallis-sequence family.

    The only approximation left is the 50-digit rational surrogate for
    pi, whose effect (~1e-50 relative) is far below any truncation error
    this package deals in.
    """
    return abs(wallis_seq_exact(n) - _exact_wallis_approx(tag, order, n))


# ---------------------------------------------------------------------------
# Empirical convergence order
# ---------------------------------------------------------------------------

def _family_value(family: ExpansionFamily, n: int) -> complex:
    tag = family.tag
    if tag is ExpansionTag.W_PQ:
        p, q = family.params
        return eval_w_expansion(n, p, q, family.order)
    if tag is ExpansionTag.R_PQ:
        p, q = family.params
        return eval_r_expansion(n, p, q, family.order)
    if tag is ExpansionTag.WALLIS_MU:
        return eval_wallis_mu(n, family.order)
    if tag is ExpansionTag.WALLIS_NU_EXP:
        return eval_wallis_nu_exp(n, family.order)
    if tag is ExpansionTag.WALLIS_ALPHA_BETA:
        return eval_wallis_alpha_beta(n, family.order)
    if tag is ExpansionTag.WALLIS_OMEGA:
        return eval_wallis_omega(n, family.order)
    if tag is ExpansionTag.ELEZOVIC:
        return eval_elezovic(n, family.order)
    raise ValueError(f"unknown family tag: {tag}")


def family_oracle(family: ExpansionFamily, n: int) -> complex:
    """Brute-force reference value for the family at ``n``."""
    tag = family.tag
    if tag is ExpansionTag.W_PQ:
        p, q = family.params
        return w_product(n, p, q).value
    if tag is ExpansionTag.R_PQ:
        p, q = family.params
        return r_product(n, p, q).value
    return wallis_seq(n)


def family_report(family: ExpansionFamily, n: int) -> ErrorReport:
    """ErrorReport of the truncated family against its brute-force oracle."""
    note = None
    if n < family.order:
        note = "asymptotic regime not reached (n < order)"
    return error_report(n, _family_value(family, n), family_oracle(family, n), note)


def _shift(family: ExpansionFamily) -> float:
    """Shift of the expansion variable ``n + shift`` for order estimation."""
    tag = family.tag
    if tag is ExpansionTag.W_PQ:
        return 1.0
    if tag in (ExpansionTag.R_PQ, ExpansionTag.WALLIS_OMEGA):
        return 0.5
    if tag is ExpansionTag.ELEZOVIC:
        return 0.625
    if tag is ExpansionTag.WALLIS_ALPHA_BETA:
        # the first omitted term carries its own shift
        try:
            return float(alpha_beta(family.order + 1).values[family.order][1])
        except ZeroDivisionError:
            return 0.5
    return 0.0


_EXACT_TAGS = {
    ExpansionTag.WALLIS_MU,
    ExpansionTag.WALLIS_NU_EXP,
    ExpansionTag.WALLIS_ALPHA_BETA,
    ExpansionTag.WALLIS_OMEGA,
    ExpansionTag.ELEZOVIC,
}


def convergence_order(family: ExpansionFamily, n_values: list[int]) -> list[float]:
    """Estimated decay exponents ``log(err(n)/err(n')) / log(x'/x)``.

    One estimate per consecutive pair of ``n_values`` (which must be
    strictly increasing), with ``x = n + shift`` in the family's own
    expansion variable.  Entries whose errors are degenerate (zero, or
    at the double-precision noise floor for the (p, q) families) are
    returned as NaN.
    """
    if len(n_values) < 2:
        raise ValueError("need at least two n values")
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ValueError("n values must be strictly increasing")
    shift = _shift(family)
    exact_mode = family.tag in _EXACT_TAGS

    errors: list[Fraction | float] = []
    for n in n_values:
        if exact_mode:
            errors.append(wallis_error_exact(family.tag, family.order, n))
        else:
            approx = _family_value(family, n)
            oracle = family_oracle(family, n)
            err = abs(approx - oracle)
            noise = 64 * sys.float_info.epsilon * abs(oracle)
            errors.append(err if err > noise else math.nan)

    estimates: list[float] = []
    for (n1, e1), (n2, e2) in zip(zip(n_values, errors), zip(n_values[1:], errors[1:])):
        if isinstance(e1, float) and (math.isnan(e1) or e1 == 0.0):
            estimates.append(math.nan)
            continue
        if isinstance(e2, float) and (math.isnan(e2) or e2 == 0.0):
            estimates.append(math.nan)
            continue
        if e1 == 0 or e2 == 0:
            estimates.append(math.nan)
            continue
        ratio = float(Fraction(e1) / Fraction(e2)) if exact_mode else e1 / e2
        estimates.append(math.log(ratio) / math.log((n2 + shift) / (n1 + shift)))
    return estimates


# ---------------------------------------------------------------------------
# Sharp two-sided bounds for the Wallis sequence
# ---------------------------------------------------------------------------

DENG_ALPHA = 2.5


def deng_beta() -> float:
    """``(32 - 9 pi) / (3 pi - 8)``; makes the upper bound exact at n = 1."""
    return (32 - 9 * math.pi) / (3 * math.pi - 8)


@dataclass(frozen=True)
class BoundsReport:
    """Outcome of checking ``(pi/2)(1 - 1/(4n+alpha)) < W_n <= (pi/2)(1 - 1/(4n+beta))``."""

    n_max: int
    violations: int
    first_violation: int | None
    tight_upper_n: int | None
    tight_upper_gap: float
    alpha: float
    beta: float

    def to_json_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "violations": self.violations,
            "first_violation": self.first_violation,
            "tight_upper_n": self.tight_upper_n,
            "tight_upper_gap": self.tight_upper_gap,
            "alpha": self.alpha,
            "beta": self.beta,
        }


def check_bounds(n_max: int, equality_tol: float = 1e-12) -> BoundsReport:
    """Verify the two-sided bound for every ``1 <= n <= n_max``.

    The running product is kept as a compensated log sum, so ``W_n`` is
    accurate to a few ulp throughout; the inequalities are tested with a
    slack of 8 ulp, far below the analytic margins for n >= 2.  Also
    locates the ``n`` where the upper bound is an equality (by design of
    beta, that is n = 1).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    alpha = DENG_ALPHA
    beta = deng_beta()
    half_pi = math.pi / 2
    log_sum = _running_log_sum()
    violations = 0
    first_violation: int | None = None
    tight_n: int | None = None
    tight_gap = math.inf
    for n in range(1, n_max + 1):
        w = log_sum(n)
        slack = 8 * sys.float_info.epsilon * max(1.0, w)
        lower = half_pi * (1 - 1 / (4 * n + alpha))
        upper = half_pi * (1 - 1 / (4 * n + beta))
        if w <= lower - slack or w > upper + slack:
            violations += 1
            if first_violation is None:
                first_violation = n
        gap = abs(w - upper)
        if gap <= equality_tol and gap < tight_gap:
            tight_n = n
            tight_gap = gap
    return BoundsReport(n_max, violations, first_violation, tight_n,
                        tight_gap if tight_n is not None else math.nan,
                        alpha, beta)


def _running_log_sum():
    from .products import _Neumaier

    acc = _Neumaier()
    state = {"n": 0}

    def advance(n: int) -> float:
        while state["n"] < n:
            state["n"] += 1
            k = state["n"]
            acc.add(math.log1p(1.0 / (4.0 * k * k - 1.0)))
        return math.exp(acc.total)

    return advance
