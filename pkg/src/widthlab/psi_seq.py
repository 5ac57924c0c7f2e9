"""Coefficient sequences psi(k) and the head/tail sums built from them.

Every sequence is strictly positive and square-summable, and knows how to
bound its own remainder ``sum_{k>=K} psi(k)**p``.  All sums are carried in
log scale so that exp-polynomial families with ``alpha * k**r`` far beyond
the double range stay finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

DEFAULT_TOL = 1e-12
_MAX_TERMS = 1 << 22


class PsiSequence:
    """Base class; subclasses implement ``log_psi`` and ``log_remainder``."""

    family: str = ""

    def log_psi(self, k):
        """log psi(k), vectorised over integer arrays (k >= 1)."""
        raise NotImplementedError

    def log_remainder(self, K: int, p: float) -> float:
        """log of a certified upper bound on sum_{k>=K} psi(k)**p."""
        raise NotImplementedError

    def pointwise_summable(self) -> bool:
        return True

    def to_json(self) -> dict[str, Any]:
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Power(PsiSequence):
    """psi(k) = k**(-r); square-summable for r > 1/2."""

    r: float
    family: str = field(default="power", init=False, repr=False)

    def __post_init__(self):
        if not (math.isfinite(self.r) and self.r > 0.5):
            raise ValueError(f"power family needs r > 1/2 for square-summability, got r={self.r}")

    def log_psi(self, k):
        return -self.r * np.log(np.asarray(k, dtype=float))

    def log_remainder(self, K, p):
        s = p * self.r
        if s <= 1.0:
            return math.inf
        lk = math.log(K)
        # k**-s decreasing: f(K) + integral from K
        return float(np.logaddexp(-s * lk, (1.0 - s) * lk - math.log(s - 1.0)))

    def pointwise_summable(self):
        return self.r > 1.0

    def to_json(self):
        return {"family": "power", "r": self.r}

    def label(self):
        return f"power(r={self.r:g})"


@dataclass(frozen=True)
class ExpPoly(PsiSequence):
    """psi(k) = exp(-alpha * k**r)."""

    alpha: float
    r: float
    family: str = field(default="exp_poly", init=False, repr=False)

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise ValueError(f"exp_poly family needs alpha > 0, got alpha={self.alpha}")
        if not (math.isfinite(self.r) and self.r > 0):
            raise ValueError(f"exp_poly family needs r > 0, got r={self.r}")

    def log_psi(self, k):
        return -self.alpha * np.power(np.asarray(k, dtype=float), self.r)

    def log_remainder(self, K, p):
        b = p * self.alpha
        x = b * K**self.r
        if self.r >= 1.0:
            # convexity of t**r: terms are dominated by a geometric series
            # with ratio exp(-y), and 1/(1 - exp(-y)) <= 1 + 1/y
            y = b * self.r * K ** (self.r - 1.0)
            return -x + math.log1p(1.0 / y)
        # f(K) + integral_K^inf exp(-b t**r) dt, the integral written as an
        # upper incomplete gamma Gamma(a, x) with a = 1/r > 1
        a = 1.0 / self.r
        if x <= a - 1.0:
            return math.inf
        log_gamma_tail = (a - 1.0) * math.log(x) - x - math.log1p(-(a - 1.0) / x)
        log_integral = -math.log(self.r) - a * math.log(b) + log_gamma_tail
        return float(np.logaddexp(-x, log_integral))

    def to_json(self):
        return {"family": "exp_poly", "alpha": self.alpha, "r": self.r}

    def label(self):
        return f"exp_poly(alpha={self.alpha:g},r={self.r:g})"


@dataclass(frozen=True)
class Geometric(PsiSequence):
    """psi(k) = q**k with 0 < q < 1."""

    q: float
    family: str = field(default="geometric", init=False, repr=False)

    def __post_init__(self):
        if not (0.0 < self.q < 1.0):
            raise ValueError(f"geometric family needs 0 < q < 1, got q={self.q}")

    def log_psi(self, k):
        return np.asarray(k, dtype=float) * math.log(self.q)

    def log_remainder(self, K, p):
        return p * K * math.log(self.q) - math.log1p(-self.q**p)

    def to_json(self):
        return {"family": "geometric", "q": self.q}

    def label(self):
        return f"geometric(q={self.q:g})"


@dataclass(frozen=True)
class TableWithTail(PsiSequence):
    """Explicit values psi(1..m), continued geometrically with ratio ``tail_q``."""

    values: tuple[float, ...]
    tail_q: float
    family: str = field(default="table", init=False, repr=False)

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("table family needs at least one value")
        if not all(math.isfinite(v) and v > 0 for v in vals):
            raise ValueError("table values must be finite and strictly positive")
        if not (0.0 < self.tail_q < 1.0):
            raise ValueError(f"table tail ratio must lie in (0, 1), got tail_q={self.tail_q}")

    def log_psi(self, k):
        k = np.asarray(k)
        m = len(self.values)
        logs = np.log(np.asarray(self.values))
        inside = np.minimum(k, m) - 1
        out = logs[inside] + np.maximum(k - m, 0) * math.log(self.tail_q)
        return out.astype(float)

    def log_remainder(self, K, p):
        m = len(self.values)
        lq = math.log(self.tail_q)
        tail_start = max(K, m + 1)
        log_tail = p * (math.log(self.values[-1]) + (tail_start - m) * lq) - math.log1p(-self.tail_q**p)
        if K > m:
            return log_tail
        head = p * np.log(np.asarray(self.values[K - 1:]))
        return float(np.logaddexp(_logsumexp(head), log_tail))

    def to_json(self):
        return {"family": "table", "values": list(self.values), "tail_q": self.tail_q}

    def label(self):
        return f"table(m={len(self.values)},tail_q={self.tail_q:g})"


def _logsumexp(x) -> float:
    x = np.asarray(x, dtype=float)
    if x.size == 0:
        return -math.inf
    top = float(np.max(x))
    if top == -math.inf:
        return -math.inf
    return top + math.log(math.fsum(np.exp(x - top)))


def psi_from_json(obj: dict[str, Any]) -> PsiSequence:
    """Build a sequence from its JSON form (see README for the schema)."""
    if not isinstance(obj, dict) or "family" not in obj:
        raise ValueError("psi spec must be an object with a 'family' key")
    fam = obj["family"]
    try:
        if fam == "power":
            return Power(float(obj["r"]))
        if fam == "exp_poly":
            return ExpPoly(float(obj["alpha"]), float(obj["r"]))
        if fam == "geometric":
            return Geometric(float(obj["q"]))
        if fam == "table":
            return TableWithTail(tuple(obj["values"]), float(obj["tail_q"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed psi spec {obj!r}: {exc}") from exc
    raise ValueError(f"unknown psi family {fam!r}")


@dataclass(frozen=True)
class HeadSum:
    """sum_{k<n} 1/psi(k)**2 as a log plus the linear value (inf on overflow)."""

    log_value: float
    value: float


@dataclass(frozen=True)
class ConditionGauge:
    n: int
    head_term: float
    tail_term: float
    gauge: float
    log_head_term: float
    log_tail_term: float


def _check_index(k):
    if np.any(np.asarray(k) < 1):
        raise ValueError("psi is indexed from k = 1")


def eval_psi(psi: PsiSequence, k: int) -> float:
    _check_index(k)
    return float(np.exp(psi.log_psi(k)))


def log_psi(psi: PsiSequence, k: int) -> float:
    _check_index(k)
    return float(psi.log_psi(k))


def log_tail_power_sum(psi: PsiSequence, n: int, p: float = 2.0, tol: float = DEFAULT_TOL) -> float:
    """log sum_{k>=n} psi(k)**p with relative error at most ``tol``.

    Terms are added in chunks until the family's remainder certificate drops
    below ``tol`` times the partial sum.  Power families switch to an
    Euler-Maclaurin tail after ``max(10n, 10**4)`` terms.
    """
    _check_index(n)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if psi.log_remainder(n, p) == math.inf and not isinstance(psi, ExpPoly):
        raise ValueError(f"sum of psi**{p:g} diverges for {psi.label()}")
    power_cap = max(10 * n, 10**4) if isinstance(psi, Power) else None
    if isinstance(psi, TableWithTail):
        first = max(64, len(psi.values) - n + 1)
    else:
        first = 64
    ref = None
    scaled: list[float] = []
    K, size = n, first
    log_tol = math.log(tol)
    while True:
        stop = K + size if power_cap is None else min(K + size, power_cap)
        lt = p * psi.log_psi(np.arange(K, stop))
        if ref is None:
            ref = float(np.max(lt))
        scaled.append(math.fsum(np.exp(lt - ref)))
        K = stop
        size *= 2
        partial = math.fsum(scaled)
        if psi.log_remainder(K, p) - ref <= log_tol + math.log(partial):
            break
        if power_cap is not None and K >= power_cap:
            em, em_err = _euler_maclaurin_power_tail(p * psi.r, K, ref)
            partial = math.fsum(scaled + [em])
            if em_err > tol * partial:
                raise ArithmeticError(f"tail of {psi.label()} not certified within tol={tol:g}")
            break
        if K - n > _MAX_TERMS:
            raise ArithmeticError(f"tail of {psi.label()} not certified after {_MAX_TERMS} terms")
    return ref + math.log(partial)


def _euler_maclaurin_power_tail(s: float, M: int, ref: float) -> tuple[float, float]:
    """sum_{k>=M} k**-s scaled by exp(-ref), plus a bound on the truncation error."""
    lm = math.log(M)
    fM = math.exp(-s * lm - ref)
    integral = math.exp((1.0 - s) * lm - math.log(s - 1.0) - ref)
    b2 = s * fM / (12.0 * M)
    b4 = -s * (s + 1) * (s + 2) * fM / (720.0 * M**3)
    err = s * (s + 1) * (s + 2) * (s + 3) * (s + 4) * fM / (30240.0 * M**5)
    return integral + 0.5 * fM + b2 + b4, err


def log_tail_sq_sum(psi: PsiSequence, n: int, tol: float = DEFAULT_TOL) -> float:
    return log_tail_power_sum(psi, n, 2.0, tol)


def tail_sq_sum(psi: PsiSequence, n: int, tol: float = DEFAULT_TOL) -> float:
    """sum_{k>=n} psi(k)**2 (underflows to 0.0 only when the log form is below ~-745)."""
    return math.exp(log_tail_sq_sum(psi, n, tol))


def head_inv_sq_sum(psi: PsiSequence, n: int) -> HeadSum:
    """sum_{k=1}^{n-1} 1/psi(k)**2.

    The log value comes from a max-shifted fsum.  The linear value is plain
    ascending accumulation, so ``head(n+1).value == head(n).value + 1/psi(n)**2``
    holds bit for bit.
    """
    _check_index(n)
    if n == 1:
        return HeadSum(-math.inf, 0.0)
    lt = -2.0 * psi.log_psi(np.arange(1, n))
    log_value = _logsumexp(lt)
    if np.max(lt) > 709.0:
        return HeadSum(log_value, math.inf)
    value = 0.0
    for term in np.exp(lt):
        value += float(term)
    return HeadSum(log_value, value)


def d0_ratio(psi: PsiSequence, k: int) -> float:
    """psi(k+1)/psi(k)."""
    _check_index(k)
    return math.exp(float(psi.log_psi(k + 1) - psi.log_psi(k)))


def satisfies_d0(psi: PsiSequence) -> bool:
    """Whether psi(k+1)/psi(k) -> 0, decided from the family parameters."""
    return isinstance(psi, ExpPoly) and psi.r > 1.0


def condition_gauge(psi: PsiSequence, n: int, tol: float = DEFAULT_TOL) -> ConditionGauge:
    lp = log_psi(psi, n)
    head = head_inv_sq_sum(psi, n)
    log_head = lp + 0.5 * head.log_value
    log_tail = 0.5 * log_tail_sq_sum(psi, n + 1, tol) - lp
    h, t = math.exp(log_head), math.exp(log_tail)
    return ConditionGauge(n, h, t, max(h, t), log_head, log_tail)
