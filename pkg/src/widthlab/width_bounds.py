"""Two-sided width estimates for convolution classes with an L2-ball of derivatives.

The four widths (Bernstein, Kolmogorov, linear, projection) of orders 2n-1
and 2n share the bounds computed here; no width is ever computed directly.
Quantities that overflow doubles for exp-polynomial sequences are formed as
``exp(log difference)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .psi_seq import (
    DEFAULT_TOL, ConditionGauge, ExpPoly, Geometric, Power, PsiSequence,
    condition_gauge, head_inv_sq_sum, log_psi, log_tail_sq_sum,
)
from .trig_core import BetaSequence

LOG_SQRT_PI = 0.5 * math.log(math.pi)
INV_SQRT_PI = 1.0 / math.sqrt(math.pi)


class PreconditionError(ValueError):
    """A parameter point lies outside the hypotheses of a specialised bound."""


# ---------------------------------------------------------------------------
# general bounds
# ---------------------------------------------------------------------------

def log_upper_bound(psi: PsiSequence, n: int, tol: float = DEFAULT_TOL) -> float:
    return 0.5 * log_tail_sq_sum(psi, n, tol) - LOG_SQRT_PI


def exact_fourier_deviation(psi: PsiSequence, n: int, tol: float = DEFAULT_TOL) -> float:
    """sup over the class of ||f - S_{n-1} f||_C, i.e. (sum_{k>=n} psi^2 / pi)**(1/2)."""
    return math.exp(log_upper_bound(psi, n, tol))


def upper_bound(psi: PsiSequence, n: int, tol: float = DEFAULT_TOL) -> float:
    # S_{n-1} is a rank 2n-1 linear projector, so its deviation caps pi_{2n-1}
    return exact_fourier_deviation(psi, n, tol)


def _log_head_excess(psi: PsiSequence, n: int) -> float:
    """log(2 psi(n)**2 sum_{k<n} 1/psi(k)**2)."""
    return math.log(2.0) + 2.0 * log_psi(psi, n) + head_inv_sq_sum(psi, n).log_value


def log_lower_bound(psi: PsiSequence, n: int) -> float:
    # (1/psi(n)**2 + 2 head)**(-1/2) = psi(n) (1 + 2 psi(n)**2 head)**(-1/2)
    return log_psi(psi, n) - LOG_SQRT_PI - 0.5 * float(np.logaddexp(0.0, _log_head_excess(psi, n)))


def lower_bound(psi: PsiSequence, n: int) -> float:
    return math.exp(log_lower_bound(psi, n))


def leading_term(psi: PsiSequence, n: int) -> float:
    return math.exp(log_psi(psi, n) - LOG_SQRT_PI)


@dataclass(frozen=True)
class WidthBoundsReport:
    n: int
    N_even: int
    N_odd: int
    lower: float
    leading: float
    upper: float
    gauge: ConditionGauge
    gamma_low: float      # lower endpoint for the O(1) bracket of the asymptotic form
    gamma_high: float     # upper endpoint
    lower_deficit: float  # 1 - lower/leading, formed without cancellation
    upper_excess: float   # upper/leading - 1
    log_lower: float
    log_leading: float
    log_upper: float
    beta: Optional[BetaSequence] = None

    def row(self) -> dict[str, float]:
        return {
            "n": self.n, "N_even": self.N_even, "N_odd": self.N_odd,
            "lower": self.lower, "leading": self.leading, "upper": self.upper,
            "gauge_head": self.gauge.head_term, "gauge_tail": self.gauge.tail_term,
        }


def bounds_report(psi: PsiSequence, beta: Optional[BetaSequence], n: int,
                  tol: float = DEFAULT_TOL) -> WidthBoundsReport:
    """Every bound quantity at one n; ``beta`` is recorded only."""
    g = condition_gauge(psi, n, tol)
    log_lo, log_up = log_lower_bound(psi, n), log_upper_bound(psi, n, tol)
    log_lead = log_psi(psi, n) - LOG_SQRT_PI
    head_x = _log_head_excess(psi, n)
    deficit = -math.expm1(-0.5 * float(np.logaddexp(0.0, head_x)))
    excess = math.expm1(0.5 * math.log1p(math.exp(2.0 * g.log_tail_term)))
    return WidthBoundsReport(
        n=n, N_even=2 * n, N_odd=2 * n - 1,
        lower=math.exp(log_lo), leading=math.exp(log_lead), upper=math.exp(log_up),
        gauge=g,
        gamma_low=-math.sqrt(2.0 / math.pi) * g.head_term,
        gamma_high=INV_SQRT_PI * g.tail_term,
        lower_deficit=deficit, upper_excess=excess,
        log_lower=log_lo, log_leading=log_lead, log_upper=log_up,
        beta=beta,
    )


# ---------------------------------------------------------------------------
# Weyl-Nagy kernels, psi(k) = k**-r
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WeylNagyBounds:
    r: float
    n: int
    lower: float
    upper: float
    lower_ratio: float  # lower / n**-r
    upper_ratio: float
    r_le_one: bool      # outside the r > 1 setting the derivation opens with


def _require_weyl_nagy(r: float, n: int):
    if n < 1:
        raise PreconditionError(f"n must be >= 1 (r={r}, n={n})")
    if r < (n + 1) / 2.0:
        raise PreconditionError(f"Weyl-Nagy bounds need r >= (n+1)/2; got r={r}, n={n}")


def weyl_nagy_report(r: float, n: int) -> WeylNagyBounds:
    _require_weyl_nagy(r, n)
    head = 4.0 * math.exp(2.0 * r * math.log1p(-1.0 / n)) if n > 1 else 0.0
    tail = (2.0 + 1.0 / n) * math.exp(-2.0 * r * math.log1p(1.0 / n))
    lo_ratio = INV_SQRT_PI / math.sqrt(1.0 + head)
    up_ratio = INV_SQRT_PI * math.sqrt(1.0 + tail)
    scale = -r * math.log(n)
    return WeylNagyBounds(r, n, lo_ratio * math.exp(scale), up_ratio * math.exp(scale),
                          lo_ratio, up_ratio, r <= 1.0)


def weyl_nagy_asymptotic(r: float, n: int) -> tuple[float, float]:
    """(leading n**-r/sqrt(pi), remainder scale n**-r (1 + 1/n)**-r)."""
    lead = math.exp(-r * math.log(n))
    return INV_SQRT_PI * lead, lead * math.exp(-r * math.log1p(1.0 / n))


def power_tail_bound(r: float, n: int) -> float:
    """Bound on sum_{k>n} k**(-2r) valid for 2r >= n + 1."""
    if 2.0 * r < n + 1:
        raise PreconditionError(f"power tail bound needs 2r >= n+1; got r={r}, n={n}")
    return math.exp(-2.0 * r * math.log(n) + math.log(2.0 + 1.0 / n) - 2.0 * r * math.log1p(1.0 / n))


def power_head_bound(r: float, n: int) -> float:
    """Bound on n**(2r) + 2 sum_{k<n} k**(2r) valid for r >= (n+1)/2."""
    _require_weyl_nagy(r, n)
    if n < 2:
        raise PreconditionError("power head bound needs n >= 2")
    return math.exp(2.0 * r * math.log(n)) * (1.0 + 4.0 * math.exp(2.0 * r * math.log1p(-1.0 / n)))


# ---------------------------------------------------------------------------
# generalised Poisson kernels, psi(k) = exp(-alpha k**r)
# ---------------------------------------------------------------------------

def _require_poisson(alpha: float, r: float, n: int):
    if not alpha > 0:
        raise PreconditionError(f"need alpha > 0; got alpha={alpha}")
    if not r > 1:
        raise PreconditionError(f"need r > 1; got r={r}")
    if not (n - 1) ** r > 1.0 / alpha:
        raise PreconditionError(f"need (n-1)**r > 1/alpha; got alpha={alpha}, r={r}, n={n}")


def _log_poisson_const(alpha: float, r: float) -> float:
    """log max{e**(4 alpha), e**2 / alpha**(1 + 1/r)}."""
    return max(4.0 * alpha, 2.0 - (1.0 + 1.0 / r) * math.log(alpha))


def poisson_gamma(alpha: float, r: float, n: int) -> float:
    _require_poisson(alpha, r, n)
    m = n - 1.0
    return (1.0 + 1.0 / (alpha * r * m ** (r - 1.0))
            + math.exp(-2.0 * alpha * m**r + _log_poisson_const(alpha, r)))


@dataclass(frozen=True)
class PoissonBounds:
    alpha: float
    r: float
    n: int
    lower: float
    upper: float
    gamma: float
    lower_ratio: float  # lower / exp(-alpha n**r)
    upper_ratio: float


def poisson_report(alpha: float, r: float, n: int) -> PoissonBounds:
    gamma = poisson_gamma(alpha, r, n)
    y_low = 2.0 * alpha * r * (n - 1.0) ** (r - 1.0)
    y_up = 2.0 * alpha * r * float(n) ** (r - 1.0)
    lo_ratio = INV_SQRT_PI / math.sqrt(1.0 + 2.0 * gamma * math.exp(-y_low))
    up_ratio = INV_SQRT_PI * math.sqrt(1.0 + math.exp(-y_up) * (1.0 + 1.0 / y_up))
    scale = -alpha * float(n) ** r
    return PoissonBounds(alpha, r, n, lo_ratio * math.exp(scale), up_ratio * math.exp(scale),
                         gamma, lo_ratio, up_ratio)


def poisson_asymptotic(alpha: float, r: float, n: int) -> tuple[float, float]:
    """(leading exp(-alpha n**r)/sqrt(pi), remainder scale exp(-alpha n**r) gamma exp(-alpha r (n-1)**(r-1)))."""
    gamma = poisson_gamma(alpha, r, n)
    lead = math.exp(-alpha * float(n) ** r)
    return INV_SQRT_PI * lead, lead * gamma * math.exp(-alpha * r * (n - 1.0) ** (r - 1.0))


def log_exp_series_tail_bound(alpha: float, r: float, n: int) -> float:
    """log of the bound on sum_{k>n} exp(-alpha k**r), r > 1."""
    if not (alpha > 0 and r > 1 and n >= 1):
        raise PreconditionError(f"exp series tail bound needs alpha > 0, r > 1, n >= 1; got {alpha}, {r}, {n}")
    y = alpha * r * float(n) ** (r - 1.0)
    return -alpha * float(n) ** r + math.log1p(1.0 / y) - y


def exp_series_tail_bound(alpha: float, r: float, n: int) -> float:
    return math.exp(log_exp_series_tail_bound(alpha, r, n))


def exp_integral_bound(alpha: float, r: float, n: int) -> float:
    """Bound on integral_1^{n-1} exp(2 alpha t**r) dt under (n-1)**r > 1/alpha."""
    _require_poisson(alpha, r, n)
    m = n - 1.0
    return (math.exp(2.0 * alpha * m**r) / (alpha * r * m ** (r - 1.0))
            + math.exp(_log_poisson_const(alpha, r)))


def poisson_head_bound(alpha: float, r: float, n: int) -> float:
    """Bound on psi(n)**2 sum_{k<n} 1/psi(k)**2: gamma exp(-2 alpha r (n-1)**(r-1))."""
    gamma = poisson_gamma(alpha, r, n)
    return gamma * math.exp(-2.0 * alpha * r * (n - 1.0) ** (r - 1.0))


# ---------------------------------------------------------------------------
# family dispatch
# ---------------------------------------------------------------------------

def analytic_tail_bound(psi: PsiSequence, n: int) -> float:
    """Certified upper bound on sum_{k>=n+1} psi(k)**2."""
    if isinstance(psi, Power):
        return power_tail_bound(psi.r, n)
    if isinstance(psi, ExpPoly):
        return exp_series_tail_bound(2.0 * psi.alpha, psi.r, n)
    if isinstance(psi, Geometric):
        return psi.q ** (2 * (n + 1)) / (1.0 - psi.q**2)
    raise PreconditionError(f"no analytic tail bound for {psi.label()}")


def analytic_head_bound(psi: PsiSequence, n: int) -> float:
    """Power: bound on n**(2r) + 2 sum_{k<n} k**(2r).  ExpPoly: bound on psi(n)**2 sum_{k<n} psi(k)**-2."""
    if n < 2:
        raise PreconditionError("head bounds need n >= 2")
    if isinstance(psi, Power):
        return power_head_bound(psi.r, n)
    if isinstance(psi, ExpPoly):
        return poisson_head_bound(psi.alpha, psi.r, n)
    raise PreconditionError(f"no analytic head bound for {psi.label()}")
