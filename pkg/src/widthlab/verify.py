"""Brute-force oracles checked against every analytic bound.

Each check returns a ``VerificationReport``.  Randomised checks draw from a
generator seeded by ``(seed, crc32(check_id))``, so reruns are identical and
checks can run in any order.
"""

from __future__ import annotations

import itertools
import math
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Optional, Sequence

import numpy as np

from . import width_bounds as wb
from .psi_seq import (
    DEFAULT_TOL, ExpPoly, Geometric, Power, PsiSequence, d0_ratio, head_inv_sq_sum,
    log_psi, log_tail_sq_sum, satisfies_d0,
)
from .trig_core import (
    BetaSequence, ConstantBeta, KernelSpec, PeriodicBeta, TrigPolynomial,
    kernel_truncation_degree, l2_norm, psi_derivative, sup_norm, sup_norm_batch,
)

EMBED_SAFETY = 1e-8
EMBED_SLACK = 1e-9
COEFF_SLACK = 1e-9


@dataclass
class VerificationReport:
    check_id: str
    inputs: dict[str, Any]
    analytic: float
    oracle: float
    margin: float
    tolerance: float
    passed: bool
    seed: Optional[int] = None
    expected_fail: bool = False
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "check_id": self.check_id, "inputs": self.inputs,
            "analytic": self.analytic, "oracle": self.oracle, "margin": self.margin,
            "tolerance": self.tolerance, "pass": self.passed, "seed": self.seed,
            "expected_fail": self.expected_fail, "details": self.details,
        }

    def summary_line(self) -> str:
        if self.expected_fail:
            status = "XFAIL" if not self.passed else "XPASS"
        else:
            status = "PASS" if self.passed else "FAIL"
        return (f"{status:5s} {self.check_id}  analytic={self.analytic:.10g} "
                f"oracle={self.oracle:.10g} margin={self.margin:.3e} tol={self.tolerance:.1e}")

    @property
    def counts_as_failure(self) -> bool:
        return not self.passed and not self.expected_fail


def rng_for(seed: int, check_id: str) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), zlib.crc32(check_id.encode())]))


def _spec_label(spec: KernelSpec) -> str:
    return f"{spec.psi.label()}/beta={spec.beta.label()}"


def _spec_inputs(spec: KernelSpec) -> dict[str, Any]:
    return {"psi": spec.psi.to_json(), "beta": spec.beta.to_json()}


# ---------------------------------------------------------------------------
# deviation of Fourier sums through the extremal convolution
# ---------------------------------------------------------------------------

def kernel_samples(spec: KernelSpec, n: int, K: int, t: np.ndarray,
                   log_scale: float = 0.0) -> np.ndarray:
    """exp(-log_scale) sum_{k=n}^{K} psi(k) cos(k t - beta_k pi/2), term by term."""
    k = np.arange(n, K + 1)
    amp = np.exp(spec.psi.log_psi(k) - log_scale)
    shift = 0.5 * math.pi * spec.beta(k)
    out = np.empty_like(t)
    step = max(1, (1 << 21) // len(k))
    for s in range(0, t.size, step):
        out[s:s + step] = np.cos(np.outer(t[s:s + step], k) - shift) @ amp
    return out


@dataclass
class DeviationOracle:
    analytic: float
    oracle: float
    rel_error: float
    certificate: float
    degree: int
    grid_size: int
    random_max: float


def _deviation_values(spec: KernelSpec, n: int, grid_size: Optional[int], x0: float,
                      samples: int, rng: Optional[np.random.Generator],
                      trunc_rel: float) -> DeviationOracle:
    psi = spec.psi
    if not psi.pointwise_summable():
        raise ValueError(f"{psi.label()} is not absolutely summable; the kernel has no pointwise values")
    log_tail = log_tail_sq_sum(psi, n)
    analytic = math.exp(0.5 * log_tail - wb.LOG_SQRT_PI)
    # the truncated kernel keeps all but trunc_rel of the L2 mass
    K = kernel_truncation_degree(psi, trunc_rel, p=2.0, log_relative_to=log_tail, start=n)
    N = grid_size if grid_size is not None else 64 * K
    if N < 64 * K:
        raise ValueError(f"grid_size {N} below 64 x truncation degree {K}")
    # work relative to psi(n) so extreme sequences stay in range
    log_scale = log_psi(psi, n)
    t = -math.pi + (2.0 * math.pi / N) * np.arange(N)
    w = 2.0 * math.pi / N
    ker = kernel_samples(spec, n, K, t, log_scale)
    norm = math.sqrt(w * math.fsum(ker * ker))

    def phi_star(s):
        return kernel_samples(spec, n, K, x0 - s, log_scale) / norm

    oracle = math.exp(log_scale + math.log(w * math.fsum(phi_star(x0 - t) * ker) / math.pi))
    # trapezoid is exact below the Nyquist degree; the rest is truncation
    cert = 0.5 * trunc_rel + 64.0 * np.finfo(float).eps * math.sqrt(N)
    rel = abs(oracle - analytic) / analytic

    random_max = 0.0
    if samples:
        D = min(K, n + 15)
        for _ in range(samples):
            a, b = rng.uniform(-1.0, 1.0, D), rng.uniform(-1.0, 1.0, D)
            phi = TrigPolynomial(0.0, a, b)
            radius = rng.uniform(0.0, 1.0)
            factor = radius / l2_norm(phi)
            val = abs(w * math.fsum(phi(x0 - t) * factor * ker) / math.pi)
            if val > 0.0:
                random_max = max(random_max, math.exp(log_scale + math.log(val)))
    return DeviationOracle(analytic, oracle, rel, cert, K, N, random_max)


def deviation_oracle(spec: KernelSpec, n: int, grid_size: Optional[int] = None,
                     tol: float = 1e-6, seed: int = 0, samples: int = 32,
                     x0: float = 0.5, trunc_rel: float = 1e-7) -> VerificationReport:
    """Quadrature of the extremal convolution remainder against the closed form.

    The extremal function is the normalised remainder kernel reflected about
    ``x0``; 32 random non-extremal functions in the unit L2 ball must stay
    below the closed form.
    """
    check_id = f"deviation/{_spec_label(spec)}/n={n}"
    rng = rng_for(seed, check_id)
    d = _deviation_values(spec, n, grid_size, x0, samples, rng, trunc_rel)
    tolerance = max(tol, d.certificate)
    envelope_ok = d.random_max <= d.analytic * (1.0 + tolerance)
    return VerificationReport(
        check_id=check_id, inputs={**_spec_inputs(spec), "n": n, "x0": x0},
        analytic=d.analytic, oracle=d.oracle, margin=d.analytic - d.oracle,
        tolerance=tolerance, passed=(d.rel_error <= tolerance) and envelope_ok,
        seed=seed,
        details={"rel_error": d.rel_error, "degree": d.degree, "grid_size": d.grid_size,
                 "random_samples": samples, "random_max": d.random_max,
                 "envelope_ok": envelope_ok},
    )


def beta_invariance_check(psi: PsiSequence, n: int, betas: Sequence[BetaSequence],
                          tol: float = 1e-6, seed: int = 0) -> VerificationReport:
    check_id = f"beta_invariance/{psi.label()}/n={n}"
    values = [
        _deviation_values(KernelSpec(psi, b), n, None, 0.5, 0, None, 1e-7).oracle
        for b in betas
    ]
    spread = 0.0
    for u, v in itertools.combinations(values, 2):
        spread = max(spread, abs(u - v) / max(abs(u), abs(v)))
    tolerance = max(tol, 1e-6)
    analytic = wb.exact_fourier_deviation(psi, n)
    return VerificationReport(
        check_id=check_id,
        inputs={"psi": psi.to_json(), "n": n, "betas": [b.to_json() for b in betas]},
        analytic=analytic, oracle=values[0], margin=tolerance - spread, tolerance=tolerance,
        passed=spread <= tolerance, seed=seed,
        details={"spread": spread, "oracles": values},
    )


def bounds_identity_check(psi: PsiSequence, ns: Iterable[int],
                          betas: Sequence[BetaSequence]) -> VerificationReport:
    """Serialized bound rows must not depend on beta at all."""
    ns = list(ns)
    rows = [[repr(wb.bounds_report(psi, b, n).row()) for n in ns] for b in betas]
    identical = all(r == rows[0] for r in rows)
    return VerificationReport(
        check_id=f"bounds_beta_identity/{psi.label()}",
        inputs={"psi": psi.to_json(), "n": ns, "betas": [b.to_json() for b in betas]},
        analytic=0.0, oracle=0.0 if identical else 1.0, margin=0.0 if identical else -1.0,
        tolerance=0.0, passed=identical,
    )


# ---------------------------------------------------------------------------
# Bernstein-ball embedding
# ---------------------------------------------------------------------------

def derivative_l2(poly: TrigPolynomial, spec: KernelSpec) -> float:
    return l2_norm(psi_derivative(poly, spec))


def embedding_check(psi: PsiSequence, beta: BetaSequence, n: int, samples: int = 1000,
                    seed: int = 0) -> VerificationReport:
    """Random order-n polynomials scaled into the ball of radius rho_n keep
    ||(T)^psi_beta||_2 <= 1."""
    spec = KernelSpec(psi, beta)
    check_id = f"embedding/{_spec_label(spec)}/n={n}"
    rng = rng_for(seed, check_id)
    rho = wb.lower_bound(psi, n)
    a0 = rng.uniform(-1.0, 1.0, samples)
    A = rng.uniform(-1.0, 1.0, (samples, n))
    B = rng.uniform(-1.0, 1.0, (samples, n))
    norms, _ = sup_norm_batch(a0, A, B)
    worst = 0.0
    for i in range(samples):
        c = rho / (norms[i] * (1.0 + EMBED_SAFETY))
        worst = max(worst, derivative_l2(TrigPolynomial(c * a0[i], c * A[i], c * B[i]), spec))
    top = derivative_l2(TrigPolynomial.cos(n, rho), spec)
    return VerificationReport(
        check_id=check_id, inputs={**_spec_inputs(spec), "n": n, "samples": samples},
        analytic=1.0, oracle=worst, margin=1.0 - worst, tolerance=EMBED_SLACK,
        passed=worst <= 1.0 + EMBED_SLACK, seed=seed,
        details={"radius": rho, "top_harmonic_norm": top},
    )


def embedding_witness(psi: PsiSequence, beta: BetaSequence) -> VerificationReport:
    """rho_1 cos x sits on the ball boundary and has derivative norm exactly 1."""
    spec = KernelSpec(psi, beta)
    rho = wb.lower_bound(psi, 1)
    value = derivative_l2(TrigPolynomial.cos(1, rho), spec)
    return VerificationReport(
        check_id=f"embedding_witness/{_spec_label(spec)}", inputs=_spec_inputs(spec),
        analytic=1.0, oracle=value, margin=1.0 - value, tolerance=1e-12,
        passed=abs(value - 1.0) <= 1e-12,
    )


# ---------------------------------------------------------------------------
# coefficient inequalities for trigonometric polynomials
# ---------------------------------------------------------------------------

def _coefficient_margins(poly: TrigPolynomial, norm: float, tau_norm: Optional[float]):
    amps = np.hypot(poly.a, poly.b)
    m_all = float(np.min(math.sqrt(2.0) * norm - amps)) if poly.degree else math.inf
    if tau_norm is None:
        return m_all, None, None
    return m_all, norm - float(amps[-1]), tau_norm - 1.0


def coefficient_inequality_check(poly: TrigPolynomial, check_id: str = "coefficients",
                                 seed: Optional[int] = None) -> VerificationReport:
    """sqrt(a_k**2 + b_k**2) <= sqrt(2) ||T||_C for all k, and at the top
    harmonic both sqrt(a_n**2 + b_n**2) <= ||T||_C and ||tau_n||_C >= 1."""
    norm = sup_norm(poly).value
    top = float(np.hypot(poly.a[-1], poly.b[-1])) if poly.degree else 0.0
    skipped = top == 0.0
    tau_norm = None
    if not skipped:
        tau = TrigPolynomial(poly.a0 / top, poly.a / top, poly.b / top)
        tau_norm = sup_norm(tau).value
    m_all, m_top, m_tau = _coefficient_margins(poly, norm, tau_norm)
    margins = [m for m in (m_all, m_top, m_tau) if m is not None]
    worst = min(margins)
    return VerificationReport(
        check_id=check_id,
        inputs={"a0": poly.a0, "a": poly.a.tolist(), "b": poly.b.tolist()},
        analytic=norm, oracle=top, margin=worst, tolerance=COEFF_SLACK,
        passed=worst >= -COEFF_SLACK, seed=seed,
        details={"all_harmonics": m_all, "top_harmonic": m_top, "tau_norm_minus_one": m_tau,
                 "top_harmonic_skipped": skipped},
    )


def random_coefficient_check(samples: int = 1000, max_degree: int = 8,
                             seed: int = 0) -> VerificationReport:
    check_id = f"coefficients/random/degree<={max_degree}"
    rng = rng_for(seed, check_id)
    degrees = rng.integers(1, max_degree + 1, samples)
    a0 = rng.uniform(-1.0, 1.0, samples)
    A = rng.uniform(-1.0, 1.0, (samples, max_degree))
    B = rng.uniform(-1.0, 1.0, (samples, max_degree))
    worst = math.inf
    worst_parts: dict[str, float] = {}
    for d in range(1, max_degree + 1):
        idx = np.nonzero(degrees == d)[0]
        if idx.size == 0:
            continue
        Ad, Bd = A[idx, :d], B[idx, :d]
        norms, _ = sup_norm_batch(a0[idx], Ad, Bd)
        top = np.hypot(Ad[:, -1], Bd[:, -1])
        tau_norms, _ = sup_norm_batch(a0[idx] / top, Ad / top[:, None], Bd / top[:, None])
        m_all = np.min(math.sqrt(2.0) * norms[:, None] - np.hypot(Ad, Bd), axis=1)
        parts = {"all_harmonics": float(m_all.min()), "top_harmonic": float((norms - top).min()),
                 "tau_norm_minus_one": float((tau_norms - 1.0).min())}
        for key, val in parts.items():
            worst_parts[key] = min(worst_parts.get(key, math.inf), val)
        worst = min(worst, *parts.values())
    return VerificationReport(
        check_id=check_id, inputs={"samples": samples, "max_degree": max_degree},
        analytic=0.0, oracle=-worst, margin=worst, tolerance=COEFF_SLACK,
        passed=worst >= -COEFF_SLACK, seed=seed, details=worst_parts,
    )


# ---------------------------------------------------------------------------
# analytic series/integral bounds against direct summation and quadrature
# ---------------------------------------------------------------------------

def adaptive_simpson(f: Callable[[float], float], a: float, b: float, abs_tol: float,
                     max_depth: int = 60) -> tuple[float, float]:
    """Adaptive Simpson quadrature; returns (value, accumulated error estimate)."""
    if b <= a:
        return 0.0, 0.0

    def simpson(lo, flo, hi, fhi):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        return mid, fmid, (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, flo, hi, fhi, mid, fmid, whole, eps, depth):
        lm, flm, left = simpson(lo, flo, mid, fmid)
        rm, frm, right = simpson(mid, fmid, hi, fhi)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15.0 * eps:
            return left + right + delta / 15.0, abs(delta) / 15.0
        lv, le = recurse(lo, flo, mid, fmid, lm, flm, left, 0.5 * eps, depth - 1)
        rv, re = recurse(mid, fmid, hi, fhi, rm, frm, right, 0.5 * eps, depth - 1)
        return lv + rv, le + re

    fa, fb = f(a), f(b)
    m, fm, whole = simpson(a, fa, b, fb)
    return recurse(a, fa, b, fb, m, fm, whole, abs_tol, max_depth)


def _direct_exp_tail(alpha: float, r: float, n: int) -> float:
    terms, k = [], n + 1
    while True:
        term = math.exp(-alpha * k**r)
        terms.append(term)
        if term <= 1e-20 * terms[0]:
            break
        k += 1
    # the next term is below 1e-20 of the first; add a full first-term bound on the rest
    return math.fsum(terms) + 1e-20 * terms[0]


def _direct_power_tail(r: float, n: int, M: int = 10**6) -> float:
    """sum_{k>n} k**(-2r) by direct summation to M plus an integral over-estimate."""
    k = np.arange(n + 1, M + 1, dtype=float)
    s = 2.0 * r
    return math.fsum(np.exp(-s * np.log(k))) + M ** (1.0 - s) / (s - 1.0)


def _bound_report(eq: str, inputs: dict[str, Any], analytic: float, oracle: float,
                  details: Optional[dict] = None) -> VerificationReport:
    label = ",".join(f"{k}={v:g}" for k, v in inputs.items())
    margin = analytic - oracle
    return VerificationReport(
        check_id=f"bound/{eq}/{label}", inputs=dict(inputs, equation=eq),
        analytic=analytic, oracle=oracle, margin=margin, tolerance=0.0,
        passed=margin >= 0.0, details=details or {},
    )


def check_exp_series_tail(alpha: float, r: float, n: int) -> VerificationReport:
    """sum_{k>n} exp(-alpha k**r) < exp(-alpha n**r)(1 + 1/(alpha r n**(r-1))) exp(-alpha r n**(r-1))."""
    return _bound_report("exp_series_tail", {"alpha": alpha, "r": r, "n": n},
                         wb.exp_series_tail_bound(alpha, r, n), _direct_exp_tail(alpha, r, n))


def check_power_tail(r: float, n: int) -> VerificationReport:
    return _bound_report("power_tail", {"r": r, "n": n},
                         wb.power_tail_bound(r, n), _direct_power_tail(r, n))


def check_power_head(r: float, n: int) -> VerificationReport:
    s = 2.0 * r
    oracle = math.fsum([n**s] + [2.0 * k**s for k in range(1, n)])
    return _bound_report("power_head", {"r": r, "n": n}, wb.power_head_bound(r, n), oracle)


def check_exp_integral(alpha: float, r: float, n: int) -> VerificationReport:
    f = lambda t: math.exp(2.0 * alpha * t**r)
    top = f(n - 1.0)
    value, err = adaptive_simpson(f, 1.0, n - 1.0, 1e-8 * top)
    return _bound_report("exp_integral", {"alpha": alpha, "r": r, "n": n},
                         wb.exp_integral_bound(alpha, r, n), value + err,
                         {"quadrature": value, "quadrature_error": err})


def check_poisson_head(alpha: float, r: float, n: int) -> VerificationReport:
    nr = float(n) ** r
    oracle = math.fsum(math.exp(-2.0 * alpha * (nr - float(k) ** r)) for k in range(1, n))
    return _bound_report("poisson_head", {"alpha": alpha, "r": r, "n": n},
                         wb.poisson_head_bound(alpha, r, n), oracle)


BOUND_GRID: dict[str, list[tuple]] = {
    "exp_series_tail": [(1, 2, 2), (1, 2, 3), (0.5, 1.5, 3), (2, 3, 2), (0.25, 2, 4), (1, 1.5, 5), (3, 1.2, 1)],
    "power_tail": [(2, 3), (1, 1), (3, 5), (5, 3), (2.5, 4), (1.5, 2), (5, 9)],
    "power_head": [(2, 3), (3, 2), (3, 5), (5, 3), (2.5, 4), (1.5, 2), (5, 9)],
    "exp_integral": [(1, 2, 3), (0.25, 2, 4), (0.5, 1.5, 3), (2, 3, 3), (1, 1.5, 4), (0.3, 2, 3), (2, 3, 2)],
    "poisson_head": [(1, 2, 3), (0.5, 1.5, 3), (2, 3, 2), (0.25, 2, 4), (1, 1.5, 4), (1, 2, 5)],
}

_BOUND_CHECKS: dict[str, Callable[..., VerificationReport]] = {
    "exp_series_tail": check_exp_series_tail,
    "power_tail": check_power_tail,
    "power_head": check_power_head,
    "exp_integral": check_exp_integral,
    "poisson_head": check_poisson_head,
}


def bound_vs_bruteforce_suite(grid: Optional[dict[str, list[tuple]]] = None) -> list[VerificationReport]:
    grid = BOUND_GRID if grid is None else grid
    reports = []
    for eq, points in grid.items():
        for point in points:
            try:
                reports.append(_BOUND_CHECKS[eq](*point))
            except wb.PreconditionError as exc:
                reports.append(VerificationReport(
                    check_id=f"bound/{eq}/{point}", inputs={"equation": eq, "point": list(point)},
                    analytic=math.nan, oracle=math.nan, margin=math.nan, tolerance=0.0,
                    passed=False, details={"error": str(exc)}))
    return reports


# ---------------------------------------------------------------------------
# decay of the condition gauges
# ---------------------------------------------------------------------------

def trend_check(psi: PsiSequence, n_max: int, threshold: float = 1e-3) -> VerificationReport:
    """Tail ratio and head product strictly decrease on 2..n_max and end below ``threshold``."""
    ns = range(2, n_max + 1)
    log_tail = [log_tail_sq_sum(psi, n + 1) - 2.0 * log_psi(psi, n) for n in ns]
    log_head = [2.0 * log_psi(psi, n) + head_inv_sq_sum(psi, n).log_value for n in ns]
    dec = lambda xs: all(b < a for a, b in zip(xs, xs[1:]))
    ratios = [d0_ratio(psi, k) for k in range(1, n_max + 1)]
    tail_end, head_end = math.exp(log_tail[-1]), math.exp(log_head[-1])
    final = max(tail_end, head_end)
    ok = dec(log_tail) and dec(log_head) and final < threshold
    return VerificationReport(
        check_id=f"trend/{psi.label()}/n_max={n_max}",
        inputs={"psi": psi.to_json(), "n_max": n_max, "threshold": threshold},
        analytic=threshold, oracle=final, margin=threshold - final, tolerance=0.0,
        passed=ok, expected_fail=not satisfies_d0(psi),
        details={"tail_decreasing": dec(log_tail), "head_decreasing": dec(log_head),
                 "tail_final": tail_end, "head_final": head_end,
                 "d0_ratio_decreasing": all(b <= a for a, b in zip(ratios, ratios[1:]))},
    )


# ---------------------------------------------------------------------------
# sandwich and containment
# ---------------------------------------------------------------------------

def sandwich_check(psi: PsiSequence, n: int) -> VerificationReport:
    """lower <= psi(n)/sqrt(pi) <= upper, strict wherever the gap is mathematically nonzero."""
    rep = wb.bounds_report(psi, None, n)
    lower_strict = rep.lower_deficit > 0.0 if n > 1 else rep.lower_deficit == 0.0
    # at n = 1 the head sum is empty and lower == leading exactly
    ok = rep.lower <= rep.leading <= rep.upper and rep.upper_excess > 0.0 and lower_strict
    return VerificationReport(
        check_id=f"sandwich/{psi.label()}/n={n}", inputs={"psi": psi.to_json(), "n": n},
        analytic=rep.leading, oracle=rep.upper, margin=min(rep.lower_deficit, rep.upper_excess),
        tolerance=0.0, passed=ok,
        details={"lower": rep.lower, "lower_deficit": rep.lower_deficit,
                 "upper_excess": rep.upper_excess},
    )


def containment_check(psi: PsiSequence, n: int, slack: float = 1e-12) -> VerificationReport:
    """The Weyl-Nagy / Poisson forms relax the general bounds."""
    lp = log_psi(psi, n)
    lo_ratio = math.exp(wb.log_lower_bound(psi, n) - lp)
    up_ratio = math.exp(wb.log_upper_bound(psi, n) - lp)
    if isinstance(psi, Power):
        spec_rep = wb.weyl_nagy_report(psi.r, n)
        name = "weyl_nagy"
    elif isinstance(psi, ExpPoly):
        spec_rep = wb.poisson_report(psi.alpha, psi.r, n)
        name = "poisson"
    else:
        raise wb.PreconditionError(f"no specialised bounds for {psi.label()}")
    ok_lo = spec_rep.lower_ratio <= lo_ratio * (1.0 + slack)
    ok_up = spec_rep.upper_ratio >= up_ratio * (1.0 - slack)
    margin = min(lo_ratio - spec_rep.lower_ratio, spec_rep.upper_ratio - up_ratio)
    return VerificationReport(
        check_id=f"containment/{name}/{psi.label()}/n={n}", inputs={"psi": psi.to_json(), "n": n},
        analytic=spec_rep.upper_ratio, oracle=up_ratio, margin=margin, tolerance=slack,
        passed=ok_lo and ok_up,
        details={"general_lower_ratio": lo_ratio, "special_lower_ratio": spec_rep.lower_ratio,
                 "general_upper_ratio": up_ratio, "special_upper_ratio": spec_rep.upper_ratio},
    )


# ---------------------------------------------------------------------------
# default manifest for the command line
# ---------------------------------------------------------------------------

def default_suite(seed: int = 0, samples: int = 200) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    dev_specs = [
        (KernelSpec(Geometric(0.5), ConstantBeta(0.0)), (1, 2, 3)),
        (KernelSpec(Geometric(0.5), ConstantBeta(3.0)), (2,)),
        (KernelSpec(ExpPoly(1.0, 2.0), ConstantBeta(1.0)), (1, 2)),
        (KernelSpec(Power(3.0), PeriodicBeta((0.0, 1.0))), (1, 2)),
    ]
    for spec, ns in dev_specs:
        for n in ns:
            reports.append(deviation_oracle(spec, n, seed=seed))
    betas = [ConstantBeta(0.0), ConstantBeta(1.0), ConstantBeta(2.5), PeriodicBeta((0.0, 1.0))]
    reports.append(beta_invariance_check(Geometric(0.5), 2, betas, seed=seed))
    reports.append(bounds_identity_check(ExpPoly(1.0, 2.0), range(1, 7), betas))
    for psi, beta in [(Power(2.0), ConstantBeta(1.0)), (ExpPoly(1.0, 2.0), PeriodicBeta((0.0, 1.0)))]:
        for n in (1, 2, 3, 4):
            reports.append(embedding_check(psi, beta, n, samples=samples, seed=seed))
        reports.append(embedding_witness(psi, beta))
    reports.append(coefficient_inequality_check(TrigPolynomial.cos(3), "coefficients/cos3x"))
    reports.append(random_coefficient_check(samples=samples, seed=seed))
    reports.extend(bound_vs_bruteforce_suite())
    reports.append(trend_check(ExpPoly(1.0, 2.0), 6))
    reports.append(trend_check(ExpPoly(0.5, 1.5), 24))
    reports.append(trend_check(Geometric(0.5), 12))
    return reports
