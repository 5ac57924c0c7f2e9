"""Trigonometric polynomials, (psi, beta)-kernels and their norms.

A polynomial is ``a0/2 + sum_k (a_k cos kx + b_k sin kx)``.  Grid evaluation
is direct cos/sin over an outer product, chunked to bound memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from .psi_seq import PsiSequence, log_tail_power_sum, tail_sq_sum, DEFAULT_TOL

_CHUNK = 1 << 22  # elements per outer-product block
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0
_GOLDEN_STEPS = 64


# ---------------------------------------------------------------------------
# phase sequences
# ---------------------------------------------------------------------------

class BetaSequence:
    mode: str = ""

    def __call__(self, k):
        raise NotImplementedError

    def to_json(self) -> dict[str, Any]:
        raise NotImplementedError

    def label(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class ConstantBeta(BetaSequence):
    beta: float
    mode: str = field(default="constant", init=False, repr=False)

    def __call__(self, k):
        return np.full(np.shape(k), float(self.beta))

    def to_json(self):
        return {"mode": "constant", "beta": self.beta}

    def label(self):
        return f"constant({self.beta:g})"


@dataclass(frozen=True)
class ListBeta(BetaSequence):
    """beta_k = values[k-1] for k <= len(values), ``default`` afterwards."""

    values: tuple[float, ...]
    default: float = 0.0
    mode: str = field(default="list", init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))

    def __call__(self, k):
        k = np.asarray(k)
        vals = np.asarray(self.values + (self.default,))
        return vals[np.minimum(k, len(self.values) + 1) - 1]

    def to_json(self):
        return {"mode": "list", "values": list(self.values), "default": self.default}

    def label(self):
        return "list(" + ",".join(f"{v:g}" for v in self.values) + f";{self.default:g})"


@dataclass(frozen=True)
class PeriodicBeta(BetaSequence):
    """beta_k = values[(k-1) mod len(values)]."""

    values: tuple[float, ...]
    mode: str = field(default="periodic", init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if not self.values:
            raise ValueError("periodic beta needs a nonempty value list")

    def __call__(self, k):
        k = np.asarray(k)
        return np.asarray(self.values)[(k - 1) % len(self.values)]

    def to_json(self):
        return {"mode": "periodic", "values": list(self.values)}

    def label(self):
        return "periodic(" + ",".join(f"{v:g}" for v in self.values) + ")"


def beta_from_json(obj: dict[str, Any]) -> BetaSequence:
    if not isinstance(obj, dict) or "mode" not in obj:
        raise ValueError("beta spec must be an object with a 'mode' key")
    mode = obj["mode"]
    try:
        if mode == "constant":
            return ConstantBeta(float(obj["beta"]))
        if mode == "list":
            return ListBeta(tuple(obj["values"]), float(obj.get("default", 0.0)))
        if mode == "periodic":
            return PeriodicBeta(tuple(obj["values"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed beta spec {obj!r}: {exc}") from exc
    raise ValueError(f"unknown beta mode {mode!r}")


@dataclass(frozen=True)
class KernelSpec:
    psi: PsiSequence
    beta: BetaSequence = ConstantBeta(0.0)


def weyl_nagy_kernel(r: float, beta: float) -> KernelSpec:
    from .psi_seq import Power
    return KernelSpec(Power(r), ConstantBeta(beta))


def bernoulli_kernel(r: int) -> KernelSpec:
    if int(r) != r or r < 1:
        raise ValueError("Bernoulli kernels need a positive integer r")
    return weyl_nagy_kernel(float(r), float(r))


def poisson_kernel(alpha: float, r: float, beta: float) -> KernelSpec:
    from .psi_seq import ExpPoly
    return KernelSpec(ExpPoly(alpha, r), ConstantBeta(beta))


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class TrigPolynomial:
    a0: float
    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=float).reshape(-1)
        b = np.asarray(self.b, dtype=float).reshape(-1)
        if a.shape != b.shape:
            raise ValueError("cosine and sine coefficient lists differ in length")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "a0", float(self.a0))

    @classmethod
    def from_pairs(cls, a0: float, coeffs: Sequence[tuple[float, float]]) -> "TrigPolynomial":
        arr = np.asarray(coeffs, dtype=float).reshape(-1, 2)
        return cls(a0, arr[:, 0], arr[:, 1])

    @classmethod
    def cos(cls, n: int, amplitude: float = 1.0) -> "TrigPolynomial":
        a = np.zeros(n)
        a[n - 1] = amplitude
        return cls(0.0, a, np.zeros(n))

    @property
    def degree(self) -> int:
        return len(self.a)

    def __call__(self, x):
        return _eval_cos_sin(self.a0, self.a, self.b, np.asarray(x, dtype=float))

    def allclose(self, other: "TrigPolynomial", atol: float) -> bool:
        n = max(self.degree, other.degree)
        pa, pb = _pad(self, n), _pad(other, n)
        return (abs(self.a0 - other.a0) <= atol
                and bool(np.all(np.abs(pa[0] - pb[0]) <= atol))
                and bool(np.all(np.abs(pa[1] - pb[1]) <= atol)))


def _pad(p: TrigPolynomial, n: int):
    out_a, out_b = np.zeros(n), np.zeros(n)
    out_a[:p.degree], out_b[:p.degree] = p.a, p.b
    return out_a, out_b


def _eval_cos_sin(a0, a, b, x):
    flat = x.reshape(-1)
    out = np.full(flat.shape, 0.5 * a0)
    n = len(a)
    if n:
        k = np.arange(1, n + 1, dtype=float)
        step = max(1, _CHUNK // n)
        for s in range(0, flat.size, step):
            kx = np.outer(flat[s:s + step], k)
            out[s:s + step] += np.cos(kx) @ a + np.sin(kx) @ b
    return out.reshape(x.shape)


def _phase(spec: KernelSpec, k):
    half = 0.5 * math.pi * spec.beta(k)
    return np.cos(half), np.sin(half)


def kernel_coefficients(spec: KernelSpec, k: int) -> tuple[float, float]:
    """(a_k, b_k) of psi(k) cos(kt - beta_k pi/2)."""
    if k < 1:
        raise ValueError("kernel harmonics start at k = 1")
    amp = float(np.exp(spec.psi.log_psi(k)))
    c, s = _phase(spec, k)
    return amp * float(c), amp * float(s)


def kernel_polynomial(spec: KernelSpec, n: int, K: int) -> TrigPolynomial:
    """Harmonics n..K of the kernel as a polynomial of degree K."""
    k = np.arange(n, K + 1)
    amp = np.exp(spec.psi.log_psi(k))
    c, s = _phase(spec, k)
    a, b = np.zeros(K), np.zeros(K)
    a[n - 1:], b[n - 1:] = amp * c, amp * s
    return TrigPolynomial(0.0, a, b)


def kernel_truncation_degree(psi: PsiSequence, tol: float, p: float = 1.0,
                             log_relative_to: float = 0.0, start: int = 1,
                             max_degree: int = 1 << 20) -> int:
    """Smallest K >= start with the certified bound on sum_{k>K} psi(k)**p <= tol.

    A nonzero ``log_relative_to`` compares against ``tol * exp(log_relative_to)``.
    """
    target = math.log(tol) + log_relative_to
    ok = lambda K: psi.log_remainder(K + 1, p) <= target
    hi = max(start, 1)
    while not ok(hi):
        hi *= 2
        if hi > max_degree:
            raise ValueError(f"kernel truncation for {psi.label()} exceeds degree {max_degree} at tol={tol:g}")
    lo = max(start, hi // 2)
    if ok(lo):
        return lo
    while hi - lo > 1:
        mid = (lo + hi) // 2
        lo, hi = (lo, mid) if ok(mid) else (mid, hi)
    return hi


def eval_kernel(spec: KernelSpec, t, tol: float = DEFAULT_TOL):
    """Pointwise kernel sum truncated where sum_{k>K} psi(k) <= tol."""
    if not spec.psi.pointwise_summable():
        raise ValueError(f"{spec.psi.label()} is not absolutely summable; pointwise evaluation refused")
    K = kernel_truncation_degree(spec.psi, tol)
    return kernel_polynomial(spec, 1, K)(t)


def remainder_kernel_l2(spec: KernelSpec, n: int, tol: float = DEFAULT_TOL) -> float:
    """L2 norm of sum_{k>=n} psi(k) cos(kt - beta_k pi/2); beta plays no role."""
    return math.sqrt(math.pi * tail_sq_sum(spec.psi, n, tol))


def log_remainder_kernel_l2(spec: KernelSpec, n: int, tol: float = DEFAULT_TOL) -> float:
    return 0.5 * (math.log(math.pi) + log_tail_power_sum(spec.psi, n, 2.0, tol))


# ---------------------------------------------------------------------------
# (psi, beta) integral and derivative
# ---------------------------------------------------------------------------

def psi_integral(phi: TrigPolynomial, spec: KernelSpec) -> TrigPolynomial:
    """Convolution of phi with the kernel, phi's a0 carried over unchanged."""
    k = np.arange(1, phi.degree + 1)
    amp = np.exp(spec.psi.log_psi(k)) if phi.degree else np.zeros(0)
    c, s = _phase(spec, k)
    a = amp * (phi.a * c - phi.b * s)
    b = amp * (phi.a * s + phi.b * c)
    return TrigPolynomial(phi.a0, a, b)


def psi_derivative(poly: TrigPolynomial, spec: KernelSpec) -> TrigPolynomial:
    """Coefficient-wise inverse of ``psi_integral``; the constant term is dropped."""
    k = np.arange(1, poly.degree + 1)
    inv = np.exp(-spec.psi.log_psi(k)) if poly.degree else np.zeros(0)
    c, s = _phase(spec, k)
    a = inv * (poly.a * c + poly.b * s)
    b = inv * (-poly.a * s + poly.b * c)
    return TrigPolynomial(0.0, a, b)


def fourier_partial_sum(poly: TrigPolynomial, n: int) -> TrigPolynomial:
    """S_{n-1}: keep a0 and harmonics 1..n-1."""
    if n < 1:
        raise ValueError("partial sum order needs n >= 1")
    m = min(n - 1, poly.degree)
    a, b = poly.a.copy(), poly.b.copy()
    a[m:] = 0.0
    b[m:] = 0.0
    return TrigPolynomial(poly.a0, a, b)


# ---------------------------------------------------------------------------
# norms
# ---------------------------------------------------------------------------

def l2_norm(poly: TrigPolynomial) -> float:
    """Parseval: ||T||_2**2 = pi (a0**2/2 + sum a_k**2 + b_k**2)."""
    total = math.fsum([0.5 * poly.a0**2, *(poly.a**2), *(poly.b**2)])
    return math.sqrt(math.pi * total)


@dataclass(frozen=True)
class SupNorm:
    value: float
    certified_lower: float


def sup_norm(poly: TrigPolynomial, oversample: int = 8) -> SupNorm:
    vals, lows = sup_norm_batch(np.array([poly.a0]), poly.a[None, :], poly.b[None, :], oversample)
    return SupNorm(float(vals[0]), float(lows[0]))


def sup_norm_batch(a0, A, B, oversample: int = 8):
    """Uniform norms of many polynomials sharing one degree.

    Returns ``(value, certified_lower)`` arrays.  ``certified_lower`` is the
    raw grid maximum.  ``value`` refines, by golden-section search, every grid
    local maximum of |T| that could still hold the global one: a grid of
    spacing h misses a peak by at most n**2 h**2 ||T|| / 8 (Bernstein).
    """
    if oversample < 8:
        raise ValueError("oversample must be at least 8")
    a0 = np.asarray(a0, dtype=float)
    A = np.atleast_2d(np.asarray(A, dtype=float))
    B = np.atleast_2d(np.asarray(B, dtype=float))
    S, n = A.shape
    N = oversample * max(n, 1)
    h = 2.0 * math.pi / N
    t = h * np.arange(N)
    k = np.arange(1, n + 1, dtype=float)
    kt = np.outer(t, k)
    grid = np.abs(0.5 * a0[:, None] + A @ np.cos(kt).T + B @ np.sin(kt).T)  # (S, N)
    lower = grid.max(axis=1)
    if n == 0:
        return lower.copy(), lower
    slack = 1.0 - (n * h) ** 2 / 8.0
    left, right = np.roll(grid, 1, axis=1), np.roll(grid, -1, axis=1)
    cand = (grid >= left) & (grid >= right) & (grid >= slack * lower[:, None])
    rows, cols = np.nonzero(cand)
    lo, hi = t[cols] - h, t[cols] + h

    def f(x):
        kx = x[:, None] * k[None, :]
        return np.abs(0.5 * a0[rows] + np.sum(A[rows] * np.cos(kx) + B[rows] * np.sin(kx), axis=1))

    x1 = hi - _GOLDEN * (hi - lo)
    x2 = lo + _GOLDEN * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(_GOLDEN_STEPS):
        go_right = f1 < f2
        lo = np.where(go_right, x1, lo)
        hi = np.where(go_right, hi, x2)
        nx1 = np.where(go_right, x2, hi - _GOLDEN * (hi - lo))
        nx2 = np.where(go_right, lo + _GOLDEN * (hi - lo), x1)
        nf1 = np.where(go_right, f2, np.nan)
        nf2 = np.where(go_right, np.nan, f1)
        need1, need2 = ~go_right, go_right
        if need1.any():
            nf1[need1] = f(nx1)[need1]
        if need2.any():
            nf2[need2] = f(nx2)[need2]
        x1, x2, f1, f2 = nx1, nx2, nf1, nf2
    refined = np.maximum(f1, f2)
    value = lower.copy()
    np.maximum.at(value, rows, refined)
    return value, lower
