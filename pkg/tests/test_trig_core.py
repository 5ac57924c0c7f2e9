import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from widthlab.psi_seq import ExpPoly, Geometric, Power, TableWithTail
from widthlab.trig_core import (
    ConstantBeta, KernelSpec, ListBeta, PeriodicBeta, TrigPolynomial, beta_from_json,
    bernoulli_kernel, eval_kernel, fourier_partial_sum, kernel_coefficients, l2_norm,
    poisson_kernel, psi_derivative, psi_integral, remainder_kernel_l2, sup_norm, weyl_nagy_kernel,
)

# mpmath, 40 digits: only even k survive, -e^{-4} + e^{-16} - e^{-36} + ...
KERNEL_EXP12_HALF_PI = -0.01831552635355969

BETAS = [ConstantBeta(0.0), ConstantBeta(1.0), ConstantBeta(2.5), ListBeta((0.3, 1.0, -2.0), 0.5),
         PeriodicBeta((0.0, 1.0)), PeriodicBeta((0.25, 3.0, 1.5))]
PSIS = [Power(2.0), Power(0.75), ExpPoly(1.0, 2.0), ExpPoly(0.5, 1.5), Geometric(0.5),
        TableWithTail((1.0, 0.3, 0.6), 0.5)]

coef = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def polys(draw, max_degree=16, zero_a0=False):
    d = draw(st.integers(0, max_degree))
    a = draw(st.lists(coef, min_size=d, max_size=d))
    b = draw(st.lists(coef, min_size=d, max_size=d))
    a0 = 0.0 if zero_a0 else draw(coef)
    return TrigPolynomial(a0, a, b)


def test_beta_json_round_trip():
    for b in BETAS:
        assert beta_from_json(b.to_json()) == b
    with pytest.raises(ValueError):
        beta_from_json({"mode": "spiral"})
    with pytest.raises(ValueError):
        PeriodicBeta(())


def test_list_and_periodic_beta_indexing():
    lb = ListBeta((0.3, 1.0), 7.0)
    assert [lb(k) for k in (1, 2, 3, 9)] == [0.3, 1.0, 7.0, 7.0]
    pb = PeriodicBeta((0.0, 1.0, 2.0))
    assert [pb(k) for k in range(1, 7)] == [0.0, 1.0, 2.0, 0.0, 1.0, 2.0]


def test_named_kernels():
    assert weyl_nagy_kernel(2.0, 1.0) == KernelSpec(Power(2.0), ConstantBeta(1.0))
    assert bernoulli_kernel(3) == KernelSpec(Power(3.0), ConstantBeta(3.0))
    assert poisson_kernel(1.0, 2.0, 0.0).psi == ExpPoly(1.0, 2.0)
    with pytest.raises(ValueError):
        bernoulli_kernel(1.5)


def test_kernel_coefficients():
    a, b = kernel_coefficients(KernelSpec(Power(1.0), ConstantBeta(1.0)), 2)
    assert a == pytest.approx(0.0, abs=1e-16) and b == pytest.approx(0.5, rel=1e-15)
    assert kernel_coefficients(KernelSpec(Power(1.0)), 3) == pytest.approx((1 / 3, 0.0), rel=1e-15)
    a, b = kernel_coefficients(KernelSpec(ExpPoly(1.0, 1.0), ConstantBeta(0.5)), 1)
    ref = math.exp(-1) * math.cos(math.pi / 4)
    assert a == pytest.approx(ref, rel=1e-14) and b == pytest.approx(ref, rel=1e-14)
    with pytest.raises(ValueError):
        kernel_coefficients(KernelSpec(Power(1.0)), 0)


@given(st.sampled_from(PSIS), st.sampled_from(BETAS), st.integers(1, 50))
def test_kernel_coefficient_amplitude(psi, beta, k):
    a, b = kernel_coefficients(KernelSpec(psi, beta), k)
    amp = math.exp(float(psi.log_psi(k)))
    assert math.hypot(a, b) == pytest.approx(amp, rel=4e-16)


def test_eval_kernel_values():
    g = KernelSpec(Geometric(0.5), ConstantBeta(0.0))
    assert float(eval_kernel(g, 0.0)) == pytest.approx(1.0, abs=1e-12)
    assert float(eval_kernel(KernelSpec(Geometric(0.5), ConstantBeta(2.0)), 0.0)) == pytest.approx(-1.0, abs=1e-12)
    v = float(eval_kernel(KernelSpec(ExpPoly(1.0, 2.0)), math.pi / 2))
    assert v == pytest.approx(KERNEL_EXP12_HALF_PI, abs=1e-12)


def test_eval_kernel_refuses_non_summable():
    with pytest.raises(ValueError):
        eval_kernel(KernelSpec(Power(1.0)), 0.0)
    with pytest.raises(ValueError):
        eval_kernel(KernelSpec(Power(0.75)), 0.0)


def test_geometric_kernel_closed_form():
    # sum q^k cos(kt) = q(cos t - q)/(1 - 2q cos t + q^2)
    q, t = 0.5, np.linspace(-math.pi, math.pi, 33)
    ref = q * (np.cos(t) - q) / (1 - 2 * q * np.cos(t) + q * q)
    assert np.allclose(eval_kernel(KernelSpec(Geometric(q)), t), ref, atol=1e-12, rtol=0)


@given(st.sampled_from([Geometric(0.5), ExpPoly(1.0, 2.0), Power(3.0)]), st.floats(-2.0, 2.0),
       st.floats(-math.pi, math.pi))
def test_beta_has_period_four(psi, beta, t):
    v0 = eval_kernel(KernelSpec(psi, ConstantBeta(beta)), t, 1e-10)
    v4 = eval_kernel(KernelSpec(psi, ConstantBeta(beta + 4.0)), t, 1e-10)
    assert float(v0) == pytest.approx(float(v4), abs=1e-12)


def test_remainder_kernel_l2_values():
    assert remainder_kernel_l2(KernelSpec(Geometric(0.5)), 2) == pytest.approx(math.sqrt(math.pi / 12), rel=1e-13)
    assert remainder_kernel_l2(KernelSpec(Power(1.0)), 1) == pytest.approx(math.pi**1.5 / math.sqrt(6), rel=1e-12)
    vals = [remainder_kernel_l2(KernelSpec(Power(2.0)), n) for n in range(1, 40)]
    assert all(x > y for x, y in zip(vals, vals[1:]))


def test_psi_integral_examples():
    unit = TableWithTail((1.0,), 0.5)
    cos1 = TrigPolynomial.cos(1)
    assert psi_integral(cos1, KernelSpec(unit, ConstantBeta(0.0))).allclose(cos1, 1e-15)
    sin1 = TrigPolynomial.from_pairs(0.0, [(0.0, 1.0)])
    assert psi_integral(cos1, KernelSpec(unit, ConstantBeta(1.0))).allclose(sin1, 1e-15)
    assert psi_integral(TrigPolynomial.cos(2), KernelSpec(Power(2.0))).allclose(TrigPolynomial.cos(2, 0.25), 1e-15)


def test_psi_derivative_examples():
    unit = TableWithTail((1.0,), 0.5)
    cos1 = TrigPolynomial.cos(1)
    assert psi_derivative(cos1, KernelSpec(unit, ConstantBeta(0.0))).allclose(cos1, 1e-15)
    minus_sin = TrigPolynomial.from_pairs(0.0, [(0.0, -1.0)])
    assert psi_derivative(cos1, KernelSpec(unit, ConstantBeta(1.0))).allclose(minus_sin, 1e-15)
    assert psi_derivative(TrigPolynomial.cos(2), KernelSpec(Power(2.0))).allclose(TrigPolynomial.cos(2, 4.0), 1e-15)


def test_psi_integral_matches_convolution():
    # (1/pi) int phi(t - s) Psi(s) ds, trapezoid on a grid well above Nyquist
    spec = KernelSpec(Geometric(0.5), PeriodicBeta((0.0, 1.0, 2.5)))
    phi = TrigPolynomial.from_pairs(0.3, [(1.0, -0.5), (0.2, 0.7), (0.0, 0.4)])
    s = 2 * math.pi * np.arange(512) / 512
    kern = eval_kernel(spec, s)
    x = np.array([-1.0, 0.2, 2.5])
    conv = np.array([np.mean(phi(xi - s) * kern) * 2 for xi in x])
    expected = psi_integral(phi, spec)(x) - 0.5 * phi.a0
    assert np.allclose(conv, expected, atol=1e-12)


@given(polys(zero_a0=True), st.sampled_from(PSIS[:1] + PSIS[2:]), st.sampled_from(BETAS))
def test_round_trip(phi, psi, beta):
    spec = KernelSpec(psi, beta)
    back = psi_derivative(psi_integral(phi, spec), spec)
    assert back.allclose(phi, 1e-12)


def test_fourier_partial_sum():
    p = TrigPolynomial.from_pairs(0.0, [(1.0, 0.0), (0, 0), (0, 0), (0, 0), (1.0, 0.0)])
    assert fourier_partial_sum(p, 2).allclose(TrigPolynomial.cos(1), 0.0)
    q = TrigPolynomial.from_pairs(3.0, [(1.0, 2.0), (0.5, 0.1)])
    assert fourier_partial_sum(q, 1).allclose(TrigPolynomial(3.0, [], []), 0.0)
    assert fourier_partial_sum(q, 7).allclose(q, 0.0)
    with pytest.raises(ValueError):
        fourier_partial_sum(q, 0)


def test_sup_norm_examples():
    s = sup_norm(TrigPolynomial.cos(3))
    assert s.value == pytest.approx(1.0, abs=1e-15) and s.certified_lower == pytest.approx(1.0, abs=1e-15)
    assert sup_norm(TrigPolynomial(1.0, [], [])).value == 0.5
    s = sup_norm(TrigPolynomial.from_pairs(0.0, [(1.0, 0.0), (1.0, 0.0)]))
    assert s.value == pytest.approx(2.0, abs=1e-14)


@given(polys(max_degree=10))
def test_sup_norm_bracket(poly):
    s = sup_norm(poly)
    dense = float(np.max(np.abs(poly(np.linspace(-math.pi, math.pi, 20001)))))
    assert s.certified_lower <= s.value
    assert s.value >= dense - 1e-12
    assert s.value <= math.fsum([abs(poly.a0) / 2, *np.hypot(poly.a, poly.b)]) + 1e-12


def test_l2_norm_examples():
    assert l2_norm(TrigPolynomial.cos(1)) == pytest.approx(math.sqrt(math.pi), rel=1e-15)
    assert l2_norm(TrigPolynomial(2.0, [], [])) == pytest.approx(math.sqrt(2 * math.pi), rel=1e-15)
    p = TrigPolynomial.from_pairs(0.0, [(1.0, 0.0), (0.0, 1.0)])
    assert l2_norm(p) == pytest.approx(math.sqrt(2 * math.pi), rel=1e-15)


@given(polys())
def test_parseval_matches_trapezoid(poly):
    m = 64 * max(poly.degree, 1)
    t = -math.pi + 2 * math.pi * np.arange(m) / m
    quad = 2 * math.pi * math.fsum(poly(t) ** 2) / m
    norm2 = l2_norm(poly) ** 2
    assert quad == pytest.approx(norm2, rel=1e-10, abs=1e-300)
