"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line."""

import json
import math
import time
from pathlib import Path

import pytest

from widthlab import cli
from widthlab import verify as vf
from widthlab import width_bounds as wb
from widthlab.psi_seq import ExpPoly, Geometric, Power
from widthlab.trig_core import ConstantBeta, KernelSpec, ListBeta, PeriodicBeta, TrigPolynomial

GRID = [Geometric(0.3), Geometric(0.5), ExpPoly(0.5, 1.5), ExpPoly(1.0, 2.0), ExpPoly(2.0, 3.0),
        Power(2.0), Power(3.0), Power(5.0)]
NS = range(1, 7)
BETAS = [ConstantBeta(0.0), ConstantBeta(1.0), ConstantBeta(2.5), PeriodicBeta((0.0, 1.0))]
SEED = 20240601
GOLDEN = Path(__file__).parent / "golden"

# worked points, (analytic, oracle, margin) from mpmath at 40 digits
WORKED = {
    "bound/exp_series_tail/alpha=1,r=2,n=2": (4.193282848781398e-4, 1.2352235314957463e-4, 2.9580593172856517e-4),
    "bound/exp_series_tail/alpha=1,r=2,n=3": (3.5688604058546342e-7, 1.1254906289507689e-7, 2.4433697769038653e-7),
    "bound/power_tail/r=2,n=3": (9.1145833333333333e-3, 7.4775546987925125e-3, 1.6370286345408208e-3),
    "bound/power_head/r=2,n=3": (145.0, 115.0, 30.0),
    "bound/exp_integral/alpha=1,r=2,n=3": (799.83764679357631, 400.65554494292415, 399.18210185065216),
    "bound/poisson_head/alpha=1,r=2,n=3": (4.2547249723146801e-4, 4.5512464937204111e-5, 3.799600322942639e-4),
}


def sig3(x: float) -> str:
    return f"{x:.3g}"


def test_criterion_1_deviation_oracle(acceptance):
    start = time.perf_counter()
    worst, failures = 0.0, []
    for psi in GRID:
        for n in NS:
            r = vf.deviation_oracle(KernelSpec(psi, ConstantBeta(0.0)), n, tol=1e-6, seed=SEED)
            worst = max(worst, r.details["rel_error"])
            if not (r.passed and r.details["rel_error"] <= 1e-6):
                failures.append(r.check_id)
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 60.0
    acceptance(1, ok, f"48 deviation oracles, worst rel error {worst:.2e} (<= 1e-6), {elapsed:.1f}s (<= 60s)")
    assert not failures, failures
    assert elapsed <= 60.0


def test_criterion_2_sandwich_and_asymptotics(acceptance):
    failures = [f"{psi.label()} n={n}" for psi in GRID for n in NS if not vf.sandwich_check(psi, n).passed]
    psi = ExpPoly(1.0, 2.0)
    isp = 1 / math.sqrt(math.pi)
    worst = 0.0
    for n in range(4, 41):
        lp = float(psi.log_psi(n))
        for lb in (wb.log_lower_bound(psi, n), wb.log_upper_bound(psi, n)):
            worst = max(worst, abs(math.exp(lb - lp) - isp))
    ok = not failures and worst <= 1e-3
    acceptance(2, ok, f"sandwich on 48 grid points, exp_poly(1,2) n=4..40 ratio gap {worst:.2e} (<= 1e-3)")
    assert not failures, failures
    assert worst <= 1e-3


def test_criterion_3_embedding(acceptance):
    worst, failures = 0.0, []
    for psi in GRID:
        for i, n in enumerate(range(1, 5)):
            r = vf.embedding_check(psi, BETAS[i], n, samples=1000, seed=SEED)
            worst = max(worst, r.oracle)
            if not r.passed:
                failures.append(r.check_id)
    wit = max(abs(vf.embedding_witness(psi, b).oracle - 1.0) for psi in GRID for b in BETAS)
    ok = not failures and worst <= 1 + 1e-9 and wit <= 1e-12
    acceptance(3, ok, f"32 x 1000 samples, max norm {worst:.12f} (<= 1+1e-9), witness gap {wit:.1e} (<= 1e-12)")
    assert not failures, failures
    assert wit <= 1e-12


def test_criterion_4_proof_inequalities(acceptance):
    reports = vf.bound_vs_bruteforce_suite()
    per_eq: dict[str, int] = {}
    failures = []
    for r in reports:
        per_eq[r.inputs["equation"]] = per_eq.get(r.inputs["equation"], 0) + r.passed
        if not r.passed:
            failures.append(r.check_id)
    by_id = {r.check_id: r for r in reports}
    mismatched = []
    for cid, expected in WORKED.items():
        r = by_id[cid]
        got = (r.analytic, r.oracle, r.margin)
        if [sig3(x) for x in got] != [sig3(x) for x in expected]:
            mismatched.append((cid, got, expected))
    ok = not failures and not mismatched and min(per_eq.values()) >= 5 and len(per_eq) == 5
    acceptance(4, ok, f"{len(reports)} bound checks, >= {min(per_eq.values())} per inequality, "
                      f"{len(WORKED)} worked margins to 3 sig. digits")
    assert not failures, failures
    assert not mismatched, mismatched
    assert min(per_eq.values()) >= 5


def test_criterion_5_containment(acceptance):
    checked, failures = 0, []
    for psi in GRID:
        for n in NS:
            try:
                r = vf.containment_check(psi, n, slack=1e-12)
            except wb.PreconditionError:
                continue
            checked += 1
            if not r.passed:
                failures.append(r.check_id)
    ok = checked > 0 and not failures
    acceptance(5, ok, f"{checked} hypothesis-satisfying points bracketed within 1e-12 relative slack")
    assert checked > 0 and not failures, failures


def test_criterion_6_coefficient_inequalities(acceptance):
    r = vf.random_coefficient_check(samples=1000, max_degree=8, seed=SEED)
    eq_gap = 0.0
    for n in range(1, 9):
        c = vf.coefficient_inequality_check(TrigPolynomial.cos(n), f"coefficients/cos{n}x")
        eq_gap = max(eq_gap, abs(c.details["top_harmonic"]), abs(c.details["tau_norm_minus_one"]))
    ok = r.passed and r.margin >= -1e-9 and eq_gap <= 1e-12
    acceptance(6, ok, f"1000 random polynomials, worst margin {r.margin:.2e} (>= -1e-9), "
                      f"cos nx equality gap {eq_gap:.1e} (<= 1e-12)")
    assert r.passed
    assert eq_gap <= 1e-12


def test_criterion_7_beta_invariance(acceptance):
    all_betas = BETAS + [ListBeta((0.5, 3.0, 1.0), 2.0)]
    identical = all(vf.bounds_identity_check(psi, NS, all_betas).passed for psi in GRID)
    spread, failures = 0.0, []
    for psi in GRID:
        for n in NS:
            r = vf.beta_invariance_check(psi, n, BETAS, tol=1e-6, seed=SEED)
            spread = max(spread, r.details["spread"])
            if not r.passed:
                failures.append(r.check_id)
    ok = identical and not failures
    acceptance(7, ok, f"bounds byte-identical across 5 beta modes: {identical}; "
                      f"oracle spread {spread:.2e} (<= 1e-6) over 48 points")
    assert identical
    assert not failures, failures


def _exit_code(argv):
    try:
        return cli.main(argv)
    except SystemExit as exc:
        return exc.code


def test_criterion_8_cli_golden_and_exit_codes(acceptance, tmp_path, capsys, monkeypatch):
    mismatched = []
    configs = sorted((GOLDEN / "configs").glob("*.json"))
    for config in configs:
        spec = json.loads(config.read_text())
        out = tmp_path / config.stem
        code = cli.main([spec["command"], "--config", str(config), "--out", str(out)])
        if code != 0 or out.read_bytes() != (GOLDEN / f"{config.stem}.{spec['output']}").read_bytes():
            mismatched.append(config.stem)
    failing = vf.VerificationReport("forced", {}, 0.0, 1.0, -1.0, 0.0, False)
    codes = {
        0: _exit_code(["deviation", "--psi", '{"family":"power","r":1}', "--n", "1..1"]),
        2: _exit_code(["bounds", "--psi", '{"family":"power","r":0.4}']),
        3: _exit_code(["kernel", "--psi", '{"family":"power","r":1}']),
    }
    codes["0 (negative control)"] = _exit_code(["verify", "--suite", "trend", "--psi", '{"family":"geometric","q":0.5}'])
    monkeypatch.setattr(vf, "trend_check", lambda psi, n_max: failing)
    codes[4] = _exit_code(["verify", "--suite", "trend", "--psi", '{"family":"geometric","q":0.5}'])
    capsys.readouterr()
    wrong = {k: v for k, v in codes.items() if v != (k if isinstance(k, int) else 0)}
    ok = not mismatched and not wrong and len(configs) >= 2
    acceptance(8, ok, f"{len(configs)} golden files byte-identical, exit codes 0/2/3/4 as contracted")
    assert not mismatched, mismatched
    assert not wrong, wrong
