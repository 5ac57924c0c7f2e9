"""Command line: width bound tables, kernel samples, deviations and verification.

    widthlab bounds --psi '{"family":"geometric","q":0.5}' --n 1..4
    widthlab deviation --psi '{"family":"power","r":1}' --n 1..1
    widthlab kernel --psi '{"family":"geometric","q":0.5}' --t 0 --t-count 1
    widthlab verify --suite all --seed 42

Exit codes: 0 success, 2 invalid configuration, 3 precondition violation,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, field, fields
from typing import Any, Optional, Sequence

from . import verify as vf
from . import width_bounds as wb
from .psi_seq import DEFAULT_TOL, ExpPoly, Power, PsiSequence, psi_from_json
from .trig_core import (
    BetaSequence, ConstantBeta, KernelSpec, PeriodicBeta, beta_from_json, eval_kernel,
)

EXIT_OK, EXIT_CONFIG, EXIT_PRECONDITION, EXIT_VERIFY = 0, 2, 3, 4
NA = "n/a(precondition)"
BOUNDS_COLUMNS = ["n", "N_even", "N_odd", "lower", "leading", "upper", "gauge_head", "gauge_tail"]
SUITES = ("all", "deviation", "embedding", "coefficients", "bounds", "trend", "beta")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    psi: Optional[dict] = None
    beta: dict = field(default_factory=lambda: {"mode": "constant", "beta": 0.0})
    n_range: tuple[int, int] = (1, 8)
    tol: float = DEFAULT_TOL
    seed: int = 0
    output: str = "csv"
    out_path: Optional[str] = None
    suite: str = "all"
    samples: int = 1000
    t: float = -math.pi
    t_count: int = 64

    def validate(self):
        if self.command not in ("bounds", "verify", "kernel", "deviation"):
            raise ConfigError(f"unknown command {self.command!r}")
        lo, hi = self.n_range
        if lo < 1 or hi < lo:
            raise ConfigError(f"n range must be nonempty and start at >= 1, got {lo}..{hi}")
        if not self.tol > 0:
            raise ConfigError("tol must be positive")
        if self.output not in ("csv", "json"):
            raise ConfigError(f"output must be csv or json, got {self.output!r}")
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}")
        if self.samples < 1 or self.t_count < 1:
            raise ConfigError("samples and t-count must be positive")
        needs_psi = self.command != "verify" or self.suite != "all"
        if needs_psi and self.psi is None:
            raise ConfigError("--psi is required")

    def psi_seq(self) -> PsiSequence:
        if self.psi is None:
            raise ConfigError("--psi is required for this suite")
        try:
            return psi_from_json(self.psi)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc

    def beta_seq(self) -> BetaSequence:
        try:
            return beta_from_json(self.beta)
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc


def parse_n_range(text: Any) -> tuple[int, int]:
    if isinstance(text, (list, tuple)) and len(text) == 2:
        return int(text[0]), int(text[1])
    s = str(text)
    try:
        if ".." in s:
            lo, hi = s.split("..", 1)
            return int(lo), int(hi)
        return int(s), int(s)
    except ValueError as exc:
        raise ConfigError(f"bad n range {text!r}; expected like 1..8") from exc


def _json_arg(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"--{what} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ConfigError(f"--{what} must be a JSON object")
    return obj


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

def _fmt_csv(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return format(v, ".10g")
    return "" if v is None else str(v)


def dump_json(v: Any, indent: int = 0) -> str:
    """JSON text with floats written to 17 significant digits; non-finite floats become null."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return json.dumps(v)
    if isinstance(v, float):
        return format(v, ".17g") if math.isfinite(v) else "null"
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dump_json(x, indent + 1)}" for k, x in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(v, (list, tuple)):
        if not v:
            return "[]"
        items = [inner + dump_json(x, indent + 1) for x in v]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    return dump_json(float(v), indent)


def render(rows: list[dict[str, Any]], columns: Sequence[str], output: str) -> str:
    if output == "json":
        return dump_json([{c: r[c] for c in columns} for r in rows]) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([_fmt_csv(r[c]) for c in columns])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_bounds(cfg: RunConfig) -> tuple[int, str]:
    psi, beta = cfg.psi_seq(), cfg.beta_seq()
    lo, hi = cfg.n_range
    columns = list(BOUNDS_COLUMNS)
    special = None
    if isinstance(beta, ConstantBeta) and isinstance(psi, Power):
        special = "wn"
        columns += ["wn_lower", "wn_upper"]
    elif isinstance(beta, ConstantBeta) and isinstance(psi, ExpPoly):
        special = "po"
        columns += ["po_lower", "po_upper", "po_gamma"]
    rows, violated = [], 0
    for n in range(lo, hi + 1):
        row = wb.bounds_report(psi, beta, n, cfg.tol).row()
        try:
            if special == "wn":
                w = wb.weyl_nagy_report(psi.r, n)
                row.update(wn_lower=w.lower, wn_upper=w.upper)
            elif special == "po":
                p = wb.poisson_report(psi.alpha, psi.r, n)
                row.update(po_lower=p.lower, po_upper=p.upper, po_gamma=p.gamma)
        except wb.PreconditionError:
            violated += 1
            row.update({c: NA for c in columns[len(BOUNDS_COLUMNS):]})
        rows.append(row)
    code = EXIT_PRECONDITION if special and violated == len(rows) else EXIT_OK
    return code, render(rows, columns, cfg.output)


def cmd_deviation(cfg: RunConfig) -> tuple[int, str]:
    psi = cfg.psi_seq()
    lo, hi = cfg.n_range
    rows = [{"n": n, "deviation": wb.exact_fourier_deviation(psi, n, cfg.tol)} for n in range(lo, hi + 1)]
    return EXIT_OK, render(rows, ["n", "deviation"], cfg.output)


def cmd_kernel(cfg: RunConfig) -> tuple[int, str]:
    spec = KernelSpec(cfg.psi_seq(), cfg.beta_seq())
    if not spec.psi.pointwise_summable():
        raise wb.PreconditionError(f"{spec.psi.label()} is not absolutely summable; no pointwise kernel values")
    import numpy as np
    t = cfg.t + (2.0 * math.pi / cfg.t_count) * np.arange(cfg.t_count)
    try:
        values = eval_kernel(spec, t, cfg.tol)
    except ValueError as exc:
        raise wb.PreconditionError(str(exc)) from exc
    rows = [{"t": float(a), "kernel": float(b)} for a, b in zip(t, values)]
    return EXIT_OK, render(rows, ["t", "kernel"], cfg.output)


def _verify_reports(cfg: RunConfig) -> list[vf.VerificationReport]:
    if cfg.suite == "all" and cfg.psi is None:
        return vf.default_suite(cfg.seed, cfg.samples)
    psi, beta = cfg.psi_seq(), cfg.beta_seq()
    lo, hi = cfg.n_range
    ns = range(lo, hi + 1)
    suites = ("deviation", "embedding", "coefficients", "bounds", "trend", "beta") if cfg.suite == "all" else (cfg.suite,)
    reports: list[vf.VerificationReport] = []
    betas = [ConstantBeta(0.0), ConstantBeta(1.0), ConstantBeta(2.5), PeriodicBeta((0.0, 1.0))]
    for suite in suites:
        if suite == "deviation":
            reports += [vf.deviation_oracle(KernelSpec(psi, beta), n, seed=cfg.seed) for n in ns]
        elif suite == "embedding":
            reports += [vf.embedding_check(psi, beta, n, cfg.samples, cfg.seed) for n in ns]
            reports.append(vf.embedding_witness(psi, beta))
        elif suite == "coefficients":
            reports.append(vf.random_coefficient_check(cfg.samples, seed=cfg.seed))
        elif suite == "bounds":
            reports += [vf.sandwich_check(psi, n) for n in ns]
            for n in ns:
                try:
                    reports.append(vf.containment_check(psi, n))
                except wb.PreconditionError:
                    pass
            reports += vf.bound_vs_bruteforce_suite()
        elif suite == "trend":
            reports.append(vf.trend_check(psi, max(hi, 3)))
        elif suite == "beta":
            reports += [vf.beta_invariance_check(psi, n, betas, seed=cfg.seed) for n in ns]
            reports.append(vf.bounds_identity_check(psi, ns, betas))
    return reports


VERIFY_COLUMNS = ["check_id", "analytic", "oracle", "margin", "tolerance", "pass", "expected_fail", "seed"]


def cmd_verify(cfg: RunConfig, err=None) -> tuple[int, str]:
    err = sys.stderr if err is None else err
    try:
        reports = _verify_reports(cfg)
    except ValueError as exc:
        if isinstance(exc, (ConfigError, wb.PreconditionError)):
            raise
        raise wb.PreconditionError(str(exc)) from exc
    for r in reports:
        print(r.summary_line(), file=err)
    if cfg.output == "json":
        text = dump_json([r.to_json() for r in reports]) + "\n"
    else:
        rows = [dict(r.to_json(), check_id=r.check_id) for r in reports]
        text = render(rows, VERIFY_COLUMNS, "csv")
    code = EXIT_VERIFY if any(r.counts_as_failure for r in reports) else EXIT_OK
    return code, text


COMMANDS = {"bounds": cmd_bounds, "deviation": cmd_deviation, "kernel": cmd_kernel, "verify": cmd_verify}


# ---------------------------------------------------------------------------
# argument handling
# ---------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_CONFIG)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="widthlab", description="Width bounds for convolution classes in the uniform norm.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_text in [("bounds", "two-sided width bounds per n"),
                            ("verify", "run verification suites"),
                            ("kernel", "sample the kernel on a uniform grid"),
                            ("deviation", "exact deviation of Fourier sums per n")]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--psi", help="psi sequence as JSON")
        p.add_argument("--beta", help="beta sequence as JSON (default constant 0)")
        p.add_argument("--n", dest="n_range", help="inclusive range, e.g. 1..8")
        p.add_argument("--tol", type=float)
        p.add_argument("--seed", type=int)
        p.add_argument("--format", dest="output", choices=["csv", "json"])
        p.add_argument("--out", dest="out_path")
        p.add_argument("--config", help="JSON RunConfig file; its values override flags")
        if name == "verify":
            p.add_argument("--suite", choices=SUITES)
            p.add_argument("--samples", type=int)
        if name == "kernel":
            p.add_argument("--t", type=float, help="first grid point (default -pi)")
            p.add_argument("--t-count", dest="t_count", type=int, help="number of grid points")
    return parser


def config_from_args(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    cfg = RunConfig(command=args.command)
    env_seed = environ.get("WIDTHLAB_SEED")
    if env_seed is not None:
        try:
            cfg.seed = int(env_seed)
        except ValueError as exc:
            raise ConfigError(f"WIDTHLAB_SEED must be an integer, got {env_seed!r}") from exc
    if args.psi is not None:
        cfg.psi = _json_arg(args.psi, "psi")
    if args.beta is not None:
        cfg.beta = _json_arg(args.beta, "beta")
    if args.n_range is not None:
        cfg.n_range = parse_n_range(args.n_range)
    for name in ("tol", "seed", "output", "out_path", "suite", "samples", "t", "t_count"):
        val = getattr(args, name, None)
        if val is not None:
            setattr(cfg, name, val)
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                overrides = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
        apply_overrides(cfg, overrides)
    cfg.validate()
    return cfg


def apply_overrides(cfg: RunConfig, overrides: dict[str, Any]):
    known = {f.name for f in fields(RunConfig)}
    for key, val in overrides.items():
        if key == "class_spec":
            cfg.psi = val.get("psi", cfg.psi)
            cfg.beta = val.get("beta", cfg.beta)
        elif key == "n_range":
            cfg.n_range = parse_n_range(val)
        elif key in known:
            setattr(cfg, key, val)
        else:
            raise ConfigError(f"unknown config key {key!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        code, text = COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"widthlab: invalid configuration: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except wb.PreconditionError as exc:
        print(f"widthlab: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    if cfg.out_path:
        with open(cfg.out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
