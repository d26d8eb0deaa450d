"""Command-line entry point and suite runner.

Subcommands: verify, counterexample, sharpness, norms, list-checks.

A verify run writes ``<out>.jsonl`` (timestamp line, header line, one record
per cell, summary line) and ``<out>.csv`` (per-check aggregate).  Everything
after the timestamp line is a pure function of the resolved configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .bn_operator import BnParams
from .inequalities import CHECKS, HypothesisViolation, InstanceSpec, Status, \
    check_lemma, check_lemma5, counterexample_result, sharpness_scan
from .norms import NormOrder, QuadratureSettings, lp_norm
from .poly_core import DomainError, Polynomial
from .testgen import GeneratorConfig, make_abc, make_instance

CSV_COLUMNS = ("check_name", "trials", "pass", "equality", "fail", "uncertified",
               "rejected", "excluded", "worst_margin", "worst_relative_margin",
               "max_nodes")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    checks: tuple[str, ...] = ("theorem1",)
    trials: int = 100
    generator: GeneratorConfig = field(default_factory=GeneratorConfig)
    quadrature: QuadratureSettings = field(default_factory=QuadratureSettings)
    output_path: str | None = None
    fail_fast: bool = False
    uncertified_quota: int = 0
    workers: int = 1
    lemma5_gamma_nodes: int = 64
    counterexample: dict = field(default_factory=lambda: {
        "n": 4, "lambda": [[0.0, 0.0], [1.0, 0.0], [0.0, 0.0]], "R": 2.0})

    def __post_init__(self):
        if not self.checks:
            raise ConfigError("checks must be non-empty")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks: {unknown}; see list-checks")
        if int(self.trials) < 1:
            raise ConfigError("trials must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")

    def to_dict(self) -> dict:
        return {
            "checks": list(self.checks),
            "trials": self.trials,
            "generator": self.generator.to_dict(),
            "quadrature": asdict(self.quadrature),
            "fail_fast": self.fail_fast,
            "uncertified_quota": self.uncertified_quota,
            "lemma5_gamma_nodes": self.lemma5_gamma_nodes,
            "counterexample": self.counterexample,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteConfig":
        d = dict(d)
        try:
            if "generator" in d:
                d["generator"] = GeneratorConfig.from_dict(d["generator"])
            if "quadrature" in d:
                d["quadrature"] = QuadratureSettings(**d["quadrature"])
            if "checks" in d:
                d["checks"] = tuple(d["checks"])
            return cls(**d)
        except (TypeError, DomainError) as exc:
            raise ConfigError(str(exc)) from exc


def _counterexample_args(cfg: SuiteConfig) -> tuple[int, BnParams, float]:
    c = cfg.counterexample
    n = int(c["n"])
    params = BnParams.from_dict({"n": n, "lambda": c["lambda"]})
    return n, params, float(c["R"])


def evaluate_cell(cfg: SuiteConfig, check: str, index: int) -> dict:
    """Run one (check, index) cell and return its JSON record."""
    family, runner = CHECKS[check]
    q = cfg.quadrature
    g = cfg.generator
    excluded = False
    try:
        if check == "counterexample":
            res = counterexample_result(*_counterexample_args(cfg))
        elif check == "ABC":
            inst = InstanceSpec(seed=g.master_seed, index=index, family="scalars")
            res = check_lemma("ABC", inst, **make_abc(g, index))
        else:
            inst = make_instance(g, index, family)
            if check == "lemma5":
                res = check_lemma5(inst, cfg.lemma5_gamma_nodes, q)
            else:
                res = runner(inst, q)
            excluded = bool(res.details.get("negative_delta_scalar", False))
        rec = res.to_record()
        rec["check"] = check
    except HypothesisViolation as exc:
        inst = make_instance(g, index, family) if family not in ("scalars", "fixed") \
            else InstanceSpec(seed=g.master_seed, index=index)
        rec = {"check": check, "seed": inst.seed, "index": index, "lhs": None,
               "rhs": None, "margin": None, "status": "Rejected", "nodes": 0,
               "instance": inst.to_dict(), "reason": str(exc)}
    if excluded:
        rec["excluded"] = True
    return rec


def _cells(cfg: SuiteConfig):
    for check in cfg.checks:
        count = 1 if check == "counterexample" else cfg.trials
        for i in range(count):
            yield check, i


def _run_cell(args):
    return evaluate_cell(*args)


def run_cells(cfg: SuiteConfig) -> list[dict]:
    tasks = [(cfg, c, i) for c, i in _cells(cfg)]
    records = []
    if cfg.workers == 1:
        for t in tasks:
            rec = _run_cell(t)
            records.append(rec)
            if cfg.fail_fast and rec["status"] == Status.FAIL.value:
                break
        return records
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        # map yields in submission order, so aggregation stays deterministic
        for rec in pool.map(_run_cell, tasks, chunksize=8):
            records.append(rec)
            if cfg.fail_fast and rec["status"] == Status.FAIL.value:
                pool.shutdown(cancel_futures=True)
                break
    return records


def summarize(records: list[dict], checks) -> list[dict]:
    rows = []
    for check in checks:
        recs = [r for r in records if r["check"] == check]
        row = {k: 0 for k in CSV_COLUMNS}
        row["check_name"] = check
        row["trials"] = len(recs)
        worst = math.inf
        worst_rel = math.inf
        for r in recs:
            st = r["status"]
            if st == "Rejected":
                row["rejected"] += 1
                continue
            row["max_nodes"] = max(row["max_nodes"], r["nodes"])
            if r.get("excluded"):
                row["excluded"] += 1
                continue
            row[{"Pass": "pass", "Equality": "equality", "Fail": "fail",
                 "Uncertified": "uncertified"}[st]] += 1
            worst = min(worst, r["margin"])
            worst_rel = min(worst_rel, r["margin"] / max(abs(r["rhs"]), 1e-300))
        row["worst_margin"] = worst if math.isfinite(worst) else None
        row["worst_relative_margin"] = worst_rel if math.isfinite(worst_rel) else None
        rows.append(row)
    return rows


def exit_status(rows: list[dict], quota: int) -> int:
    fails = sum(r["fail"] for r in rows)
    unc = sum(r["uncertified"] for r in rows)
    return 0 if fails == 0 and unc <= quota else 1


def render_jsonl_body(cfg: SuiteConfig, records: list[dict], rows: list[dict]) -> str:
    out = io.StringIO()
    header = {"artifact": "bnverify", "version": __version__, "config": cfg.to_dict()}
    out.write(json.dumps({"header": header}, sort_keys=True) + "\n")
    for r in records:
        out.write(json.dumps(r, sort_keys=True) + "\n")
    out.write(json.dumps({"summary": rows}, sort_keys=True) + "\n")
    return out.getvalue()


def render_csv(rows: list[dict]) -> str:
    out = io.StringIO()
    w = csv.DictWriter(out, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return out.getvalue()


@dataclass
class SuiteOutcome:
    status: int
    records: list
    rows: list
    jsonl_body: str
    csv_text: str


def run_suite(cfg: SuiteConfig) -> SuiteOutcome:
    records = run_cells(cfg)
    rows = summarize(records, cfg.checks)
    body = render_jsonl_body(cfg, records, rows)
    text = render_csv(rows)
    if cfg.output_path:
        base = Path(cfg.output_path)
        if base.suffix in (".jsonl", ".csv"):
            base = base.with_suffix("")
        base.parent.mkdir(parents=True, exist_ok=True)
        stamp = json.dumps({"timestamp": datetime.now(timezone.utc).isoformat()})
        base.with_suffix(".jsonl").write_text(stamp + "\n" + body)
        base.with_suffix(".csv").write_text(text)
    return SuiteOutcome(exit_status(rows, cfg.uncertified_quota), records, rows, body, text)


# -- argument handling ----------------------------------------------------------

def _complex_list(text: str) -> list[complex]:
    try:
        return [complex(s.strip().replace(" ", "")) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad complex list {text!r}") from exc


def _params(lams: list[complex], n: int) -> BnParams:
    if len(lams) != 3:
        raise argparse.ArgumentTypeError("--lambda takes exactly three values")
    return BnParams(*lams, n)


def _resolve_config(args) -> SuiteConfig:
    data = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc}") from exc
    cfg = SuiteConfig.from_dict(data)
    over = {}
    if args.checks is not None:
        over["checks"] = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    if args.trials is not None:
        over["trials"] = args.trials
    if args.out is not None:
        over["output_path"] = args.out
    if args.fail_fast:
        over["fail_fast"] = True
    if args.workers is not None:
        over["workers"] = args.workers
    if args.quota is not None:
        over["uncertified_quota"] = args.quota
    if args.seed is not None:
        over["generator"] = replace(cfg.generator, master_seed=args.seed)
    if over:
        try:
            cfg = replace(cfg, **over)
        except DomainError as exc:
            raise ConfigError(str(exc)) from exc
    return cfg


def cmd_verify(args) -> int:
    try:
        cfg = _resolve_config(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        outcome = run_suite(cfg)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(outcome.jsonl_body if args.format == "jsonl" else outcome.csv_text)
    return outcome.status


def cmd_counterexample(args) -> int:
    from .inequalities import reproduce_counterexample

    rep = reproduce_counterexample(args.n, _params(args.lam, args.n), args.R)
    print(json.dumps(rep.to_dict(), indent=2))
    return 0 if rep.holds else 1


def cmd_sharpness(args) -> int:
    params = _params(args.lam, args.n)
    rep = sharpness_scan(params, args.R, args.p, args.phases)
    print(json.dumps({"max_gap": rep.max_gap,
                      "by_p": {str(k): v for k, v in rep.by_p.items()}}, indent=2))
    return 0 if rep.max_gap <= args.threshold else 1


def cmd_norms(args) -> int:
    P = Polynomial(args.coeffs, args.n)
    out = {}
    for p in args.p:
        res = lp_norm(P, NormOrder.parse(p))
        out[str(p)] = {"value": res.value, "nodes": res.nodes,
                       "certified": res.certified, "method": res.method}
    print(json.dumps({"poly": P.to_dict(), "norms": out}, indent=2))
    return 0


def cmd_list_checks(args) -> int:
    for name, (family, _) in CHECKS.items():
        print(f"{name}\t{family}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bnverify",
                                 description="Verify Lp inequalities for B_n-operators.")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a seeded check suite")
    v.add_argument("--config", help="JSON suite config; flags override its fields")
    v.add_argument("--seed", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--checks", help="comma-separated check names")
    v.add_argument("--out", help="output base path (writes .jsonl and .csv)")
    v.add_argument("--format", choices=("jsonl", "csv"), default="csv",
                   help="what to print on stdout")
    v.add_argument("--fail-fast", action="store_true")
    v.add_argument("--workers", type=int)
    v.add_argument("--quota", type=int, help="tolerated Uncertified results")
    v.set_defaults(func=cmd_verify)

    lam = dict(dest="lam", type=_complex_list, default=_complex_list("0,1,0"),
               help="l0,l1,l2 as Python complex literals")
    c = sub.add_parser("counterexample", help="P = z^n: star/composite moduli")
    c.add_argument("--n", type=int, default=4)
    c.add_argument("--lambda", **lam)
    c.add_argument("--R", type=float, default=2.0)
    c.set_defaults(func=cmd_counterexample)

    s = sub.add_parser("sharpness", help="equality gap over a z^n + b")
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--lambda", **lam)
    s.add_argument("--R", type=float, default=2.0)
    s.add_argument("--p", type=lambda t: [x.strip() for x in t.split(",")],
                   default=["0.5", "1", "2"])
    s.add_argument("--phases", type=int, default=16)
    s.add_argument("--threshold", type=float, default=1e-6)
    s.set_defaults(func=cmd_sharpness)

    nm = sub.add_parser("norms", help="circle norms of one polynomial")
    nm.add_argument("--coeffs", type=_complex_list, required=True,
                    help="ascending coefficients, e.g. '1,1' for 1 + z")
    nm.add_argument("--n", type=int, default=None, help="degree bound")
    nm.add_argument("--p", type=lambda t: [x.strip() for x in t.split(",")],
                    default=["0", "0.5", "1", "2", "4", "inf"])
    nm.set_defaults(func=cmd_norms)

    lc = sub.add_parser("list-checks", help="registered check names")
    lc.set_defaults(func=cmd_list_checks)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
