"""Command-line front end: compute invariants, run the oracle, characterize.

Exit codes: 0 success, 1 invariant/comparison failure, 2 configuration error.
All emitted JSON/CSV carries big integers as decimal strings and deterministic
key ordering, so outputs are usable as golden files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import oracle, primegraph, sympl
from .arith import divisibility_predicates, search_catalan
from .characterize import (
    CONFIRMING,
    NEEDS_MANUAL_LEMMA,
    OUTCOME_HYPOTHESES_NOT_MET,
    OUTCOME_ISOMORPHIC,
    characterize,
    verdict_json,
)

__all__ = ["RunConfig", "build_parser", "run", "main"]

DEFAULT_MAX_ENUM = 2_000_000


@dataclass
class RunConfig:
    command: str
    q: int | None = None
    order: str | None = None
    nse_path: str | None = None
    format: str = "json"
    output_path: str | None = None
    compare: bool = False
    example_84: bool = False
    bound: int = 1_000_000
    max_enum: int = DEFAULT_MAX_ENUM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psp4nse",
        description="Exact invariants and characterization of PSp4(q), q = 2^f > 2",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="write class table, nse table, spectrum, prime graph")
    p_compute.add_argument("--q", type=int, required=True, help="q = 2^f > 2")
    p_compute.add_argument("--format", choices=("json", "csv"), default="json",
                           help="format of the summary printed to stdout")
    p_compute.add_argument("--out", default=".", help="output directory")

    p_oracle = sub.add_parser("oracle", help="enumerate Sp4(q) by brute force")
    p_oracle.add_argument("--q", type=int, help="q = 2^f > 2 (enumeration feasible at q=4)")
    p_oracle.add_argument("--compare", action="store_true",
                          help="exit nonzero on any mismatch against the closed forms")
    p_oracle.add_argument("--example-84", action="store_true",
                          help="run the two order-84 groups with equal nse but different type")
    p_oracle.add_argument("--out", default=".", help="output directory")

    p_char = sub.add_parser("characterize", help="decide PSp4(q) from an order and an nse set")
    p_char.add_argument("--order", required=True, help="group order (decimal string)")
    p_char.add_argument("--nse-file", required=True,
                        help="JSON file: array of decimal strings, or an nse-table object")
    p_char.add_argument("--out", default=None, help="verdict output path (default stdout)")

    p_cat = sub.add_parser("catalan", help="classify solutions of p^m = q^n + 1")
    p_cat.add_argument("--bound", type=int, default=1_000_000, help="search bound on p^m")
    p_cat.add_argument("--out", default=None, help="output path (default stdout)")

    sub.add_parser("selftest", help="run the closed-form invariant suite at q = 4 and 8")
    return parser


def config_from_args(argv: list[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command)
    cfg.max_enum = int(os.environ.get("NSE_MAX_ENUM", DEFAULT_MAX_ENUM))
    if args.command == "compute":
        cfg.q = args.q
        cfg.format = args.format
        cfg.output_path = args.out
    elif args.command == "oracle":
        cfg.q = args.q
        cfg.compare = args.compare
        cfg.example_84 = args.example_84
        cfg.output_path = args.out
    elif args.command == "characterize":
        cfg.order = args.order
        cfg.nse_path = args.nse_file
        cfg.output_path = args.out
    elif args.command == "catalan":
        cfg.bound = args.bound
        cfg.output_path = args.out
    return cfg


def _write_json(path: Path, obj) -> None:
    path.write_text(json.dumps(obj, indent=2) + "\n", encoding="utf-8")


def _cmd_compute(cfg: RunConfig) -> int:
    q = cfg.q
    sympl.validate_q(q)
    out = Path(cfg.output_path or ".")
    out.mkdir(parents=True, exist_ok=True)

    table = sympl.nse_table(q)
    nse_obj = sympl.nse_table_json(table)
    _write_json(out / f"nse_q{q}.json", nse_obj)

    rows = sympl.class_table(q)
    (out / f"classes_q{q}.csv").write_text(sympl.class_table_csv(rows), encoding="utf-8")

    spec = sympl.spectrum(q)
    _write_json(out / f"spectrum_q{q}.json", {
        "q": q,
        "order": str(table.order),
        "spectrum": [str(r) for r in spec],
    })

    graph = primegraph.build_graph(set(spec), table.order)
    _write_json(out / f"prime_graph_q{q}.json", primegraph.graph_json(graph))

    if cfg.format == "csv":
        sys.stdout.write(sympl.class_table_csv(rows))
    else:
        json.dump(nse_obj, sys.stdout, indent=2)
        sys.stdout.write("\n")
    print(f"wrote nse, classes, spectrum, prime graph for q={q} to {out}", file=sys.stderr)
    return 0


def _cmd_oracle(cfg: RunConfig) -> int:
    out = Path(cfg.output_path or ".")
    out.mkdir(parents=True, exist_ok=True)
    status = 0
    if cfg.example_84:
        specs = {
            "Z4x(Z7:Z3)": oracle.z4_times_z7_z3(),
            "Z3x(Z7:Z4)": oracle.z3_times_z7_z4(),
        }
        report = {}
        for name, spec in specs.items():
            hist = oracle.perm_nse(spec)
            report[name] = {
                "order": str(hist.total()),
                "nse": [str(v) for v in sorted(hist.nse())],
                "counts": {str(k): str(v) for k, v in sorted(hist.counts.items())},
                "G_3": str(hist.power_count(3)),
                "has_order_28": hist[28] > 0,
            }
        _write_json(out / "example_84.json", report)
        ok = (
            report["Z4x(Z7:Z3)"]["nse"] == [str(v) for v in (1, 2, 6, 12, 14, 28)]
            and report["Z3x(Z7:Z4)"]["nse"] == [str(v) for v in (1, 2, 6, 12, 14, 28)]
            and report["Z4x(Z7:Z3)"]["G_3"] == "15"
            and report["Z3x(Z7:Z4)"]["G_3"] == "3"
            and report["Z4x(Z7:Z3)"]["has_order_28"]
            and not report["Z3x(Z7:Z4)"]["has_order_28"]
        )
        print(f"example-84: nse match={ok}")
        status = max(status, 0 if ok else 1)
        if cfg.q is None:
            return status

    if cfg.q is None:
        print("oracle: nothing to do (give --q and/or --example-84)", file=sys.stderr)
        return 2
    q = cfg.q
    sympl.validate_q(q)
    group = oracle.sp4_group(q, cap=cfg.max_enum)
    hist = oracle.order_histogram(group)
    _write_json(out / f"histogram_q{q}.json", {
        "q": q,
        "order": str(hist.total()),
        "counts": {str(k): str(v) for k, v in sorted(hist.counts.items())},
    })
    print(f"enumerated {len(group)} elements of Sp4({q})")
    if cfg.compare:
        table = sympl.nse_table(q)
        mismatches = []
        if hist.total() != table.order:
            mismatches.append(f"size {hist.total()} != {table.order}")
        if dict(hist.counts) != table.counts:
            mismatches.append("order histogram differs from the closed forms")
        if mismatches:
            print("compare: FAIL: " + "; ".join(mismatches))
            return 1
        print("compare: OK (histogram equals the closed-form table)")
    return status


def _cmd_characterize(cfg: RunConfig) -> int:
    order = int(cfg.order)
    raw = json.loads(Path(cfg.nse_path).read_text(encoding="utf-8"))
    if isinstance(raw, dict) and "counts" in raw:
        nse = {int(v) for v in raw["counts"].values()}
    elif isinstance(raw, list):
        nse = {int(v) for v in raw}
    else:
        raise ValueError("nse file must be a JSON array or an nse-table object")
    verdict = characterize(order, nse)
    payload = verdict_json(verdict)
    if cfg.output_path:
        _write_json(Path(cfg.output_path), payload)
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    print(f"outcome: {verdict.outcome}" + (f" (q={verdict.q})" if verdict.q else ""),
          file=sys.stderr)
    return 0


def _cmd_catalan(cfg: RunConfig) -> int:
    sols = search_catalan(cfg.bound)
    payload = [
        {"p": str(s.p), "q": str(s.q), "m": s.m, "n": s.n, "kind": s.kind,
         "value": str(s.value)}
        for s in sols
    ]
    if cfg.output_path:
        _write_json(Path(cfg.output_path), payload)
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    return 0


def _selftest_checks(q: int):
    yield (f"q={q} partition: counts sum to |G|",
           sum(sympl.nse_table(q).counts.values()) == sympl.group_order(q))
    by_order: dict[int, int] = {}
    for row in sympl.class_table(q):
        by_order[row.rep_order] = by_order.get(row.rep_order, 0) + row.class_length
    yield (f"q={q} class table reproduces every same-order count",
           by_order == sympl.nse_table(q).counts)
    counts_ok = all(
        sum(1 for r in sympl.class_table(q) if r.family == famname)
        == sympl.family_class_count(q, famname)
        for famname in sympl.CLASS_FAMILIES
    )
    yield (f"q={q} class counts match the count polynomials", counts_ok)
    graph = primegraph.build_graph(set(sympl.spectrum(q)), sympl.group_order(q))
    yield (f"q={q} prime graph has two components", len(graph.components) == 2)
    yield (f"q={q} odd/even prime sets separated", primegraph.separation_check(q))
    verdict = characterize(sympl.group_order(q), sympl.nse_set(q))
    yield (f"q={q} characterize returns Isomorphic", verdict.outcome == OUTCOME_ISOMORPHIC)
    confirming = {e.case for e in verdict.trace.entries if e.status == CONFIRMING}
    yield (f"q={q} confirming branches are PSL2(q^2) and PSp4(q)",
           confirming == {"PSL2(q^2)", "PSp4(q)"})
    yield (f"q={q} no unresolved elimination cases",
           not verdict.trace.by_status(NEEDS_MANUAL_LEMMA))
    bad = characterize(sympl.group_order(q), sympl.nse_set(q) | {7})
    yield (f"q={q} perturbed nse set is rejected",
           bad.outcome == OUTCOME_HYPOTHESES_NOT_MET)


def _cmd_selftest() -> int:
    failures = 0
    checks = []
    for q in (4, 8):
        checks.extend(_selftest_checks(q))
    pattern_ok = all(
        [not divisibility_predicates(1 << f).check("i").divides for f in range(2, 9)]
        + [divisibility_predicates(1 << f).check("ii").divides == (f == 2) for f in range(2, 9)]
    )
    checks.append(("divisibility predicates match the stated exceptional q", pattern_ok))
    for label, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {label}")
        failures += 0 if ok else 1
    return 1 if failures else 0


def run(cfg: RunConfig) -> int:
    """Execute a validated config; returns the process exit status."""
    try:
        if cfg.command == "compute":
            return _cmd_compute(cfg)
        if cfg.command == "oracle":
            return _cmd_oracle(cfg)
        if cfg.command == "characterize":
            return _cmd_characterize(cfg)
        if cfg.command == "catalan":
            return _cmd_catalan(cfg)
        if cfg.command == "selftest":
            return _cmd_selftest()
        print(f"unknown command {cfg.command!r}", file=sys.stderr)
        return 2
    except oracle.CapacityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(config_from_args(argv))


if __name__ == "__main__":
    raise SystemExit(main())
