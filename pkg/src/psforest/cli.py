"""``psforest`` command line: ex | construct | check | oracle | verify | table."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from typing import Sequence

from .acceptance import AcceptanceConfig, run_all
from .constructions import ConstructionError, extremal_set_main
from .embedder import DEFAULT_BUDGET, SearchBudgetExceeded, contains_forest
from .forest import ForestError, PathStarForest, parse_forest
from .formulas import FormulaError, Regime, UncoveredRegimeError, classify_regime, ex_main, explicit_bound_applies, thresholds
from .graph import Graph6Error, graph6_encode, read_graph6_stream
from .oracle import ORACLE_LIMIT, OracleLimitError, default_jobs, exact_ex


class UsageError(Exception):
    pass


def _num(x):
    """Integers stay integers; other rationals become ``"p/q"`` strings."""
    if x is None:
        return None
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(",", ":"))


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _forest(args) -> PathStarForest:
    if args.forest and (args.paths or args.stars):
        raise UsageError("use --forest or --paths/--stars, not both")
    try:
        if args.forest:
            return parse_forest(args.forest)
        if args.paths or args.stars:
            return PathStarForest(_int_list(args.paths or ""), _int_list(args.stars or ""))
    except ForestError as exc:
        raise UsageError(str(exc)) from exc
    raise UsageError("a forest is required (--forest P4,S3 or --paths/--stars)")


def _n_values(args) -> list[int]:
    if args.n is not None and args.n_range:
        raise UsageError("use --n or --n-range, not both")
    if args.n is not None:
        if args.n < 0:
            raise UsageError("--n must be non-negative")
        return [args.n]
    if args.n_range:
        lo, sep, hi = args.n_range.partition("..")
        try:
            a, b = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"--n-range expects A..B, got {args.n_range!r}") from None
        if not sep or a < 0 or b < a:
            raise UsageError(f"--n-range expects 0 <= A <= B, got {args.n_range!r}")
        return list(range(a, b + 1))
    raise UsageError("--n or --n-range is required")


def ex_record(f: PathStarForest, n: int) -> dict:
    regime = classify_regime(f)
    rec: dict = {"forest": str(f), "n": n}
    try:
        res = ex_main(f, n)
    except UncoveredRegimeError:
        rec.update(value=None, regime=Regime.UNCOVERED.value, formula=None, threshold=None, guaranteed=False)
        return rec
    rec.update(value=res.value, regime=res.regime.value, formula=res.formula,
               threshold=res.threshold, guaranteed=res.guaranteed)
    if res.gamma is not None:
        rec["gamma"] = _num(res.gamma)
    if res.i_star is not None:
        rec["i_star"] = res.i_star
    if regime is not Regime.UNCOVERED and explicit_bound_applies(f):
        th = thresholds(f)
        rec["threshold_N1"] = _num(th.N1)
        rec["threshold_N2"] = _num(th.N2)
        if th.L is not None:
            rec["threshold_L"] = _num(th.L)
    return rec


# subcommands -----------------------------------------------------------------


def cmd_ex(args, out) -> int:
    f = _forest(args)
    recs = [ex_record(f, n) for n in _n_values(args)]
    if args.format == "csv":
        _write_table(recs, out)
    else:
        for rec in recs:
            out.write(_dump(rec) + "\n")
    return 0


def cmd_construct(args, out) -> int:
    f = _forest(args)
    for n in _n_values(args):
        es = extremal_set_main(f, n, args.budget)
        if args.format == "json":
            out.write(_dump({"forest": str(f), "n": n, "edges": es.claimed_value, "family": es.family,
                             "complete": es.complete,
                             "graph6": [graph6_encode(g).decode() for g in es.graphs]}) + "\n")
        else:
            for g in es.graphs:
                out.write(graph6_encode(g).decode() + "\n")
    return 0


def cmd_check(args, out, stdin) -> int:
    f = _forest(args)
    if args.input and args.input != "-":
        with open(args.input, "rb") as fh:
            lines = fh.read().splitlines()
    else:
        lines = stdin.read().splitlines()
    for g in read_graph6_stream(lines):
        emb = contains_forest(g, f, args.budget)
        verdict = "present" if emb is not None else "absent"
        if args.format == "json":
            rec = {"graph6": graph6_encode(g).decode(), "verdict": verdict}
            if emb is not None:
                rec["paths"] = [list(p) for p in emb.paths]
                rec["stars"] = [[c, list(lv)] for c, lv in emb.stars]
            out.write(_dump(rec) + "\n")
        else:
            out.write(verdict + "\n")
    return 0


def cmd_oracle(args, out) -> int:
    f = _forest(args)
    for n in _n_values(args):
        res = exact_ex(n, f, limit=args.oracle_limit, jobs=args.jobs, budget=args.budget)
        if args.format == "g6":
            for g in res.extremal.graphs:
                out.write(graph6_encode(g).decode() + "\n")
            continue
        out.write(_dump({
            "forest": str(f), "n": n, "max_edges": res.max_edges,
            "extremal_count": len(res.extremal),
            "graph6": [graph6_encode(g).decode() for g in res.extremal.graphs],
            "nodes_explored": res.nodes_explored,
        }) + "\n")
    return 0


def cmd_verify(args, out) -> int:
    cfg = AcceptanceConfig(oracle_max_n=min(args.oracle_limit, ORACLE_LIMIT), budget=args.budget, jobs=args.jobs)
    only = set(_int_list(args.only)) if args.only else None
    if only and not only <= set(range(1, 10)):
        raise UsageError("--only takes criterion numbers 1..9")
    report = run_all(cfg, only)
    for c in report.criteria:
        print(c.line(), file=sys.stderr)
    out.write(_dump(report.to_json()) + "\n")
    return 0 if report.passed else 1


TABLE_COLUMNS = ("n", "value", "regime", "guaranteed")


def _write_table(recs, out) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for rec in recs:
        value = "" if rec["value"] is None else rec["value"]
        w.writerow([rec["n"], value, rec["regime"], str(rec["guaranteed"]).lower()])
    out.write(buf.getvalue())


def cmd_table(args, out) -> int:
    f = _forest(args)
    recs = [ex_record(f, n) for n in _n_values(args)]
    if args.format == "json":
        for rec in recs:
            out.write(_dump(rec) + "\n")
    else:
        _write_table(recs, out)
    return 0


# parser ----------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--forest", help='forest such as "P4,S3" or "2P3,S4"')
    common.add_argument("--paths", help="path orders, e.g. 4,4")
    common.add_argument("--stars", help="star sizes (leaves), e.g. 3")
    common.add_argument("--n", type=int)
    common.add_argument("--n-range", dest="n_range", metavar="A..B")
    common.add_argument("--jobs", type=int, default=default_jobs(), help="oracle workers (default $PSF_JOBS or 1)")
    common.add_argument("--oracle-limit", type=int, default=ORACLE_LIMIT)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="embedder node budget")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="psforest", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    for name, fmt, default in (("ex", ("json", "csv"), "json"), ("construct", ("g6", "json"), "g6"),
                               ("check", ("json",), None), ("oracle", ("json", "g6"), "json"),
                               ("verify", ("json",), "json"), ("table", ("csv", "json"), "csv")):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--format", choices=fmt, default=default)
        if name == "check":
            sp.add_argument("input", nargs="?", help="graph6 file (default stdin)")
        if name == "verify":
            sp.add_argument("--only", help="comma-separated criterion numbers")
    return p


def run(argv: Sequence[str] | None = None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "check":
            return cmd_check(args, out, stdin)
        return {"ex": cmd_ex, "construct": cmd_construct, "oracle": cmd_oracle,
                "verify": cmd_verify, "table": cmd_table}[args.command](args, out)
    except (UsageError, OracleLimitError, ConstructionError, FormulaError, Graph6Error) as exc:
        print(f"psforest {args.command}: {exc}", file=sys.stderr)
        return 2
    except SearchBudgetExceeded as exc:
        print(f"psforest {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
