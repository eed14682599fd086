"""Command-line interface.

Subcommands: count, enumerate, map, unmap, abacus, corners, verify.
Every output is deterministic for fixed flags (fixed orderings, no
timestamps); the environment variable SCORE_LAB_SEED is recognized
nowhere because nothing here is randomized.

Exit codes: 0 success, 1 verification failure or count disagreement,
2 requested method unavailable, 3 domain error (bad hook set, bad
path, non-coprime parameters), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from math import gcd

from . import abacus as abacus_mod
from . import bijection, formulas, mdcore, motzkin, oracle
from .errors import ScoreLabError

USAGE_ERROR = 64


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits with the conventional usage code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _parse_md(text: str) -> tuple[int, ...]:
    """Comma-separated hook list; '-' or '' is the empty set.

    Out-of-order or repeated entries are re-sorted and de-duplicated
    with a warning rather than rejected.
    """
    text = text.strip()
    if text in ("", "-"):
        return ()
    try:
        raw = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ScoreLabError(f"could not parse hook list {text!r}")
    cleaned = sorted(set(raw), reverse=True)
    if cleaned != raw:
        print("warning: hook list re-sorted and de-duplicated", file=sys.stderr)
    return mdcore.validate_md(cleaned)


def _parse_span(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        return int(lo_text), int(hi_text)
    value = int(text)
    return value, value


class _Emitter:
    """Collects output lines and writes them to stdout or a file."""

    def __init__(self, output: str | None):
        self.output = output
        self.lines: list[str] = []

    def line(self, text: str) -> None:
        self.lines.append(text)

    def json(self, obj) -> None:
        self.lines.append(json.dumps(obj, separators=(",", ":")))

    def flush(self) -> None:
        text = "\n".join(self.lines) + ("\n" if self.lines else "")
        if self.output:
            with open(self.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        else:
            sys.stdout.write(text)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="score-lab",
        description="Self-conjugate simultaneous core partitions: "
        "count, enumerate, map to lattice paths, and verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", default=None, help="write to this file instead of stdout")

    p_count = sub.add_parser("count", help="count self-conjugate simultaneous cores")
    p_count.add_argument("--s", type=int, required=True)
    p_count.add_argument("--d", type=int)
    p_count.add_argument("--p", type=int, default=2)
    p_count.add_argument("--t", type=int, help="pair mode: count (s, t)-cores")
    p_count.add_argument(
        "--method", choices=("formula", "dp", "enumerate", "all"), default="all"
    )
    p_count.add_argument("--bound", type=int, default=None)
    common(p_count)

    p_enum = sub.add_parser("enumerate", help="list every core for (s, d, p)")
    p_enum.add_argument("--s", type=int, required=True)
    p_enum.add_argument("--d", type=int, required=True)
    p_enum.add_argument("--p", type=int, default=2)
    p_enum.add_argument("--bound", type=int, default=None)
    p_enum.add_argument(
        "--n-max", type=int, default=None,
        help="use the partition-scan enumerator with this size cap",
    )
    common(p_enum)

    p_map = sub.add_parser("map", help="map a hook set to its lattice path")
    p_map.add_argument("--md", required=True)
    p_map.add_argument("--s", type=int, required=True)
    p_map.add_argument("--d", type=int, required=True)
    p_map.add_argument("--p", type=int, default=2)
    common(p_map)

    p_unmap = sub.add_parser("unmap", help="map a lattice path back to its hook set")
    p_unmap.add_argument("--path", required=True)
    p_unmap.add_argument("--s", type=int, required=True)
    p_unmap.add_argument("--d", type=int, required=True)
    p_unmap.add_argument("--p", type=int, default=2)
    common(p_unmap)

    p_abacus = sub.add_parser("abacus", help="render the abacus of a hook set")
    p_abacus.add_argument("--md", required=True)
    p_abacus.add_argument("--s", type=int, required=True)
    p_abacus.add_argument("--d", type=int, required=True)
    common(p_abacus)

    p_corners = sub.add_parser(
        "corners", help="corner histogram for d=1 progressions"
    )
    p_corners.add_argument("--s", type=int, required=True)
    p_corners.add_argument("--p", type=int, default=2)
    p_corners.add_argument("--m", type=int, default=None, help="restrict to one corner count")
    common(p_corners)

    p_verify = sub.add_parser("verify", help="cross-check a parameter grid")
    p_verify.add_argument("--s", required=True, help="value or range lo..hi")
    p_verify.add_argument("--d", required=True, help="value or range lo..hi")
    p_verify.add_argument("--p", required=True, help="value or range lo..hi")
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--bound", type=int, default=None)
    p_verify.add_argument(
        "--n-max", type=int, default=None,
        help="also run the partition-scan enumerator with this size cap",
    )
    common(p_verify)

    return parser


def _cmd_count(args, emit: _Emitter) -> int:
    results: list[formulas.CountResult] = []
    method = args.method
    if args.t is not None:
        s, t = sorted((args.s, args.t))
        if method in ("formula", "all"):
            results.append(formulas.count_sc_pair(s, t))
        if method in ("dp",):
            print("error: no path model for a bare pair; use --p", file=sys.stderr)
            return 2
        if method in ("enumerate", "all"):
            task = oracle.EnumerationTask(s, t - s, 1, args.bound)
            results.append(
                formulas.CountResult(len(oracle.enumerate_md_sets(task)), "enumeration")
            )
    else:
        if args.d is None:
            print("error: --d is required unless --t is given", file=sys.stderr)
            return USAGE_ERROR
        s, d, p = args.s, args.d, args.p
        if method in ("formula", "all"):
            if p == 2:
                results.append(formulas.count_sc_p2(s, d))
            if p == 3:
                results.append(formulas.count_sc_p3(s, d))
            if d == 1:
                results.append(formulas.count_sc_d1(s, p))
            if method == "formula" and not results:
                print(
                    f"error: no closed formula for p={p}, d={d}; "
                    "use --method dp or enumerate",
                    file=sys.stderr,
                )
                return 2
        if method in ("dp", "all"):
            results.append(formulas.count_via_paths(s, d, p))
        if method in ("enumerate", "all"):
            task = oracle.EnumerationTask(s, d, p, args.bound)
            results.append(
                formulas.CountResult(len(oracle.enumerate_md_sets(task)), "enumeration")
            )
    agree = len({r.value for r in results}) <= 1
    if args.format == "json":
        for r in results:
            emit.json(r.as_json())
        if method == "all":
            emit.json({"agree": agree})
    elif args.format == "csv":
        emit.line("method,value")
        for r in results:
            emit.line(f"{r.method},{r.value}")
    else:
        for r in results:
            emit.line(f"{r.method}: {r.value}")
        if method == "all":
            emit.line("AGREE" if agree else "DISAGREE")
    emit.flush()
    return 0 if agree else 1


def _cmd_enumerate(args, emit: _Emitter) -> int:
    task = oracle.EnumerationTask(args.s, args.d, args.p, args.bound)
    if args.n_max is not None:
        partitions = oracle.enumerate_by_partition_scan(task, args.n_max)
        mds = [mdcore.partition_to_md(parts) for parts in partitions]
    else:
        mds = oracle.enumerate_md_sets(task)
    if args.format == "csv":
        emit.line("size,corners,md,parts")
    for md in mds:
        record = mdcore.partition_record(md)
        if args.format == "json":
            emit.json(record)
        elif args.format == "csv":
            emit.line(
                f"{record['size']},{record['corners']},"
                f"{' '.join(map(str, record['md']))},"
                f"{' '.join(map(str, record['parts']))}"
            )
        else:
            md_text = ",".join(map(str, record["md"])) or "-"
            parts_text = ",".join(map(str, record["parts"])) or "-"
            emit.line(f"md={md_text} parts={parts_text}")
    emit.flush()
    return 0


def _cmd_map(args, emit: _Emitter) -> int:
    ctx = bijection.phi_context(args.s, args.d, args.p)
    md = _parse_md(args.md)
    steps = bijection.phi(md, ctx)
    if args.format == "json":
        emit.json(bijection.mapping_record(md, ctx))
    elif args.format == "csv":
        emit.line("steps,x,y,flats,last")
        emit.line(motzkin.path_csv_row(steps))
    else:
        emit.line(steps)
    emit.flush()
    return 0


def _cmd_unmap(args, emit: _Emitter) -> int:
    ctx = bijection.phi_context(args.s, args.d, args.p)
    md = bijection.phi_inverse(args.path, ctx)
    record = mdcore.partition_record(md)
    if args.format == "json":
        emit.json(bijection.mapping_record(md, ctx))
        emit.json(record)
    elif args.format == "csv":
        emit.line("size,corners,md,parts")
        emit.line(
            f"{record['size']},{record['corners']},"
            f"{' '.join(map(str, record['md']))},"
            f"{' '.join(map(str, record['parts']))}"
        )
    else:
        emit.line(",".join(map(str, record["md"])) or "-")
        emit.line("parts: " + (",".join(map(str, record["parts"])) or "-"))
    emit.flush()
    return 0


def _cmd_abacus(args, emit: _Emitter) -> int:
    spec = abacus_mod.abacus_spec(args.s, args.d)
    state = abacus_mod.place_beads(spec, _parse_md(args.md))
    if args.format == "json":
        emit.json(abacus_mod.abacus_record(state))
    elif args.format == "csv":
        emit.line("j,r,b,f")
        for column in abacus_mod.abacus_record(state)["columns"]:
            emit.line(f"{column['j']},{column['r']},{column['b']},{column['f']}")
    else:
        emit.line(abacus_mod.render_abacus(state))
    emit.flush()
    return 0


def _cmd_corners(args, emit: _Emitter) -> int:
    s, p = args.s, args.p
    task = oracle.EnumerationTask(s, 1, p)
    ctx = bijection.phi_context(s, 1, p)
    histogram: dict[int, int] = {}
    for md in oracle.enumerate_md_sets(task):
        m, _, _ = bijection.corner_statistics(md, ctx)
        histogram[m] = histogram.get(m, 0) + 1
    formula = None
    if p == 2:
        formula = formulas.count_corners_p2
    elif p == 3:
        formula = formulas.count_corners_p3
    top = max(max(histogram, default=0), s // 2)
    rows = []
    for m in range(top + 1):
        if args.m is not None and m != args.m:
            continue
        counted = histogram.get(m, 0)
        expected = formula(s, m).value if formula else None
        rows.append((m, counted, expected))
    agree = all(e is None or e == c for _, c, e in rows)
    if args.format == "json":
        for m, counted, expected in rows:
            emit.json({"m": m, "enumerated": counted, "formula": expected})
    elif args.format == "csv":
        emit.line("m,enumerated,formula")
        for m, counted, expected in rows:
            emit.line(f"{m},{counted},{'' if expected is None else expected}")
    else:
        for m, counted, expected in rows:
            tail = "" if expected is None else f" formula={expected}"
            emit.line(f"m={m} enumerated={counted}{tail}")
        emit.line("AGREE" if agree else "DISAGREE")
    emit.flush()
    return 0 if agree else 1


def _verify_one(item: tuple[int, int, int, int | None, int | None]) -> oracle.VerifyReport:
    s, d, p, bound, n_max = item
    return oracle.verify_instance(s, d, p, bound=bound, n_max=n_max)


def _cmd_verify(args, emit: _Emitter) -> int:
    try:
        s_lo, s_hi = _parse_span(args.s)
        d_lo, d_hi = _parse_span(args.d)
        p_lo, p_hi = _parse_span(args.p)
    except ValueError:
        print("error: ranges must be INT or INT..INT", file=sys.stderr)
        return USAGE_ERROR
    if s_lo < 1 or d_lo < 1 or p_lo < 2 or s_hi < s_lo or d_hi < d_lo or p_hi < p_lo:
        print(
            "error: need s >= 1, d >= 1, p >= 2 and nonempty ranges",
            file=sys.stderr,
        )
        return USAGE_ERROR
    if args.jobs < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return USAGE_ERROR

    grid = []
    skipped = []
    for s in range(s_lo, s_hi + 1):
        for d in range(d_lo, d_hi + 1):
            for p in range(p_lo, p_hi + 1):
                if gcd(s, d) != 1:
                    skipped.append((s, d, p))
                else:
                    grid.append((s, d, p, args.bound, args.n_max))

    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_verify_one, grid))
    else:
        reports = [_verify_one(item) for item in grid]

    if args.format == "csv":
        emit.line("s,d,p,n_md,n_path,n_dp,n_formula,roundtrip,corners,pass")
    for s, d, p in skipped:
        if args.format == "json":
            emit.json({"s": s, "d": d, "p": p, "skipped": "gcd(s, d) != 1"})
        elif args.format == "csv":
            emit.line(f"{s},{d},{p},,,,,,,skipped")
        else:
            emit.line(f"s={s} d={d} p={p} skipped (gcd != 1)")
    for report in reports:
        if args.format == "json":
            emit.json(report.as_json())
        elif args.format == "csv":
            emit.line(
                f"{report.s},{report.d},{report.p},{report.n_md},{report.n_path},"
                f"{report.n_dp},{'' if report.n_formula is None else report.n_formula},"
                f"{report.roundtrip},{report.corners},{str(report.passed).lower()}"
            )
        else:
            formula_text = "-" if report.n_formula is None else str(report.n_formula)
            verdict = "PASS" if report.passed else "FAIL"
            emit.line(
                f"s={report.s} d={report.d} p={report.p} md={report.n_md} "
                f"paths={report.n_path} dp={report.n_dp} formula={formula_text} "
                f"roundtrip={report.roundtrip} corners={report.corners} {verdict}"
            )
    failures = sum(1 for r in reports if not r.passed)
    summary = (
        f"verified {len(reports)} instances: {len(reports) - failures} pass, "
        f"{failures} fail, {len(skipped)} skipped"
    )
    if args.format == "json":
        emit.json(
            {
                "instances": len(reports),
                "pass": len(reports) - failures,
                "fail": failures,
                "skipped": len(skipped),
            }
        )
    else:
        emit.line(summary)
    emit.flush()
    return 1 if failures else 0


_HANDLERS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "unmap": _cmd_unmap,
    "abacus": _cmd_abacus,
    "corners": _cmd_corners,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    emit = _Emitter(args.output)
    try:
        return _HANDLERS[args.command](args, emit)
    except ScoreLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
