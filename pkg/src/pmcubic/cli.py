"""Command-line front end: ``pmcubic <command> [options]``.

Exit codes: 0 everything executed passed, 1 a check or golden diff failed,
2 bad usage, 3 a requested size exceeds the resource caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

OK, MISMATCH, USAGE, RESOURCE = 0, 1, 2, 3
MAP_HARD_CAP = 5  # cubic map oracle size (2n vertices); 5 is opt-in and slow


@dataclass(frozen=True)
class RunConfig:
    order: int = 30
    max_n: int = 4
    threads: int = 1
    format: str = "text"
    seed: int = 0
    h_substitution: str = "squared"
    dump_maps: str | None = None


class ResourceError(RuntimeError):
    pass


def _config(args) -> RunConfig:
    if args.threads < 1:
        raise ValueError("--threads must be >= 1")
    if args.order < 1:
        raise ValueError("--order must be >= 1")
    if args.max_n < 1:
        raise ValueError("--max-n must be >= 1")
    if args.max_n > MAP_HARD_CAP:
        raise ResourceError(f"--max-n {args.max_n} exceeds the cap of {MAP_HARD_CAP}")
    return RunConfig(
        order=args.order,
        max_n=args.max_n,
        threads=args.threads,
        format=args.format,
        seed=args.seed,
        h_substitution="printed" if args.variant_h_substitution else "squared",
        dump_maps=args.dump_maps,
    )


def _emit(rows: list[dict], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        json.dump(rows, out, indent=1, default=str)
        out.write("\n")
        return
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "csv":
        import csv

        w = csv.DictWriter(out, keys, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return
    widths = {k: max(len(k), *(len(str(r[k])) for r in rows)) for k in keys}
    out.write("  ".join(k.ljust(widths[k]) for k in keys) + "\n")
    for r in rows:
        out.write("  ".join(str(r[k]).ljust(widths[k]) for k in keys) + "\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_verify(cfg: RunConfig, args) -> int:
    from .verify import exit_status, run_all

    checks = run_all(cfg.order, cfg.max_n, cfg.threads, cfg.seed, cfg.h_substitution)
    _emit([c.as_dict() for c in checks], cfg.format)
    status = exit_status(checks)
    n_fail = sum(c.status == "FAIL" for c in checks)
    n_skip = sum(c.status == "skipped" for c in checks)
    print(f"{len(checks)} checks, {n_fail} failed, {n_skip} skipped", file=sys.stderr)
    return status


def _golden_diff(name, expected_rows, got_rows) -> list[str]:
    diffs = []
    got = {r[0]: list(r) for r in got_rows}
    for row in expected_rows:
        have = got.get(row[0])
        if have is None:
            diffs.append(f"{name}: row {row[0]} not computed (order too small)")
        elif have != list(row):
            diffs.append(f"{name}: row {row[0]} expected {row[1:]} got {have[1:]}")
    return diffs


def cmd_tables(cfg: RunConfig, args) -> int:
    from .verify import load_golden

    bad = [w for w in args.which if w not in TABLES]
    if bad:
        raise ValueError(f"unknown table {bad[0]!r}; choose from {', '.join(TABLES)}")
    golden = load_golden()
    status = OK
    for which in args.which or TABLES:
        if which == "table1":
            from .map_series import table1

            rows = [list(r) for r in table1(cfg.order)][:10]
            cols = golden["table1"]["columns"]
            diffs = _golden_diff("table1", golden["table1"]["rows"], rows)
        elif which == "table2":
            from .graph_series import labeled_counts_table

            top = min(20, cfg.order - cfg.order % 2)
            rows = [list(r) for r in labeled_counts_table(top, top, cfg.h_substitution)][1:]
            cols = golden["table2"]["columns"]
            diffs = _golden_diff("table2", golden["table2"]["rows"], rows)
        else:
            from .asymptotics import constants_report

            balls = constants_report()
            cols = ["name", "mid", "rad", "paper_value"]
            rows = [[k, float(b.mid), float(b.rad), golden["constants"].get(k)] for k, b in balls.items()]
            diffs = []
            for k, b in balls.items():
                printed = golden["constants"].get(k)
                if printed is None or "/" in k:
                    continue
                if abs(float(b.mid) - float(printed)) >= 10 ** -(len(printed.split(".")[1])):
                    diffs.append(f"constants: {k} = {float(b.mid)} vs printed {printed}")
        records = [dict(zip(cols, r)) for r in rows]
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            ext = "json" if cfg.format == "json" else "csv"
            with open(os.path.join(args.out, f"{which}.{ext}"), "w") as fh:
                _emit(records, "json" if ext == "json" else "csv", fh)
        else:
            print(f"# {which}")
            _emit(records, cfg.format)
        for d in diffs:
            print(d, file=sys.stderr)
        print(f"# {which}: {'matches golden values' if not diffs else f'{len(diffs)} differences'}",
              file=sys.stderr)
        if diffs:
            status = MISMATCH
    return status


TABLES = ("table1", "table2", "constants")
SERIES_NAMES = ("M", "B", "T", "T1", "theta", "G", "C", "A")


def cmd_series(cfg: RunConfig, args) -> int:
    from . import graph_series, map_series

    name = args.name
    if name == "M":
        s = map_series.matched_map_series(cfg.order)
    elif name in ("B", "T", "T1"):
        T0, T1 = map_series.matched_3connected_series(cfg.order)
        if name == "T":
            s = T0 + T1
        elif name == "T1":
            s = T1
        else:
            s = map_series.solve_matched_bridgeless_system(T0, T1, cfg.order)
    elif name == "theta":
        s = map_series.tutte_triangulation_series(cfg.order)[1]
    else:
        order = cfg.order - cfg.order % 2
        ls = graph_series.labeled_series(order, cfg.h_substitution)
        s = getattr(ls, name)
        if not args.raw:
            vals = graph_series.labeled(s)
            _emit([{"n": n, "labeled": v} for n, v in enumerate(vals)], cfg.format)
            return OK
    if cfg.format == "json":
        print(json.dumps(s.to_json()))
    else:
        _emit([{"n": n, "coefficient": str(c)} for n, c in enumerate(s)], cfg.format)
    return OK


def cmd_counts(cfg: RunConfig, args) -> int:
    from .map_series import CountKind, count_rows

    kinds = args.kinds or [k.value for k in CountKind]
    rows = count_rows(kinds, args.nmax)
    _emit([{"n": n, "kind": k, "value": v} for n, k, v in rows], cfg.format)
    return OK


def cmd_enumerate(cfg: RunConfig, args) -> int:
    from . import graphs, maps

    n = args.n
    if args.family == "graphs":
        if n > graphs.MAX_N and not args.allow_large:
            raise ResourceError(f"graph enumeration beyond n={graphs.MAX_N} needs --allow-large")
        gs = list(graphs.enumerate_labeled_cubic_planar(n, args.allow_large))
        if cfg.dump_maps:
            with open(cfg.dump_maps, "w") as fh:
                for g in gs:
                    fh.write(g.to_edge_list())
        census = graphs.labeled_census_all(n, cfg.threads, args.allow_large)
        _emit([{"n": n, "graphs": len(gs), **census}], cfg.format)
        return OK
    if args.family == "cubic":
        if n > maps.MAX_CUBIC_SIZE and not args.allow_large:
            raise ResourceError(f"cubic maps beyond n={maps.MAX_CUBIC_SIZE} need --allow-large")
        it = lambda: maps.enumerate_rooted_cubic_maps(n, args.allow_large)  # noqa: E731
    elif args.family == "four-regular":
        it = lambda: maps.enumerate_four_regular_maps(n)  # noqa: E731
    else:
        it = lambda: maps.enumerate_rooted_maps(n)  # noqa: E731
    count = sum(1 for _ in it())
    row = {"family": args.family, "n": n, "maps": count}
    if args.family == "cubic":
        row.update(maps.matched_census_all(n, cfg.threads, args.allow_large))
    if cfg.dump_maps:
        maps.dump_maps(cfg.dump_maps, it(), with_matchings=args.family == "cubic")
    _emit([row], cfg.format)
    return OK


def cmd_ising(cfg: RunConfig, args) -> int:
    from .verify import check_ising
    from .ising import ising_census

    checks = check_ising(args.n)
    rows = [{"n": n, "colorings": ising_census(n)} for n in range(1, min(args.n, 3) + 1)]
    _emit(rows, cfg.format)
    _emit([c.as_dict() for c in checks], cfg.format)
    return MISMATCH if any(c.status == "FAIL" for c in checks) else OK


def cmd_bijection(cfg: RunConfig, args) -> int:
    from .verify import check_bijection_a, check_bijection_b

    if args.kind == "contract":
        checks = check_bijection_a(args.n)
    else:
        checks = check_bijection_b(args.n, cfg.seed)
    _emit([c.as_dict() for c in checks], cfg.format)
    return MISMATCH if any(c.status == "FAIL" for c in checks) else OK


def cmd_roots(cfg: RunConfig, args) -> int:
    from fractions import Fraction

    from .asymptotics import constants_report, report_json, report_text

    balls = constants_report(Fraction(1, 10**args.digits))
    print(report_json(balls) if cfg.format == "json" else report_text(balls))
    return OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=30, help="series truncation order")
    common.add_argument("--max-n", type=int, default=4, help="largest oracle size (cubic maps: half the vertices)")
    common.add_argument("--threads", type=int, default=1, help="worker processes for oracles")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized normalization orders")
    common.add_argument("--variant-h-substitution", action="store_true",
                        help="use x^2(1+D1)(1+D0^2) in the graph network systems")
    common.add_argument("--dump-maps", metavar="PATH", help="write enumerated objects to PATH")

    p = argparse.ArgumentParser(prog="pmcubic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="run every reproduction check")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("tables", parents=[common], help="emit tables and diff against golden values")
    s.add_argument("which", nargs="*", help="any of table1, table2, constants (default: all)")
    s.add_argument("--out", metavar="DIR", help="write files instead of printing")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("series", parents=[common], help="print a counting series")
    s.add_argument("name", choices=SERIES_NAMES)
    s.add_argument("--raw", action="store_true", help="exponential coefficients instead of labeled counts")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("counts", parents=[common], help="closed-formula counts")
    s.add_argument("kinds", nargs="*")
    s.add_argument("--nmax", type=int, default=10)
    s.set_defaults(func=cmd_counts)

    s = sub.add_parser("enumerate", parents=[common], help="run an exhaustive oracle")
    s.add_argument("family", choices=("cubic", "four-regular", "general", "graphs"))
    s.add_argument("n", type=int)
    s.add_argument("--allow-large", action="store_true", help="lift the default size cap")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("ising", parents=[common], help="matchings versus minimal dual colorings")
    s.add_argument("n", type=int, nargs="?", default=3)
    s.set_defaults(func=cmd_ising)

    s = sub.add_parser("bijection", parents=[common], help="fiber checks for the two bijections")
    s.add_argument("kind", choices=("contract", "flip"))
    s.add_argument("n", type=int, nargs="?", default=3)
    s.set_defaults(func=cmd_bijection)

    s = sub.add_parser("roots", parents=[common], help="certified singularities and constants")
    s.add_argument("--digits", type=int, default=12, help="ball radius 10^-digits")
    s.set_defaults(func=cmd_roots)
    return p


def main(argv=None) -> int:
    from .graphs import GraphUsageError
    from .maps import UsageError

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        return args.func(cfg, args)
    except ResourceError as exc:
        print(f"pmcubic: resource cap: {exc}", file=sys.stderr)
        return RESOURCE
    except (UsageError, GraphUsageError, ValueError) as exc:
        print(f"pmcubic: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
