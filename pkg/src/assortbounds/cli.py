"""Command-line interface.

Exit codes: 0 success, 2 bad input or usage, 3 degenerate partition
(a class is empty), 4 undefined assortativity.
"""

from __future__ import annotations

import argparse
import csv
import secrets
import sys
from pathlib import Path

from . import __version__, report as rpt
from .bounds import assortativity_range, normalize_assortativity
from .errors import (
    AssortError,
    DegenerateDenominatorError,
    DegeneratePartitionError,
    GraphError,
    TooManyCombinationsError,
    ZeroBoundError,
)
from .explorer import (
    DEFAULT_BINS,
    DEFAULT_CAP,
    HeuristicConfig,
    default_threads,
    enumerate_metadata_space,
    permutation_test,
    rewire_graph_space,
    sample_permutations,
    swap_heuristic,
)
from .graph import edge_counts
from .io import FIXTURES, fixture_path, load_graph
from .mixing import assortativity_from_counts, freeman_segregation

EXIT_USAGE = 2
EXIT_DEGENERATE = 3
EXIT_UNDEFINED = 4

CONNECTED_NOTE = ("m10 lower bounds assume connected realisations; "
                  "bounds apply to the connected ensemble")


class UsageError(Exception):
    pass


def _load(args):
    graph = args.graph
    meta = args.metadata
    if graph.startswith("fixture:"):
        name = graph.split(":", 1)[1]
        if name not in FIXTURES:
            raise UsageError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
        graph = fixture_path(name)
        if meta is None and not getattr(args, "no_metadata", False):
            meta = fixture_path(name, "metadata")
    return load_graph(graph, meta, dedupe=args.dedupe, symmetrize=args.symmetrize)


def _n1(args, g, a):
    if args.n1 is not None:
        if a is not None and a.n1 != args.n1:
            raise UsageError(f"--n1 {args.n1} disagrees with metadata (n1 = {a.n1})")
        n1 = args.n1
    elif a is not None:
        n1 = a.n1
    else:
        raise UsageError("need --metadata or --n1")
    if not 0 <= n1 <= g.n:
        raise UsageError(f"--n1 {n1} outside [0, {g.n}]")
    if n1 in (0, g.n):
        raise DegeneratePartitionError(f"n1 = {n1}: one class is empty")
    return n1


def _seed(args) -> int:
    if args.seed is None:
        args.seed = secrets.randbits(32)
        print(f"seed: {args.seed}", file=sys.stderr)
    return args.seed


def _threads(args):
    return args.threads if args.threads is not None else default_threads()


def _emit(args, report: dict) -> None:
    rpt.validate_report(report)
    text = rpt.dumps(report)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    elif not getattr(args, "summary", False):
        sys.stdout.write(text)
    if getattr(args, "summary", False):
        sys.stdout.write(_summary(report))


def _write_csv(path, er) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["bin_left", "bin_right", "count"])
        for row in er.histogram_rows():
            w.writerow(row)


def _fmt(x):
    return "undefined" if x is None else f"{x:.4f}"


def _summary(report: dict) -> str:
    inp = report["input"]
    out = [f"nodes={inp['nodes']} edges={inp['edges']} n1={inp['n1']} n0={inp['n0']}"]
    if report["observed"]:
        c = report["observed"]["counts"]
        out.append(f"observed r = {report['observed']['r']:.4f} "
                   f"(m11={c['m11']}, m10={c['m10']}, m00={c['m00']})")
    for space, b in sorted(report["bounds"].items()):
        out.append(f"{space}: [{b['r_lower']:.4f}, {b['r_upper']:.4f}]")
    for e in report["explorations"]:
        out.append(f"{e['method']} ({e['space']}): min={_fmt(e['r_min_observed'])} "
                   f"max={_fmt(e['r_max_observed'])} mean={_fmt(e['mean_r'])} "
                   f"samples={e['sample_count']}")
        if "p_value" in e["params"]:
            out.append(f"p-value ({e['params']['side']}) = {e['params']['p_value']:.6g}")
    return "\n".join(out) + "\n"


def cmd_bounds(args) -> int:
    g, a = _load(args)
    spaces = ["mgs", "gs"] if args.space == "all" else [args.space]
    if "gs" in spaces and a is None:
        raise UsageError("the graph space needs --metadata")
    n1 = _n1(args, g, a)
    report = rpt.new_report("bounds", g, a, n1)
    report["notes"].append(CONNECTED_NOTE)
    r = None
    if a is not None:
        ec = edge_counts(g, a)
        r = assortativity_from_counts(ec)
        report["observed"] = {"r": r, "counts": rpt.counts_dict(ec)}
        seg = freeman_segregation(g, a)
        report["segregation"] = {"expected_cross": seg.expected_cross,
                                 "observed_cross": seg.observed_cross, "S": seg.S}
    for space in spaces:
        span = assortativity_range(g, n1, space, a, variant=args.variant)
        report["bounds"][space] = rpt.range_dict(span)
        if r is not None:
            try:
                report["normalized"][space] = normalize_assortativity(r, span)
            except ZeroBoundError:
                report["normalized"][space] = None
    _emit(args, report)
    return 0


def cmd_enumerate(args) -> int:
    g, a = _load(args)
    n1 = _n1(args, g, a)
    try:
        er = enumerate_metadata_space(g, n1, cap=args.cap, bins=args.bins)
    except TooManyCombinationsError as exc:
        raise UsageError(f"{exc} (try the 'heuristic' or 'permtest' subcommand)") from exc
    report = rpt.new_report("enumerate", g, a, n1)
    rpt.add_exploration(report, er)
    if args.hist_csv:
        _write_csv(args.hist_csv, er)
    _emit(args, report)
    return 0


def cmd_heuristic(args) -> int:
    g, a = _load(args)
    n1 = _n1(args, g, a)
    seed = _seed(args)
    if args.init_observed and a is None:
        raise UsageError("--init-observed needs --metadata")
    cfg = HeuristicConfig(args.objective, args.iters, args.restarts, args.p_accept, seed)
    er = swap_heuristic(g, n1, cfg, initial=a if args.init_observed else None,
                        bins=args.bins, threads=_threads(args))
    report = rpt.new_report("heuristic", g, a, n1, seed)
    rpt.add_exploration(report, er)
    if args.hist_csv:
        _write_csv(args.hist_csv, er)
    _emit(args, report)
    return 0


def cmd_permtest(args) -> int:
    g, a = _load(args)
    n1 = _n1(args, g, a)
    seed = _seed(args)
    report = rpt.new_report("permtest", g, a, n1, seed)
    if a is None:
        er = sample_permutations(g, n1, args.samples, seed, bins=args.bins,
                                 threads=_threads(args))
    else:
        test = permutation_test(g, a, args.samples, seed, args.side, bins=args.bins,
                                threads=_threads(args))
        er = test.report
        report["observed"] = {"r": test.observed, "counts": rpt.counts_dict(edge_counts(g, a))}
    rpt.add_exploration(report, er)
    if args.hist_csv:
        _write_csv(args.hist_csv, er)
    _emit(args, report)
    return 0


def cmd_rewire(args) -> int:
    g, a = _load(args)
    if a is None:
        raise UsageError("rewiring needs --metadata")
    _n1(args, g, a)
    seed = _seed(args)
    er = rewire_graph_space(g, a, args.swaps, args.samples, seed, bins=args.bins,
                            threads=_threads(args))
    report = rpt.new_report("rewire", g, a, a.n1, seed)
    report["notes"].append("graph-space samples by double-edge swaps; not exactly uniform")
    ec = edge_counts(g, a)
    report["observed"] = {"r": assortativity_from_counts(ec), "counts": rpt.counts_dict(ec)}
    rpt.add_exploration(report, er)
    if args.hist_csv:
        _write_csv(args.hist_csv, er)
    _emit(args, report)
    return 0


def cmd_fixture(args) -> int:
    dest = Path(args.dest)
    dest.mkdir(parents=True, exist_ok=True)
    for kind, suffix in (("edges", ".edges"), ("metadata", ".tsv")):
        src = fixture_path(args.name, kind)
        (dest / f"{args.name}{suffix}").write_text(src.read_text("utf-8"), encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="assortbounds", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, randomized=False, hist=True):
        sp.add_argument("graph", help="edge-list file, or fixture:NAME")
        sp.add_argument("-m", "--metadata", help="node<TAB>label file")
        sp.add_argument("--n1", type=int, help="number of 1-labelled nodes")
        sp.add_argument("--dedupe", action="store_true", help="drop repeated edges")
        sp.add_argument("--symmetrize", action="store_true",
                        help="collapse reciprocal pairs of a directed edge list")
        sp.add_argument("--no-metadata", action="store_true",
                        help="ignore the metadata bundled with a fixture")
        sp.add_argument("-o", "--output", help="write the JSON report here")
        sp.add_argument("--summary", action="store_true", help="print a text summary")
        if randomized:
            sp.add_argument("--seed", type=int)
            sp.add_argument("--threads", type=int,
                            help="worker threads (default: $ASSORT_THREADS or 1)")
        if hist:
            sp.add_argument("--bins", type=int, default=DEFAULT_BINS)
            sp.add_argument("--hist-csv", help="write the histogram as CSV")

    sp = sub.add_parser("bounds", help="combinatorial bounds on r")
    common(sp, hist=False)
    sp.add_argument("--space", choices=["mgs", "gs", "all"], default="all")
    sp.add_argument("--variant", choices=["improved", "original"], default="improved")
    sp.set_defaults(func=cmd_bounds)

    sp = sub.add_parser("enumerate", help="every metadata assignment")
    common(sp)
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("heuristic", help="label-swap search for extreme r")
    common(sp, randomized=True)
    sp.add_argument("--objective", choices=["min", "max"], default="max")
    sp.add_argument("--iters", type=int, default=10_000)
    sp.add_argument("--restarts", type=int, default=10)
    sp.add_argument("--p-accept", type=float, default=0.001)
    sp.add_argument("--init-observed", action="store_true",
                    help="start every restart from the observed assignment")
    sp.set_defaults(func=cmd_heuristic)

    sp = sub.add_parser("permtest", help="random relabelling histogram and p-value")
    common(sp, randomized=True)
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--side", choices=["upper", "lower"], default="upper")
    sp.set_defaults(func=cmd_permtest)

    sp = sub.add_parser("rewire", help="degree-preserving rewiring of the observed graph")
    common(sp, randomized=True)
    sp.add_argument("--swaps", type=int, default=100, help="accepted swaps per sample")
    sp.add_argument("--samples", type=int, default=1000)
    sp.set_defaults(func=cmd_rewire)

    sp = sub.add_parser("fixture", help="copy a bundled fixture to a directory")
    sp.add_argument("name", choices=FIXTURES)
    sp.add_argument("dest")
    sp.set_defaults(func=cmd_fixture)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError, TooManyCombinationsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DegeneratePartitionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except DegenerateDenominatorError as exc:
        print(f"error: assortativity {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except AssortError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
