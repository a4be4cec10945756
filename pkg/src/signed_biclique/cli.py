"""Command line front end: ``count``, ``bench``, ``convert``, ``generate``, ``stats``."""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from fractions import Fraction
from pathlib import Path

from .bench import ALGORITHMS, BenchPlan, BenchRow, run_bench, run_count, write_rows
from .errors import BicliqueError, CountOverflow, SizeGuardExceeded, TimeLimitExceeded
from .graph import SignedBipartiteGraph
from .ingest import (
    EPINIONS,
    JESTER,
    BernoulliRandom,
    Format,
    IdMap,
    IngestSpec,
    Native,
    RatingThreshold,
    generate_random_bigraph,
    load,
    write_canonical,
)
from .oracle import DEFAULT_MAX_CELLS
from .report import CSV_COLUMNS

EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_OVERFLOW = 3

FORMATS = {f.value: f for f in Format}


def _pos_rule(text: str) -> RatingThreshold:
    if text == "jester":
        return JESTER
    if text == "epinions":
        return EPINIONS
    kind, _, value = text.partition(":")
    if kind in ("threshold", "gt") and value:
        return RatingThreshold(Fraction(value), strict=kind == "gt")
    raise argparse.ArgumentTypeError("expected jester, epinions, threshold:<x> or gt:<x>")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        lo, _, hi = part.partition("-")
        out.extend(range(int(lo), int(hi) + 1) if hi else [int(lo)])
    return out


def _add_input_options(ap: argparse.ArgumentParser) -> None:
    ap.add_argument("--format", choices=sorted(FORMATS), default="canonical")
    ap.add_argument("--pos-rule", type=_pos_rule, default=None,
                    help="rating rule: jester (>6), epinions (>=4), threshold:<x> (>=x) or gt:<x> (>x)")
    ap.add_argument("--p-pos", type=_fraction, default=Fraction(7, 10),
                    help="probability of a positive sign for unsigned input (default 0.7)")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--remap", action="store_true",
                    help="treat vertex ids as labels and assign dense indices in first-seen order")
    ap.add_argument("--id-map", type=Path, default=None, help="write the label -> index map here (implies --remap)")


def _spec(args) -> IngestSpec:
    fmt = FORMATS[args.format]
    if fmt is Format.RATED:
        if args.pos_rule is None:
            raise BicliqueError("ratings input needs --pos-rule")
        return IngestSpec(fmt, args.pos_rule)
    if fmt is Format.UNSIGNED:
        return IngestSpec(fmt, BernoulliRandom(args.p_pos, args.seed))
    return IngestSpec(fmt, Native())


def _load(args, path: str) -> SignedBipartiteGraph:
    spec = _spec(args)
    id_map = IdMap() if (args.remap or args.id_map) and spec.format is not Format.CANONICAL else None
    ctx = nullcontext(sys.stdin) if path == "-" else open(path, encoding="utf-8")
    with ctx as fh:
        g = load(fh, spec, id_map=id_map)
    if id_map is not None and args.id_map:
        with open(args.id_map, "w", encoding="utf-8") as out:
            id_map.write(out)
    return g


def _emit_report(rep, fmt: str, dataset: str, out) -> None:
    if fmt == "json":
        d = rep.as_dict()
        d["dataset"] = dataset
        out.write(json.dumps(d) + "\n")
    elif fmt == "csv":
        write_rows([BenchRow(dataset, rep.algorithm, rep.p, rep.q, 0, "ok", rep)], out, "csv")
    else:
        side = rep.anchor_side.name.lower() if rep.anchor_side else "left (fixed)"
        out.write(f"balanced ({rep.p},{rep.q})-bicliques: {rep.count}\n")
        out.write(f"algorithm: {rep.algorithm}  anchor side: {side}\n")
        for key in ("wedges", "subsets", "intersections", "candidate_sets",
                    "bicliques_materialized", "bicliques_rejected"):
            val = getattr(rep, key)
            if val:
                out.write(f"{key}: {val}\n")
        out.write(f"wall time: {rep.wall_ms:.3f} ms\n")
        if rep.peak_mem_bytes is not None:
            out.write(f"peak memory: {rep.peak_mem_bytes} bytes ({rep.mem_method})\n")


def cmd_count(args) -> int:
    g = _load(args, args.input)
    rep = run_count(
        g, args.algo, args.p, args.q, anchor_side=args.anchor_side, time_limit=args.time_limit,
        workers=args.threads, **({"anchor_order": args.bbvp_order} if args.algo == "bbvp" else {}),
    )
    _emit_report(rep, args.output, args.input, sys.stdout)
    if args.verify:
        check = run_count(g, "bbvp", args.p, args.q, anchor_side=args.anchor_side, memory="none")
        counts = {rep.algorithm: rep.count, "bbvp": check.count}
        try:
            counts["oracle"] = run_count(g, "oracle", args.p, args.q, memory="none").count
        except SizeGuardExceeded:
            print(f"verify: oracle skipped (m*n > {DEFAULT_MAX_CELLS})", file=sys.stderr)
        if len(set(counts.values())) != 1:
            print(f"verify: MISMATCH {counts}", file=sys.stderr)
            return EXIT_MISMATCH
        print(f"verify: ok {counts}", file=sys.stderr)
    return 0


def cmd_bench(args) -> int:
    inputs = [(path, _load(args, path)) for path in args.inputs]
    for spec in args.generate or []:
        m, n, e = (int(x) for x in spec.split(","))
        inputs.append((f"random-{m}x{n}-{e}-s{args.seed}",
                       generate_random_bigraph(m, n, edges=e, p_pos=args.p_pos, seed=args.seed)))
    if not inputs:
        raise BicliqueError("bench needs at least one input file or --generate m,n,edges")
    plan = BenchPlan(
        inputs,
        algorithms=args.algo.split(","),
        grid=[(p, q) for p in _int_list(args.p) for q in _int_list(args.q)],
        repetitions=args.repetitions,
        time_limit=args.time_limit,
        anchor_side=args.anchor_side,
    )
    write_rows(run_bench(plan, workers=args.threads), sys.stdout, args.output)
    return 0


def cmd_convert(args) -> int:
    g = _load(args, args.input)
    with (open(args.out, "w", encoding="utf-8") if args.out else nullcontext(sys.stdout)) as out:
        write_canonical(g, out)
    return 0


def cmd_generate(args) -> int:
    if (args.density is None) == (args.edges is None):
        raise BicliqueError("give exactly one of --density or --edges")
    g = generate_random_bigraph(args.m, args.n, density=args.density, edges=args.edges,
                                p_pos=args.p_pos, seed=args.seed)
    with (open(args.out, "w", encoding="utf-8") if args.out else nullcontext(sys.stdout)) as out:
        write_canonical(g, out)
    return 0


def cmd_stats(args) -> int:
    st = _load(args, args.input).stats()
    if args.output == "json":
        print(json.dumps(st.as_dict()))
    else:
        print(f"|U| = {st.left_count}  |V| = {st.right_count}  |E| = {st.edge_count}  max degree = {st.max_degree}")
        for name, h in (("U", st.left_degree_histogram), ("V", st.right_degree_histogram)):
            print(f"{name} degrees: " + " ".join(f"{d}:{c}" for d, c in sorted(h.items())))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="signed-biclique", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", help="count balanced (p,q)-bicliques in one graph")
    c.add_argument("input", help="input file, - for stdin")
    _add_input_options(c)
    c.add_argument("--algo", choices=ALGORITHMS, default="bbvp")
    c.add_argument("--p", type=int, required=True, help="vertices taken from U (>= 2)")
    c.add_argument("--q", type=int, required=True, help="vertices taken from V (>= 2)")
    c.add_argument("--anchor-side", choices=("auto", "left", "right"), default="auto")
    c.add_argument("--bbvp-order", choices=("highest", "lowest"), default="highest",
                   help="bbvp candidates rank below (highest) or above (lowest) the anchor")
    c.add_argument("--time-limit", type=float, default=None, help="seconds")
    c.add_argument("--threads", type=int, default=1, help="worker processes splitting the anchors")
    c.add_argument("--verify", action="store_true", help="cross-check with bbvp and, when small enough, the oracle")
    c.add_argument("--output", choices=("text", "csv", "json"), default="text")
    c.set_defaults(func=cmd_count)

    b = sub.add_parser("bench", help="run an algorithm x (p,q) grid and print a table")
    b.add_argument("inputs", nargs="*")
    _add_input_options(b)
    b.add_argument("--generate", action="append", metavar="M,N,EDGES", help="add a seeded random graph")
    b.add_argument("--algo", default="baseline,bbwc,bbvp", help="comma separated subset of " + ",".join(ALGORITHMS))
    b.add_argument("--p", default="3-5", help="list like 3,4,5 or 3-5")
    b.add_argument("--q", default="3-7")
    b.add_argument("--repetitions", type=int, default=1)
    b.add_argument("--time-limit", type=float, default=5 * 3600.0, help="seconds per run; slower runs are INF")
    b.add_argument("--threads", type=int, default=1, help="plan rows run in parallel processes")
    b.add_argument("--anchor-side", choices=("auto", "left", "right"), default="auto")
    b.add_argument("--output", choices=("csv", "json"), default="csv")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("convert", help="write any supported input as a canonical file")
    v.add_argument("input")
    _add_input_options(v)
    v.set_defaults(format="edgelist")
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_convert)

    gp = sub.add_parser("generate", help="write a seeded random signed bipartite graph")
    gp.add_argument("--m", type=int, required=True)
    gp.add_argument("--n", type=int, required=True)
    gp.add_argument("--density", type=_fraction, default=None)
    gp.add_argument("--edges", type=int, default=None)
    gp.add_argument("--p-pos", type=_fraction, default=Fraction(7, 10))
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--out", default=None)
    gp.set_defaults(func=cmd_generate)

    s = sub.add_parser("stats", help="sizes and degree histograms")
    s.add_argument("input")
    _add_input_options(s)
    s.add_argument("--output", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_stats)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CountOverflow as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except TimeLimitExceeded as exc:
        print(f"INF: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (BicliqueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
