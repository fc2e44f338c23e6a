"""Command-line entry point."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .category import (
    CategoryError,
    ClosureConfig,
    closure_generate,
    contains,
    load_category_file,
    replay_trace,
)
from .classifier import classify_category
from .linmap import LinmapError, check_composition, mor_dimension, tp_matrix
from .partition import (
    XY,
    ColourSet,
    PartitionError,
    compose,
    conjugate,
    format_partition,
    involute,
    parse_colours,
    parse_partition,
    rotate,
    tensor,
)


def _colours(args) -> ColourSet:
    return parse_colours(args.colours) if args.colours else XY


def _config(args) -> ClosureConfig:
    if args.budget < 4:
        raise CategoryError("--budget must be at least 4")
    return ClosureConfig(point_budget=args.budget, workers=args.workers, pair_rule=args.pair_rule)


def _load(args):
    cs, gens = load_category_file(args.genfile)
    if args.colours:
        cs = parse_colours(args.colours)
    cfg = _config(args)
    if any(g.size > cfg.point_budget for g in gens):
        raise CategoryError("a generator exceeds the point budget")
    return closure_generate(gens, cfg, cs)


def _emit(args, text: str, obj) -> None:
    out = json.dumps(obj, indent=2, sort_keys=True) + "\n" if args.format == "json" else text
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def cmd_op(args) -> None:
    cs = _colours(args)
    parts = [parse_partition(lit, cs) for lit in args.partitions]
    arity = {"compose": 2, "tensor": 2, "involute": 1, "rotate": 1, "conjugate": 1}[args.name]
    if len(parts) != arity:
        raise PartitionError(f"{args.name} takes {arity} partition literal(s)")
    loops = None
    if args.name == "compose":
        # literals are given top to bottom; the library takes (below, above)
        result, loops = compose(parts[1], parts[0])
    elif args.name == "tensor":
        result = tensor(parts[0], parts[1])
    elif args.name == "involute":
        result = involute(parts[0])
    elif args.name == "conjugate":
        result = conjugate(parts[0], cs)
    else:
        result = rotate(parts[0], args.side, args.dir, cs)
    text = format_partition(result) + "\n"
    obj = {"result": format_partition(result)}
    if loops is not None:
        text += f"loops={loops}\n"
        obj["loops"] = loops
    _emit(args, text, obj)


def cmd_closure(args) -> None:
    cat = _load(args)
    dump = cat.dump()
    _emit(args, dump, {"budget": cat.budget, "size": len(cat), "members": dump.splitlines()})


def cmd_member(args) -> None:
    cat = _load(args)
    p = parse_partition(args.partition, cat.cs)
    m = contains(cat, p)
    text = f"verdict: {m.verdict}\nbound: {m.bound}\n"
    if m.witness:
        text += "".join(line + "\n" for line in m.witness)
    obj = {"verdict": m.verdict, "bound": m.bound, "trace": list(m.witness or ())}
    _emit(args, text, obj)


def cmd_classify(args) -> None:
    cat = _load(args)
    report = classify_category(cat)
    _emit(args, report.summary(), report.to_json())


def cmd_tp(args) -> None:
    p = parse_partition(args.partition, _colours(args))
    t = tp_matrix(p, args.n)
    obj = {
        "rows": t.target_dim,
        "cols": t.source_dim,
        "entries": [[int(r), int(c), 1] for r, c in zip(*t.matrix.nonzero())],
    }
    _emit(args, t.coordinate_list(), obj)


def cmd_check(args) -> None:
    cs = _colours(args)
    top, bottom = parse_partition(args.top, cs), parse_partition(args.bottom, cs)
    res = check_composition(bottom, top, args.n)
    _emit(args, f"factor={res['factor']} ok={str(res['ok']).lower()}\n", res)


def cmd_replay(args) -> None:
    cs, gens = load_category_file(args.genfile)
    if args.trace == "-":
        lines = sys.stdin.read().splitlines()
    else:
        with open(args.trace, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    lines = [ln for ln in lines if " = " in ln or ln.startswith("result ")]
    p = replay_trace(lines, cs, gens)
    _emit(args, format_partition(p) + "\n", {"result": format_partition(p)})


def cmd_mordim(args) -> None:
    cat = _load(args)
    w = "" if args.w == "-" else args.w
    w2 = "" if args.w2 == "-" else args.w2
    count, rank = mor_dimension(cat, w, w2, args.n)
    _emit(args, f"count={count} rank={rank}\n", {"count": count, "rank": rank, "N": args.n})


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=12, help="point budget of the closure")
    common.add_argument("--colours", help="colour set, e.g. colours=x:x,y:y")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--workers", type=int, default=1, help="closure workers")
    common.add_argument(
        "--pair-rule",
        choices=("seeds", "members"),
        default="seeds",
        help="fusion partners: generators only (fast) or every member (full fixpoint)",
    )

    parser = argparse.ArgumentParser(prog="ncpart", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    op = sub.add_parser("op", parents=[common], help="apply one partition operation")
    op.add_argument("name", choices=("compose", "tensor", "involute", "rotate", "conjugate"))
    op.add_argument("partitions", nargs="+", help="literals; for compose, the top one first")
    op.add_argument("--side", choices=("left", "right"), default="right")
    op.add_argument("--dir", choices=("up", "down"), default="down")
    op.set_defaults(func=cmd_op)

    p = sub.add_parser("closure", parents=[common], help="dump the bounded closure")
    p.add_argument("genfile")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("member", parents=[common], help="membership with a derivation trace")
    p.add_argument("genfile")
    p.add_argument("partition")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("classify", parents=[common], help="classification report")
    p.add_argument("genfile")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("tp", parents=[common], help="coordinate list of T_p")
    p.add_argument("partition")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_tp)

    p = sub.add_parser("check", parents=[common], help="verify T_q T_p = N^loops T_qp")
    p.add_argument("top")
    p.add_argument("bottom")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("replay", parents=[common], help="replay a derivation trace")
    p.add_argument("genfile")
    p.add_argument("trace", help="trace file ('-' for stdin)")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("mordim", parents=[common], help="count and rank of C(w, w')")
    p.add_argument("genfile")
    p.add_argument("w", help="upper word ('-' for empty)")
    p.add_argument("w2", help="lower word ('-' for empty)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_mordim)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (CategoryError, PartitionError, LinmapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
