"""Command line front end: ``bdom {gen,solve,analyze,reduce,verify}``.

Graphs travel as graph6 (or sparse6) lines on stdin/stdout.  Exit status is
0 when every check passes, 2 when a bound is violated, 3 when some graph was
skipped for size or time, and 1 on bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from typing import Iterator, Sequence, TextIO

from . import harness
from .broadcast import to_literal
from .formats import FormatError, read_graphs, to_graph6, write_graph6_lines
from .generator import KNOWN_CUBIC_COUNTS, UnknownName, enumerate_connected, named
from .generator import SizeLimitExceeded as GenSizeLimit
from .graph import GraphError, SubcubicGraph, ball2, members
from .reductions import ReductionError, contract_c4, find_two_edge_c4s
from .solver import DEFAULT_CAP, Method, SizeLimitExceeded, SolveTimeout, solve
from .structure import classify_case, profile, set_profile

EXIT_USAGE = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep 2 for "violation"
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@contextmanager
def _open_out(path: str | None) -> Iterator[TextIO]:
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _input_graphs(args: argparse.Namespace) -> list[SubcubicGraph]:
    if args.named:
        return [named(x) for x in args.named]
    if args.input is None or args.input == "-":
        return list(read_graphs(sys.stdin))
    with open(args.input, encoding="ascii") as fh:
        return list(read_graphs(fh))


def _timeout(args: argparse.Namespace) -> float | None:
    return None if args.timeout_ms is None or args.timeout_ms <= 0 else args.timeout_ms / 1000


# -- subcommands --------------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    stream = enumerate_connected(
        args.n, cubic_only=args.cubic, triangle_free=args.triangle_free, cap=args.cap
    )
    with _open_out(args.out) as out:
        if args.count_only:
            known = KNOWN_CUBIC_COUNTS.get(args.n) if args.cubic and not args.triangle_free else None
            suffix = f" (reference {known})" if known is not None else ""
            out.write(f"{len(stream)}{suffix}\n")
        else:
            write_graph6_lines(stream, out)
    return harness.EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    code = harness.EXIT_OK
    cap = args.cap
    with _open_out(args.out) as out:
        for g in _input_graphs(args):
            t0 = time.perf_counter()
            rec: dict = {"graph6": to_graph6(g), "n": g.n}
            try:
                res = solve(g, args.method, cap=cap, timeout=_timeout(args))
            except (SizeLimitExceeded, SolveTimeout) as exc:
                rec.update(gamma=None, certificate=None, nodes=None, error=str(exc))
                code = harness.EXIT_PARTIAL
            else:
                rec.update(gamma=res.gamma, certificate=to_literal(res.certificate), nodes=res.nodes_explored)
            rec["millis"] = round((time.perf_counter() - t0) * 1000, 3)
            out.write(json.dumps(rec) + "\n")
    return code


def _vertex_bundle(g: SubcubicGraph, v: int) -> dict:
    prof = profile(g, v)
    sp = set_profile(g, ball2(g, v))
    bundle = {
        "vertex": v,
        "profile": {
            "degree": prof.degree,
            "p1": prof.p1,
            "p2": prof.p2,
            "p3": prof.p3,
            "B": members(prof.B),
            "beta": prof.beta,
            "beta1": prof.beta1,
            "beta2": prof.beta2,
            "beta3": prof.beta3,
            "ell": prof.ell,
            "on_triangle": prof.on_triangle,
            "in_Vt": prof.in_Vt,
            "in_Vstar": prof.in_Vstar,
            "in_Vstarstar": prof.in_Vstarstar,
        },
        "set_profile": {
            "X": members(sp.X),
            "boundary_size": sp.boundary_size,
            "a": sp.a,
            "a3": sp.a3,
            "a4": sp.a4,
            "i": sp.i,
            "i2": sp.i2,
            "i3": sp.i3,
            "standard": sp.standard,
            "closure": members(sp.closure),
        },
        "case": None,
    }
    if prof.in_Vstar:
        q = classify_case(g, v)
        bundle["case"] = {"r": q.r, "a": q.a, "i": q.i, "matched": q.matched, "table_cell": q.table_cell}
    return bundle


def cmd_analyze(args: argparse.Namespace) -> int:
    with _open_out(args.out) as out:
        for g in _input_graphs(args):
            if args.vertex is not None and not 0 <= args.vertex < g.n:
                raise GraphError(f"vertex {args.vertex} outside 0..{g.n - 1}")
            vs = [args.vertex] if args.vertex is not None else range(g.n)
            doc = {"graph6": to_graph6(g), "vertices": [_vertex_bundle(g, v) for v in vs]}
            out.write(json.dumps(doc) + "\n")
    return harness.EXIT_OK


def cmd_reduce(args: argparse.Namespace) -> int:
    with _open_out(args.out) as out:
        for g in _input_graphs(args):
            found = find_two_edge_c4s(g)
            if args.apply is None:
                doc = {
                    "graph6": to_graph6(g),
                    "separated_c4": [
                        {"cycle": list(s.cycle), "u1": s.u1, "u2": s.u2, "v1": s.v1, "v2": s.v2, "case": s.case}
                        for s in found
                    ],
                }
                out.write(json.dumps(doc) + "\n")
                continue
            if not 0 <= args.apply < len(found):
                raise GraphError(f"--apply {args.apply}: graph has {len(found)} two-edge 4-cycles")
            cr = contract_c4(g, found[args.apply])
            out.write(to_graph6(cr.contracted_graph) + "\n")
    return harness.EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    graphs = _input_graphs(args)
    res = harness.verify_stream(
        graphs, cap=args.cap, timeout=_timeout(args), threads=args.threads
    )
    with _open_out(args.out) as out:
        harness.report(res.records, args.format, out)
    if args.format != "summary":
        sys.stderr.write(harness.report(res.records, "summary"))
    return res.summary.exit_code


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="graph6/sparse6 file, one graph per line ('-' for stdin)")
    common.add_argument("--named", action="append", metavar="NAME", help="use a named graph instead of --input")
    common.add_argument("--out", help="output file (default stdout)")
    common.add_argument("--format", default="jsonl", choices=("jsonl", "csv", "summary"))
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--cap", type=int, default=None, help="vertex cap")
    common.add_argument("--timeout-ms", type=int, default=int(harness.DEFAULT_TIMEOUT * 1000))

    p = _Parser(prog="bdom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", parents=[common], help="enumerate connected (cubic) graphs as graph6")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--cubic", action="store_true")
    g.add_argument("--triangle-free", action="store_true")
    g.add_argument("--count-only", action="store_true")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", parents=[common], help="exact 2-limited broadcast domination number")
    s.add_argument("--method", choices=[m.value for m in Method], default=Method.BRANCH_AND_BOUND.value)
    s.set_defaults(func=cmd_solve)

    a = sub.add_parser("analyze", parents=[common], help="local structure profiles as JSON")
    a.add_argument("--vertex", type=int)
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("reduce", parents=[common], help="find 4-cycles hanging on two edges; contract one")
    r.add_argument("--apply", type=int, metavar="K")
    r.set_defaults(func=cmd_reduce)

    v = sub.add_parser("verify", parents=[common], help="check the weight and cubic bounds")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and args.cap is None:
        args.cap = DEFAULT_CAP
    try:
        return args.func(args)
    except (FormatError, GraphError, ReductionError, UnknownName, GenSizeLimit, OSError) as exc:
        sys.stderr.write(f"bdom {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
