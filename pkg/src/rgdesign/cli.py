"""Command-line interface: ``rgd <subcommand> ...``.

Results go to standard output, diagnostics to standard error.  Exit status
is 0 on success (a design exists or verifies), 2 when a design provably
does not exist, 3 when a search is inconclusive, and 64 or above for usage
and domain errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import design as design_mod
from . import develop as develop_mod
from . import gdd as gdd_mod
from .difference import cycle_base_blocks, cycle_design
from .errors import FormatError, GraphError, RGDError, UsageError, VerificationFailed
from .graph import (
    Graph,
    complete,
    cycle,
    disjoint_union,
    from_edge_list,
    from_graph6,
    generalized_petersen,
    hoffman_singleton,
    path,
    petersen,
    sylvester,
    to_edge_list,
    to_graph6,
)
from .search import ALGORITHMS, Status, batch, exact_cover, random_regular_girth5
from .search.cover import default_budget

log = logging.getLogger("rgdesign")

EXIT_OK, EXIT_NOT_EXISTS, EXIT_INCONCLUSIVE = 0, 2, 3
_STATUS_EXIT = {Status.EXISTS: EXIT_OK, Status.NOT_EXISTS: EXIT_NOT_EXISTS, Status.INCONCLUSIVE: EXIT_INCONCLUSIVE}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --------------------------------------------------------------------------
# graph specs and file helpers

def _ints(text: str, count: int | None = None) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} integers, got {text!r}")
    return vals


_NAMED = {
    "petersen": petersen,
    "sylvester": sylvester,
    "hs": hoffman_singleton,
    "hoffman_singleton": hoffman_singleton,
    "hoffman-singleton": hoffman_singleton,
}


def parse_graph_spec(spec: str) -> Graph:
    """``cycle:9``, ``complete:4``, ``path:3``, ``gp:20,4``, ``petersen``, ``sylvester``, ``hs``,
    ``union:cycle:5+cycle:6``, ``random:n,delta,seed``, ``g6:<graph6>`` or a file path."""
    if spec in _NAMED:
        return _NAMED[spec]()
    kind, sep, arg = spec.partition(":")
    if sep:
        if kind == "union":
            return disjoint_union(*(parse_graph_spec(p) for p in arg.split("+")))
        if kind == "cycle":
            return cycle(*_ints(arg, 1))
        if kind == "complete":
            return complete(*_ints(arg, 1))
        if kind == "path":
            return path(*_ints(arg, 1))
        if kind == "gp":
            return generalized_petersen(*_ints(arg, 2))
        if kind == "random":
            return random_regular_girth5(*_ints(arg, 3))
        if kind == "g6":
            return from_graph6(arg)
    p = Path(spec)
    if spec == "-" or p.exists():
        return parse_graph_text(_read(spec))
    raise UsageError(f"cannot interpret graph spec {spec!r}")


def parse_graph_text(text: str) -> Graph:
    """Edge-list text starts with a decimal vertex count; anything else is read as graph6."""
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty graph input")
    if stripped[0].isdigit() or stripped[0] == "#":
        return from_edge_list(text)
    return from_graph6(stripped.splitlines()[0])


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read_design(path: str) -> design_mod.Design:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return design_mod.from_json(text)
    return design_mod.from_text(text)


def _design_out(d: design_mod.Design, as_json: bool) -> str:
    return design_mod.to_json(d) + "\n" if as_json else design_mod.to_text(d)


def _graph_out(g: Graph, fmt: str) -> str:
    return to_graph6(g) + "\n" if fmt == "graph6" else to_edge_list(g)


def _report(report, as_json: bool) -> str:
    if as_json:
        return json.dumps({
            "ok": report.ok,
            "violations": [
                {"kind": v.kind, "witness": v.witness, "observed": v.observed, "expected": str(v.expected)}
                for v in report.violations
            ],
        }) + "\n"
    return report.summary() + "\n"


# --------------------------------------------------------------------------
# subcommands

def cmd_params(args) -> int:
    p = design_mod.params(args.n, args.delta)
    if args.json:
        print(json.dumps(p.__dict__))
    else:
        fields = [f"k={p.k}", f"b={p.b}", f"r={p.r}", f"remainder={p.remainder_count}"]
        print(" ".join(fields + ["admissible" if p.admissible else "inadmissible"]))
    return EXIT_OK


def cmd_develop(args) -> int:
    if args.table:
        order, _, family = args.table.partition(":")
        bbs = develop_mod.builtin_table(int(order), family or "delta3")
    elif args.input:
        bbs = develop_mod.from_text(_read(args.input))
    else:
        raise UsageError("develop needs --in FILE or --table ORDER:FAMILY")
    _write(args.out, _design_out(develop_mod.develop(bbs), args.json))
    return EXIT_OK


def cmd_table(args) -> int:
    if args.list or not args.table:
        for order, family in develop_mod.builtin_orders():
            print(f"{order}:{family}")
        return EXIT_OK
    order, _, family = args.table.partition(":")
    sys.stdout.write(develop_mod.to_text(develop_mod.builtin_table(int(order), family or "delta3")))
    return EXIT_OK


def cmd_verify(args) -> int:
    d = _read_design(args.design)
    if args.recover:
        g = design_mod.recover_graph(d)
    elif args.graph:
        g = parse_graph_spec(args.graph)
    else:
        raise UsageError("verify needs --graph SPEC or --recover")
    report = design_mod.verify(d, g)
    sys.stdout.write(_report(report, args.json))
    if not report.ok:
        raise VerificationFailed(f"{len(report.violations)} violation(s)")
    return EXIT_OK


def cmd_recover(args) -> int:
    g = design_mod.recover_graph(_read_design(args.design))
    _write(args.out, _graph_out(g, args.format))
    return EXIT_OK


def cmd_pairtable(args) -> int:
    sys.stdout.write(design_mod.render_pair_table(design_mod.pair_table(parse_graph_spec(args.graph))))
    return EXIT_OK


def cmd_cycle(args) -> int:
    if args.emit_base_blocks:
        sys.stdout.write(develop_mod.to_text(cycle_base_blocks(args.n)))
        return EXIT_OK
    d, _ = cycle_design(args.n)
    _write(args.out, _design_out(d, args.json))
    return EXIT_OK


def cmd_gdd(args) -> int:
    if args.gdd_cmd == "make-g3":
        _write(args.out, gdd_mod.to_json(gdd_mod.gdd_g3(args.g)) + "\n")
        return EXIT_OK
    text = _read(args.input)
    try:
        d = gdd_mod.from_json(text)
    except FormatError as exc:
        print(f"invalid: {exc}")
        raise VerificationFailed(str(exc)) from None
    print(f"ok k={d.k} v={d.v} type={d.type_string()} blocks={len(d.blocks)}")
    return EXIT_OK


def _parse_fill(spec: str):
    size, sep, files = spec.partition("=")
    design_path, sep2, graph_path = files.partition(":")
    if not sep or not sep2:
        raise UsageError(f"--fill expects SIZE=DESIGN:GRAPH, got {spec!r}")
    return int(size), (_read_design(design_path), parse_graph_spec(graph_path))


def cmd_wilson(args) -> int:
    g = gdd_mod.from_json(_read(args.gdd))
    ingredients = dict(_parse_fill(f) for f in args.fill)
    d, graph = gdd_mod.wilson_fill(g, ingredients)
    _write(args.out, _design_out(d, args.json))
    if args.graph_out:
        _write(args.graph_out, _graph_out(graph, args.format))
    return EXIT_OK


def cmd_search(args) -> int:
    g = parse_graph_spec(args.graph)
    budget = args.budget if args.budget is not None else default_budget()
    if args.algo == "cover":
        out = exact_cover(g, args.mode, budget)
    else:
        if args.mode != "decide":
            raise UsageError("--mode first/count applies to --algo cover only")
        out = ALGORITHMS[args.algo](g, budget=budget)
    if args.json:
        print(json.dumps({
            "status": str(out.status), "stage": out.stage, "witness": _jsonable(out.witness),
            "nodes": out.nodes, "count": out.count, "note": out.note,
            "certificate": None if out.certificate is None else list(out.certificate),
            "design": None if out.design is None else json.loads(design_mod.to_json(out.design)),
        }))
    else:
        print(out.describe())
    if out.design is not None and args.design_out:
        _write(args.design_out, design_mod.to_text(out.design))
    return _STATUS_EXIT[out.status]


def _jsonable(w):
    if w is None or isinstance(w, (str, int)):
        return w
    if isinstance(w, (tuple, list)):
        return [_jsonable(x) for x in w]
    return str(w)


def cmd_batch(args) -> int:
    lines = _read(args.input).splitlines()
    budget = args.budget if args.budget is not None else default_budget()
    report = batch(lines, args.pipeline, budget=budget, jobs=args.jobs)
    sys.stdout.write(report.render())
    for rec in report.records:
        if rec.outcome == "Error":
            log.error("record %d: %s", rec.index, rec.message)
    return EXIT_OK if report.errors == 0 else FormatError.code


def cmd_gen(args) -> int:
    if args.random:
        g = random_regular_girth5(*_ints(args.random, 3))
    elif args.name:
        g = parse_graph_spec(args.name)
    else:
        raise UsageError("gen needs --random n,delta,seed or --name SPEC")
    _write(args.out, _graph_out(g, args.format))
    return EXIT_OK


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")
    common.add_argument("-v", "--verbose", action="count", default=0)

    ap = _Parser(prog="rgd", description="Regular-graph designs with lambda = 1 and block size delta + 1.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("params", parents=[common], help="block counts and admissibility")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("develop", parents=[common], help="develop base blocks into a design")
    p.add_argument("--in", dest="input", metavar="BASEBLOCKS")
    p.add_argument("--table", metavar="ORDER:FAMILY")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_develop)

    p = sub.add_parser("table", parents=[common], help="print an embedded base-block table")
    p.add_argument("table", nargs="?", metavar="ORDER:FAMILY")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="verify a design against a graph")
    p.add_argument("--design", default="-")
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--graph", metavar="SPEC")
    grp.add_argument("--recover", action="store_true", help="check against the graph read off the design")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recover", parents=[common], help="recover the host graph of a design")
    p.add_argument("--design", default="-")
    p.add_argument("--format", choices=["edge-list", "graph6"], default="edge-list")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("pairtable", parents=[common], help="render the pair occurrence array")
    p.add_argument("--graph", required=True, metavar="SPEC")
    p.set_defaults(func=cmd_pairtable)

    p = sub.add_parser("cycle", parents=[common], help="design for the cycle C_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--emit-base-blocks", action="store_true")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_cycle)

    p = sub.add_parser("gdd", parents=[common], help="group divisible designs")
    gsub = p.add_subparsers(dest="gdd_cmd", required=True, parser_class=_Parser)
    q = gsub.add_parser("make-g3", parents=[common])
    q.add_argument("--g", type=int, required=True)
    q.add_argument("--out", default="-")
    q = gsub.add_parser("verify", parents=[common])
    q.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_gdd)

    p = sub.add_parser("wilson", parents=[common], help="fill the groups of a GDD with ingredient designs")
    p.add_argument("--gdd", required=True)
    p.add_argument("--fill", action="append", required=True, metavar="SIZE=DESIGN:GRAPH")
    p.add_argument("--out", default="-")
    p.add_argument("--graph-out")
    p.add_argument("--format", choices=["edge-list", "graph6"], default="edge-list")
    p.set_defaults(func=cmd_wilson)

    p = sub.add_parser("search", parents=[common], help="complete or refute a design for a graph")
    p.add_argument("--graph", required=True, metavar="SPEC")
    p.add_argument("--algo", choices=["a", "b", "c", "d", "cover"], default="cover")
    p.add_argument("--mode", choices=["decide", "first", "count"], default="decide")
    p.add_argument("--budget", type=int)
    p.add_argument("--design-out", metavar="FILE")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("batch", parents=[common], help="run a pipeline over a graph6 file")
    p.add_argument("--in", dest="input", required=True, metavar="G6FILE")
    p.add_argument("--pipeline", default="a,cover")
    p.add_argument("--budget", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("gen", parents=[common], help="generate a graph")
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--random", metavar="n,delta,seed")
    grp.add_argument("--name", metavar="SPEC")
    p.add_argument("--format", choices=["edge-list", "graph6"], default="graph6")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)
    return ap


def run(argv=None) -> int:
    """Parse ``argv`` and execute; returns the exit status instead of exiting."""
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                            format="%(levelname)s %(message)s", stream=sys.stderr)
        return args.func(args)
    except RGDError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 65


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
