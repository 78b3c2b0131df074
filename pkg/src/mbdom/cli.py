"""Command line interface: ``mbdom {solve,pairing,reduce,experiment,play,generate}``.

Exit codes: 0 success, 1 experiment failure, 2 parse error, 3 size cap
exceeded, 4 unsuitable environment (e.g. ``play`` without a terminal).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from . import graph as gr
from .catalog import NAMED
from .cotree import Cotree, cotree_to_graph, parse_cotree, recognize_cograph
from .errors import ParseError, SizeCapError
from .experiments import EXPERIMENTS
from .game import (
    DEFAULT_MAX_N,
    Color,
    Player,
    Position,
    Winner,
    analyze,
    dominator_has_won,
    solve_position,
    staller_has_won,
)
from .graph import Graph
from .pairing import (
    Pairing,
    PairingStrategyState,
    find_pairing_exact,
    first_move_pairing,
    pairing_from_tree_matching,
    strategy_response,
)
from .reductions import (
    parse_dimacs,
    parse_poscnf,
    poscnf_to_graph,
    poscnf_to_split_graph,
    threesat_to_pairing_graph,
)
from .structured import cograph_outcome, cograph_pairing, tree_outcome

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP, EXIT_ENV = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# -- input -------------------------------------------------------------


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {source}: {exc.strerror}", EXIT_PARSE) from None


def _guess_format(source: str, text: str) -> str:
    suffix = Path(source).suffix.lower()
    if suffix == ".json":
        return "json"
    if suffix in (".cot", ".cotree"):
        return "cotree"
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "json"
    if stripped[:1] in (".", "U", "J"):
        return "cotree"
    return "edge-list"


def load_input(args) -> tuple[Graph, Cotree | None]:
    """Graph from ``args.input`` / ``args.inline``; the cotree too when given as one."""
    if args.inline is not None:
        text, source = args.inline, ""
    elif args.input is not None:
        text, source = _read_source(args.input), args.input
    else:
        raise CliError("no input: pass a file, '-' for stdin, or --inline TEXT", EXIT_PARSE)
    fmt = args.format or _guess_format(source, text)
    if fmt == "cotree":
        cot = parse_cotree(text.strip())
        return cotree_to_graph(cot), cot
    if fmt == "json":
        return gr.parse_json_graph(text), None
    return gr.parse_edge_list(text), None


def _auto_engine(g: Graph, cot: Cotree | None) -> str:
    # a cotree input already is a decomposition, so use it directly
    if cot is not None:
        return "cograph"
    if g.n > 0 and g.is_forest():
        return "tree"
    if recognize_cograph(g) is not None:
        return "cograph"
    return "exact"


# -- solve -------------------------------------------------------------


def cmd_solve(args) -> dict:
    g, cot = load_input(args)
    engine = args.engine
    t0 = time.perf_counter()
    report: dict = {"n": g.n, "edges": g.edge_count}
    if engine == "auto":
        engine = _auto_engine(g, cot)
    if engine == "tree":
        if not g.is_forest():
            raise CliError("engine 'tree' needs a forest", EXIT_PARSE)
        res = tree_outcome(g)
    elif engine == "cograph":
        cot = cot or recognize_cograph(g)
        if cot is None:
            raise CliError("engine 'cograph' needs a cograph (the graph has an induced P4)", EXIT_PARSE)
        res = cograph_outcome(cot)
    else:
        rep = analyze(g, max_n=args.max_n)
        res = rep.outcome
        report.update(
            states_explored=rep.states_explored,
            memo_hits=rep.memo_hits,
            winning_first_move={"Dominator": rep.dominator_move, "Staller": rep.staller_move},
        )
    report.update(outcome=res.name, caption=res.caption, engine=engine)
    if args.first is not None:
        mover = Player.DOMINATOR if args.first == "dominator" else Player.STALLER
        sol = solve_position(Position.start(g), mover, max_n=args.max_n)
        report["first"] = {
            "mover": mover.value,
            "winner": sol.winner.value,
            "best_move": sol.best_move,
        }
    report["seconds"] = round(time.perf_counter() - t0, 6)
    return report


def format_solve(report: dict) -> str:
    lines = [f"{report['outcome']} (engine: {report['engine']})", report["caption"]]
    moves = report.get("winning_first_move")
    if moves:
        for who, v in moves.items():
            if v is not None:
                lines.append(f"{who} moving first wins by playing {v}")
    if "first" in report:
        f = report["first"]
        lines.append(f"{f['mover']} to move: {f['winner']}, suggested move {f['best_move']}")
    if "states_explored" in report:
        lines.append(f"states explored: {report['states_explored']}, memo hits: {report['memo_hits']}")
    lines.append(f"time: {report['seconds']:.3f}s")
    return "\n".join(lines)


# -- pairing -----------------------------------------------------------


def cmd_pairing(args) -> dict:
    g, cot = load_input(args)
    engine = args.engine
    if engine == "auto":
        engine = _auto_engine(g, cot)
    p: Pairing | None
    if engine == "tree":
        p = pairing_from_tree_matching(g)
    elif engine == "cograph":
        if cot is not None:
            p = cograph_pairing(cot)
        else:
            rec = recognize_cograph(g)
            if rec is None:
                raise CliError("engine 'cograph' needs a cograph", EXIT_PARSE)
            p = cograph_pairing(rec)
            if p is not None:
                p = p.mapped(rec.leaf_labels())
    else:
        p = find_pairing_exact(g, max_n=args.max_n)
    report: dict = {"engine": engine, "pairs": None if p is None else [list(q) for q in p.pairs]}
    if p is not None:
        report["note"] = "pairing dominating set found: Dominator wins moving first or second"
    elif args.first_move:
        fm = first_move_pairing(g, max_n=args.max_n)
        if fm is not None:
            report["first_move"] = {"vertex": fm[0], "pairs": [list(q) for q in fm[1].pairs]}
            report["note"] = (
                f"no pairing, but after opening on {fm[0]} the rest has one: "
                "Dominator wins moving first"
            )
    return report


def format_pairing(report: dict) -> str:
    if report["pairs"] is None:
        lines = [f"none (engine: {report['engine']})"]
    else:
        pairs = " ".join(f"({u},{v})" for u, v in report["pairs"])
        lines = [f"{len(report['pairs'])} pairs (engine: {report['engine']}): {pairs}"]
    if "note" in report:
        lines.append(report["note"])
    return "\n".join(lines)


# -- reduce ------------------------------------------------------------


def cmd_reduce(args) -> dict:
    text = _read_source(args.formula)
    if args.kind in ("poscnf", "poscnf-split"):
        f = parse_poscnf(text)
        build = poscnf_to_graph if args.kind == "poscnf" else poscnf_to_split_graph
        g, rmap = build(f)
    else:
        f = parse_dimacs(text)
        g, rmap = threesat_to_pairing_graph(f)
    report = {"graph": g.to_dict(), "map": rmap.to_dict()}
    if args.out:
        stem = Path(args.out)
        if args.format == "json":
            stem.with_suffix(".json").write_text(g.to_json() + "\n", encoding="utf-8")
        else:
            stem.with_suffix(".txt").write_text(g.to_edge_list(), encoding="utf-8")
        stem.with_suffix(".map.json").write_text(rmap.to_json() + "\n", encoding="utf-8")
    return report


# -- experiment --------------------------------------------------------


def cmd_experiment(args) -> dict:
    fn = EXPERIMENTS[args.name]
    kwargs = {}
    if args.max_n is not None and args.name in (
        "no-p", "monotonicity", "es-soundness", "pairing-soundness", "tree-oracle", "neutrality"
    ):  # fmt: skip
        kwargs["max_n"] = args.max_n
    if args.cases is not None and args.name in (
        "monotonicity", "pairing-soundness", "cograph-oracle", "neutrality"
    ):  # fmt: skip
        kwargs["cases"] = args.cases
    if args.seed is not None and args.name in (
        "monotonicity", "pairing-soundness", "cograph-oracle", "threesat-equiv", "neutrality"
    ):  # fmt: skip
        kwargs["seed"] = args.seed
    res = fn(**kwargs)
    return {
        "name": res.name,
        "passed": res.passed,
        "cases": res.cases,
        "failures": res.failures,
        "seconds": round(res.elapsed, 3),
        "details": res.details,
    }


def format_experiment(report: dict) -> str:
    status = "PASS" if report["passed"] else "FAIL"
    lines = [
        f"{status} {report['name']}: {report['cases']} cases, "
        f"{len(report['failures'])} counterexamples, {report['seconds']:.1f}s"
    ]
    for k, v in report["details"].items():
        lines.append(f"  {k}: {v}")
    for fail in report["failures"][:10]:
        lines.append("  counterexample: " + json.dumps(fail))
    return "\n".join(lines)


# -- generate ----------------------------------------------------------

GENERATORS: dict[str, Callable[[int], Graph]] = {
    "path": gr.path,
    "cycle": gr.cycle,
    "star": gr.star,
    "complete": gr.complete,
    "hanging-split": gr.hanging_split,
}


def cmd_generate(args) -> Graph:
    if args.kind in NAMED:
        return NAMED[args.kind]
    if args.size is None:
        raise CliError(f"generator {args.kind!r} needs a size", EXIT_PARSE)
    try:
        return GENERATORS[args.kind](args.size)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


# -- play --------------------------------------------------------------


def play_session(
    g: Graph,
    human: Player,
    human_first: bool,
    read: Callable[[str], str] = input,
    write: Callable[[str], None] = print,
    max_n: int | None = DEFAULT_MAX_N,
) -> Winner:
    """Turn-by-turn game between a human and the engine; returns the winner.

    The engine plays perfectly when the graph is within ``max_n``; beyond it,
    only a Dominator engine holding a pairing strategy is offered.
    """
    engine = human.opponent
    strategy: PairingStrategyState | None = None
    perfect = max_n is None or g.n <= max_n
    opening: int | None = None
    if not perfect:
        if engine is Player.STALLER:
            raise SizeCapError(
                f"{g.n} vertices exceed the exact cap {max_n}; perfect Staller play is not available"
            )
        if human_first:
            p = find_pairing_exact(g, max_n=None)
            if p is None:
                raise SizeCapError("graph too large for exact play and has no pairing dominating set")
        else:
            fm = first_move_pairing(g, max_n=None)
            if fm is None:
                raise SizeCapError("graph too large for exact play and no opening leads to a pairing")
            opening, p = fm
        strategy = PairingStrategyState(g, p)
        write(f"engine follows the pairing strategy on pairs {list(p.pairs)}")

    pos = Position.start(g)
    last: int | None = None
    to_move = human if human_first else engine
    write(f"graph: {g.n} vertices, edges {list(g.edges)}")
    write(f"you are {human.value}; {to_move.value} moves first")
    while True:
        if dominator_has_won(pos):
            write("Dominator has dominated the graph: Dominator wins")
            return Winner.DOMINATOR_WINS
        isolated = staller_has_won(pos)
        if isolated is not None:
            write(f"Staller isolated vertex {isolated}: Staller wins")
            return Winner.STALLER_WINS
        free = pos.unplayed()
        if to_move is human:
            while True:
                raw = read(f"your move {free}: ").strip()
                if raw in ("q", "quit"):
                    raise KeyboardInterrupt
                try:
                    v = int(raw)
                except ValueError:
                    write(f"not a vertex: {raw!r}")
                    continue
                if v not in free:
                    write(f"vertex {v} is not available")
                    continue
                break
        else:
            if strategy is not None:
                if opening is not None:
                    v, opening = opening, None
                    strategy.record(v, Color.DOMINATOR)
                else:
                    v = strategy_response(strategy, last)
                    if v is None:
                        v = free[0]
            else:
                # high-degree moves first, so the engine prefers central winning moves
                v = solve_position(pos, to_move, max_n=max_n, max_degree_first=True).best_move
            write(f"engine ({engine.value}) plays {v}")
        pos = pos.play(v, to_move)
        last = v
        to_move = to_move.opponent


def cmd_play(args) -> int:
    if not sys.stdin.isatty():
        raise CliError("play needs an interactive terminal", EXIT_ENV)
    g, _ = load_input(args)
    human = Player.DOMINATOR if args.human == "dominator" else Player.STALLER
    try:
        play_session(g, human, args.human_first, max_n=args.max_n)
    except KeyboardInterrupt:
        print("\ngame abandoned")
    return EXIT_OK


# -- parser ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edge-list", "json", "cotree"), default=None,
                        help="input format (default: guessed from extension/content); "
                        "for reduce/generate, the output graph format")  # fmt: skip
    common.add_argument("--engine", choices=("auto", "exact", "cograph", "tree"), default="auto")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-n", type=int, default=None, dest="max_n",
                        help="size cap for exhaustive routines")  # fmt: skip
    common.add_argument("--json", action="store_true", help="machine-readable output")

    def with_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", help="graph file, or '-' for stdin")
        p.add_argument("--inline", help="graph text given directly")

    parser = argparse.ArgumentParser(prog="mbdom", description="Maker-Breaker domination game solver")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="outcome of a graph")
    with_input(p)
    p.add_argument("--first", choices=("dominator", "staller"), help="also solve for this first mover")

    p = sub.add_parser("pairing", parents=[common], help="search a pairing dominating set")
    with_input(p)
    p.add_argument("--first-move", action="store_true", help="if none, look for an opening that leaves one")

    p = sub.add_parser("reduce", parents=[common], help="build a reduction instance from a formula")
    p.add_argument("kind", choices=("poscnf", "poscnf-split", "threesat"))
    p.add_argument("formula", help="formula file ('p poscnf' or DIMACS 'p cnf')")
    p.add_argument("--out", help="write OUT.txt (or OUT.json) and OUT.map.json")

    p = sub.add_parser("experiment", parents=[common], help="run a verification experiment")
    p.add_argument("name", choices=sorted(EXPERIMENTS))
    p.add_argument("--cases", type=int, default=None)

    p = sub.add_parser("play", parents=[common], help="play against the engine")
    with_input(p)
    p.add_argument("--human", choices=("dominator", "staller"), default="staller")
    p.add_argument("--human-first", action="store_true")

    p = sub.add_parser("generate", parents=[common], help="print a named or generated graph")
    p.add_argument("kind", choices=sorted(GENERATORS) + sorted(NAMED))
    p.add_argument("size", type=int, nargs="?")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    exact_cap = args.max_n if args.max_n is not None else DEFAULT_MAX_N
    try:
        if args.command == "solve":
            args.max_n = exact_cap
            rep = cmd_solve(args)
            print(json.dumps(rep) if args.json else format_solve(rep))
        elif args.command == "pairing":
            if args.max_n is None:
                args.max_n = 40
            rep = cmd_pairing(args)
            print(json.dumps(rep) if args.json else format_pairing(rep))
        elif args.command == "reduce":
            rep = cmd_reduce(args)
            if args.json:
                print(json.dumps(rep))
            elif not args.out:
                g = gr.graph_from_dict(rep["graph"])
                print(g.to_json() if args.format == "json" else g.to_edge_list(), end="")
            else:
                print(f"wrote {rep['graph']['n']}-vertex graph to {args.out}.*")
        elif args.command == "experiment":
            rep = cmd_experiment(args)
            print(json.dumps(rep) if args.json else format_experiment(rep))
            return EXIT_OK if rep["passed"] else EXIT_FAIL
        elif args.command == "play":
            args.max_n = exact_cap
            return cmd_play(args)
        elif args.command == "generate":
            g = cmd_generate(args)
            print(g.to_json() if (args.json or args.format == "json") else g.to_edge_list(), end="")
            if args.json or args.format == "json":
                print()
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SizeCapError as exc:
        print(f"size cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
