"""Command-line front end: every verification as a subcommand with JSON output.

Output is deterministic: fixed field order, floats rounded to 12 significant
digits, and no timing fields, so identical inputs produce byte-identical
reports.  Exit codes: 0 success/true, 1 predicate false, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import dataclass

from . import bounds, graphs, paradox, states
from .defaults import DENSE_CAP, SEARCH_CAP, STATE_CAP, TOLERANCE
from .errors import CapExceededError, GraphFormatError, NotGhzGraphError

EXIT_OK = 0
EXIT_PREDICATE_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3


@dataclass
class RunConfig:
    """Resource limits and output settings shared by all subcommands."""

    search_cap: int = SEARCH_CAP
    dense_cap: int = DENSE_CAP
    state_cap: int = STATE_CAP
    tolerance: float = TOLERANCE
    fmt: str = "json"
    output: str = "-"  # "-" means standard output

    def __post_init__(self):
        if min(self.search_cap, self.dense_cap, self.state_cap) <= 0:
            raise ValueError("caps must be positive")
        if not 0 < self.tolerance < 1e-3:
            raise ValueError(f"tolerance must lie in (0, 1e-3), got {self.tolerance}")
        if self.fmt not in ("json", "text"):
            raise ValueError(f"unknown format {self.fmt!r}")

    def output_stream(self):
        if self.output == "-":
            return contextlib.nullcontext(sys.stdout)
        return open(self.output, "w", encoding="utf-8")


def _twelve(x: float) -> float:
    """Round to 12 significant digits so output is diff-stable."""
    return float(f"{x:.12g}")


def _jsonable(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return _twelve(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def _text_lines(obj, depth=0):
    pad = "  " * depth
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)):
                yield f"{pad}{key}:"
                yield from _text_lines(value, depth + 1)
            elif isinstance(value, str) and "\n" in value:
                yield f"{pad}{key}:"
                for line in value.split("\n"):
                    yield f"{pad}  {line}"
            else:
                yield f"{pad}{key}: {value}"
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)):
                yield f"{pad}-"
                yield from _text_lines(value, depth + 1)
            else:
                yield f"{pad}- {value}"
    else:
        yield f"{pad}{obj}"


def _emit(doc: dict, cfg: RunConfig) -> None:
    doc = _jsonable(doc)
    with cfg.output_stream() as out:
        if cfg.fmt == "json":
            print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
        else:
            for line in _text_lines(doc):
                print(line, file=out)


def cmd_check(args, cfg: RunConfig) -> int:
    g = graphs.load_graph(args.graph)
    rep = graphs.classify_ghz(g)
    doc = {"graph": graphs.graph_to_dict(g), **rep.to_json_dict()}
    _emit(doc, cfg)
    return EXIT_OK if rep.is_ghz else EXIT_PREDICATE_FALSE


def cmd_enumerate(args, cfg: RunConfig) -> int:
    count = 0
    with cfg.output_stream() as out:
        for g in graphs.enumerate_ghz_graphs(args.n, args.d, dedup_isomorphism=args.dedup,
                                             cap=cfg.search_cap):
            if cfg.fmt == "json":
                print(json.dumps(_jsonable(graphs.graph_to_dict(g)), ensure_ascii=False), file=out)
            else:
                print(f"graph {count}: d={g.d} n={g.n} edges={g.edges()}", file=out)
            count += 1
        if cfg.fmt == "json":
            print(json.dumps({"count": count}), file=out)
        else:
            print(f"count: {count}", file=out)
    return EXIT_OK


def cmd_paradox(args, cfg: RunConfig) -> int:
    g = graphs.load_graph(args.graph)
    system = paradox.constraint_system(g)
    table = paradox.mermin_table(g)
    gen = paradox.genuineness(g)
    certificates = {}
    if args.method in ("algebraic", "both"):
        certificates["algebraic"] = paradox.check_infeasible_algebraic(system, g).to_json_dict()
    if args.method in ("exhaustive", "both"):
        certificates["exhaustive"] = paradox.check_infeasible_exhaustive(system, cap=cfg.search_cap).to_json_dict()
    doc = {
        "graph": graphs.graph_to_dict(g),
        "system": {"rows": system.num_rows, "variables": system.num_vars,
                   "final_rhs": int(system.rhs[-1])},
        "certificates": certificates,
        "agreement": all(cert["infeasible"] for cert in certificates.values()),
        "genuineness": {"n_partite": gen.n_partite, "d_level": gen.d_level},
        "mermin_table": table.render(),
    }
    _emit(doc, cfg)
    return EXIT_OK


def cmd_bell(args, cfg: RunConfig) -> int:
    g = graphs.load_graph(args.graph)
    quantum = bounds.bell_quantum(g, dense_cap=cfg.dense_cap, state_cap=cfg.state_cap,
                                  tolerance=cfg.tolerance)
    try:
        classical = bounds.bell_classical_max(g, cap=cfg.search_cap)
        classical_bound = classical.classical_bound
        classical_witness = classical.witness
        searched = classical.notes["searched"]
    except CapExceededError:
        classical_bound = float(g.n - 1)
        classical_witness = None
        searched = "skipped"
    doc = {
        "kind": "bell",
        "graph": graphs.graph_to_dict(g),
        "classical_bound": classical_bound,
        "classical_witness": classical_witness,
        "classical_searched": searched,
        "quantum_value": quantum.quantum_value,
        "ratio": quantum.quantum_value / classical_bound,
        "oracle_value": quantum.oracle_value,
        "oracle_agreement": "skipped" if quantum.oracle_agreement is None else quantum.oracle_agreement,
        "notes": quantum.notes,
    }
    _emit(doc, cfg)
    return EXIT_OK


def cmd_ks(args, cfg: RunConfig) -> int:
    g = graphs.load_graph(args.graph)
    classical = bounds.ks_classical_max(g, cap=cfg.search_cap, tolerance=cfg.tolerance)
    quantum = bounds.ks_quantum(g, dense_cap=cfg.dense_cap, tolerance=cfg.tolerance)
    doc = {
        "kind": "ks",
        "graph": graphs.graph_to_dict(g),
        "classical_bound": classical.classical_bound,
        "quantum_value": quantum.quantum_value,
        "margin": quantum.quantum_value - classical.classical_bound,
        "witness": classical.witness,
        "direct_max": classical.oracle_value,
        "direct_agreement": "skipped" if classical.oracle_agreement is None else classical.oracle_agreement,
        "quantum_oracle_agreement": "skipped" if quantum.oracle_agreement is None else quantum.oracle_agreement,
    }
    _emit(doc, cfg)
    return EXIT_OK


def cmd_lemma(args, cfg: RunConfig) -> int:
    closed = bounds.lattice_bound_closed(args.n, args.d)
    sweep = bounds.lattice_bound_sweep(args.n, args.d)
    try:
        brute = bounds.lattice_bound_brute(args.n, args.d, cap=cfg.search_cap)
        brute_max = brute.classical_bound
        witness = brute.witness
        agreement = (abs(brute_max - closed) <= cfg.tolerance
                     and abs(sweep.max_value - closed) <= cfg.tolerance)
    except CapExceededError:
        brute_max = None
        witness = None
        agreement = "skipped"
    doc = {
        "kind": "lemma",
        "n": args.n,
        "d": args.d,
        "closed_form": closed,
        "sweep_max": sweep.max_value,
        "brute_max": brute_max,
        "witness": witness,
        "agreement": agreement,
    }
    _emit(doc, cfg)
    return EXIT_OK


def cmd_state_verify(args, cfg: RunConfig) -> int:
    g = graphs.load_graph(args.graph)
    rep = states.verify_stabilizers(g, state_cap=cfg.state_cap)
    doc = {"graph": graphs.graph_to_dict(g), **rep.to_json_dict()}
    _emit(doc, cfg)
    return EXIT_OK if rep.all_pass else EXIT_PREDICATE_FALSE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=SEARCH_CAP,
                        help="brute-force search cap (assignments / lattice points)")
    common.add_argument("--dense-cap", type=int, default=DENSE_CAP,
                        help="largest dense matrix dimension")
    common.add_argument("--tolerance", type=float, default=TOLERANCE,
                        help="tolerance for real-valued comparisons")
    common.add_argument("--format", choices=("json", "text"), default="json",
                        help="output rendering")

    parser = argparse.ArgumentParser(
        prog="ghzgraphs",
        description="Classify GHZ graphs and verify their paradoxes, Bell bounds, and contextuality bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="classify a graph file")
    p.add_argument("graph", help="graph JSON file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate connected GHZ graphs")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--dedup", action="store_true", help="one representative per isomorphism class")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("paradox", parents=[common], help="certify the value-assignment paradox")
    p.add_argument("graph")
    p.add_argument("--method", choices=("algebraic", "exhaustive", "both"), default="both")
    p.set_defaults(func=cmd_paradox)

    p = sub.add_parser("bell", parents=[common], help="Bell bound and graph-state value")
    p.add_argument("graph")
    p.set_defaults(func=cmd_bell)

    p = sub.add_parser("ks", parents=[common], help="noncontextuality bound and quantum value")
    p.add_argument("graph")
    p.set_defaults(func=cmd_ks)

    p = sub.add_parser("lemma", parents=[common], help="lattice cosine bound: closed form vs sweep vs scan")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("state-verify", parents=[common], help="stabilizer relations of the graph state")
    p.add_argument("graph")
    p.set_defaults(func=cmd_state_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(search_cap=args.cap, dense_cap=args.dense_cap,
                        tolerance=args.tolerance, fmt=args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        return args.func(args, cfg)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except NotGhzGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PREDICATE_FALSE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP_EXCEEDED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
