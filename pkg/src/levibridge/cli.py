"""Command-line interface.

Graphs travel as graph6, one per line; reports are JSON. Exit codes:
0 = success and all assertions hold, 1 = usage or input-format error,
2 = a structural assertion failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canon import automorphism_group, isomorphism
from .construction import (
    BridgeSpec,
    StructureError,
    bridge_join,
    f_residue,
    goedgebeur_configuration,
    goedgebeur_graph,
    mk_residue,
)
from .cuts import cyclic_edge_connectivity, is_essentially_4_edge_connected
from .graphs import (
    Graph,
    Graph6Error,
    GraphError,
    bipartition,
    girth,
    gp,
    graph6_decode,
    graph6_encode,
    heawood,
    is_cubic,
    k33,
    pappus,
)
from .groups import GroupError
from .incidence import (
    Configuration,
    ConfigurationError,
    dual,
    fano,
    is_self_dual,
    levi_graph,
    moebius_kantor,
)
from .survey import aut_structure, refutation_check, run_survey, survey_json
from .twofactors import pseudo_2fi


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_graphs(path: str | None) -> list[Graph]:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    graphs = [graph6_decode(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise Graph6Error("no graph6 input lines found")
    return graphs


def _emit_graph(g: Graph, labels: bool):
    print(graph6_encode(g).decode("ascii"))
    if labels:
        table = [g.labels.get(v) for v in range(g.n)] if g.labels else []
        print(json.dumps(table))


def _cmd_gen(args) -> int:
    what = args.what
    if what == "goedgebeur":
        _emit_graph(goedgebeur_graph(), args.labels)
    elif what == "heawood":
        _emit_graph(heawood(), args.labels)
    elif what == "pappus":
        _emit_graph(pappus(), args.labels)
    elif what == "k33":
        _emit_graph(k33(), args.labels)
    elif what == "gp":
        if len(args.rest) != 2:
            raise ValueError("gen gp needs two integers, e.g. gen gp 8 3")
        _emit_graph(gp(int(args.rest[0]), int(args.rest[1])), args.labels)
    elif what == "bridge":
        if len(args.rest) != 2:
            raise ValueError(
                "gen bridge needs two one-line permutations, e.g. gen bridge 2301 0123"
            )
        spec = BridgeSpec.from_strings(args.rest[0], args.rest[1])
        _, g = bridge_join(f_residue(), mk_residue(), spec)
        _emit_graph(g, args.labels)
    else:
        raise ValueError(f"unknown generator {what!r}")
    return 0


def _cmd_props(args) -> int:
    for g in _read_graphs(args.file):
        cubic = is_cubic(g)
        ess4 = cyc = None
        if cubic and g.n <= 40:
            ok, _ = is_essentially_4_edge_connected(g)
            ess4 = ok
            cyc = cyclic_edge_connectivity(g)
        print(json.dumps({
            "vertices": g.n,
            "edges": len(g.edges),
            "cubic": cubic,
            "bipartite": bipartition(g) is not None,
            "girth": girth(g),
            "essentially_4_edge_connected": ess4,
            "cyclic_edge_connectivity": cyc,
            "aut_order": automorphism_group(g).order,
        }))
    return 0


def _cmd_p2fi(args) -> int:
    for g in _read_graphs(args.file):
        report = pseudo_2fi(g)
        print(json.dumps({
            "matching_count": report.matching_count,
            "cycle_counts": list(report.cycle_counts),
            "status": report.status,
        }))
    return 0


def _cmd_aut(args) -> int:
    graphs = _read_graphs(args.file) if args.file else [goedgebeur_graph()]
    for g in graphs:
        if args.structure:
            print(json.dumps(aut_structure(g)))
        else:
            print(json.dumps({"aut_order": automorphism_group(g).order}))
    return 0


def _cmd_iso(args) -> int:
    g = _read_graphs(args.file1)[0]
    h = _read_graphs(args.file2)[0]
    phi = isomorphism(g, h)
    print(json.dumps({
        "isomorphic": phi is not None,
        "mapping": list(phi) if phi is not None else None,
    }))
    return 0 if phi is not None else 2


_CONFIGS = {
    "fano": fano,
    "mk": moebius_kantor,
    "goedgebeur": goedgebeur_configuration,
}


def _config_json(c: Configuration) -> str:
    return json.dumps({
        "points": c.n_points,
        "lines": [sorted(line) for line in c.lines],
    })


def _cmd_config(args) -> int:
    c = _CONFIGS[args.name]()
    if args.levi:
        g, _ = levi_graph(c)
        _emit_graph(g, args.labels)
    elif args.dual:
        print(_config_json(dual(c)))
    elif args.self_dual:
        print(json.dumps({"self_dual": is_self_dual(c)}))
    else:
        print(_config_json(c))
    return 0


def _cmd_survey(args) -> int:
    text = survey_json(run_survey(p2fi=args.p2fi))
    if args.json_path:
        with open(args.json_path, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_refute(args) -> int:
    print(json.dumps(refutation_check(), indent=2))
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="levibridge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named graph or a bridge join")
    p.add_argument("what", choices=["goedgebeur", "heawood", "pappus", "k33",
                                    "gp", "bridge"])
    p.add_argument("rest", nargs="*")
    p.add_argument("--labels", action="store_true",
                   help="also print the vertex label table as JSON")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("props", help="report basic graph properties")
    p.add_argument("file", nargs="?", help="graph6 file (default stdin)")
    p.set_defaults(func=_cmd_props)

    p = sub.add_parser("p2fi", help="2-factor cycle-count parity report")
    p.add_argument("file", nargs="?", help="graph6 file (default stdin)")
    p.set_defaults(func=_cmd_p2fi)

    p = sub.add_parser("aut", help="automorphism group order and structure")
    p.add_argument("file", nargs="?", help="graph6 file (default: the identified graph)")
    p.add_argument("--structure", action="store_true",
                   help="full distinguished-edge group analysis")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("iso", help="isomorphism test between two graphs")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("config", help="point-line configurations")
    p.add_argument("name", choices=sorted(_CONFIGS))
    p.add_argument("--dual", action="store_true")
    p.add_argument("--self-dual", dest="self_dual", action="store_true")
    p.add_argument("--levi", action="store_true", help="emit the Levi graph as graph6")
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=_cmd_config)

    p = sub.add_parser("survey", help="census of all 576 bridge joins")
    p.add_argument("--p2fi", action="store_true",
                   help="also compute parity status per class")
    p.add_argument("--json", dest="json_path", metavar="PATH",
                   help="write the JSON report to PATH instead of stdout")
    p.set_defaults(func=_cmd_survey)

    p = sub.add_parser("refute", help="verify the parity-conjecture refutation")
    p.set_defaults(func=_cmd_refute)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"levibridge: input error: {exc}", file=sys.stderr)
        return 1
    except (StructureError, GraphError, GroupError, ConfigurationError) as exc:
        print(f"levibridge: structural failure: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"levibridge: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
