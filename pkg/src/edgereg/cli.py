"""Command-line front end.

Verbs: classify, nu, reg, power-reg, lozin, colon, oracle, verify, gen.
Exit codes: 0 success/agreement, 1 verification mismatch, 2 input error,
3 resource cap exceeded.  JSON output carries "schema": "edgereg/1".
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys

from . import verify as verify_mod
from .graphs import Graph, GraphError, classify, dumbbell_graph
from .ideals import (
    IdealError,
    banerjee_graph,
    colon_by_monomial,
    edge_ideal,
    even_connections,
    power,
)
from .lozin import bridge_lozin
from .matching import induced_matching_number
from .oracle import (
    OracleCapError,
    regularity_oracle,
    regularity_oracle_squarefree,
)
from .regularity import bounds, compute_regularity, reg_dumbbell_power

SCHEMA = "edgereg/1"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2
EXIT_CAP = 3


class CliInputError(Exception):
    pass


def _emit(payload: dict, as_json: bool = True):
    payload = {"schema": SCHEMA, **payload}
    print(json.dumps(payload, indent=2, default=str))


def _load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from exc
    try:
        if path.endswith(".json"):
            return Graph.from_json_dict(json.loads(text))
        return Graph.from_edge_list(text)
    except (GraphError, json.JSONDecodeError, KeyError) as exc:
        raise CliInputError(f"{path}: {exc}") from exc


def _shape_dict(shape) -> dict:
    return {
        "n": shape.n,
        "m": shape.m,
        "l": shape.l,
        "cycle1": list(shape.cycle1),
        "cycle2": list(shape.cycle2),
        "bridge": list(shape.bridge),
        "swapped": shape.swapped,
    }


def _max_vars(args) -> int | None:
    if getattr(args, "max_vars", None) is not None:
        return args.max_vars
    env = os.environ.get("EDGEREG_MAX_VARS")
    return int(env) if env else None


def cmd_classify(args) -> int:
    G = _load_graph(args.input)
    cls = classify(G)
    out = {"class": cls.kind}
    if cls.cycle:
        out["cycle"] = list(cls.cycle)
    if cls.shape:
        out["shape"] = _shape_dict(cls.shape)
    if cls.reason:
        out["reason"] = cls.reason
    _emit(out)
    return EXIT_OK


def cmd_nu(args) -> int:
    G = _load_graph(args.input)
    res = induced_matching_number(G)
    _emit({"nu": res.size, "witness": [list(e) for e in res.witness]})
    return EXIT_OK


def cmd_reg(args) -> int:
    G = _load_graph(args.input)
    res = compute_regularity(G)
    b = bounds(G)
    out = {
        "reg": res.reg_ideal,
        "nu": b.nu,
        "method": res.method,
        "witnesses": res.witnesses,
        "bounds": dataclasses.asdict(b),
    }
    if args.oracle:
        orc, table = regularity_oracle_squarefree(
            edge_ideal(G), field_name=args.field, max_vars=_max_vars(args)
        )
        out["oracle_reg"] = orc.reg_ideal
        out["oracle_field"] = args.field
        if args.csv:
            with open(args.csv, "w") as fh:
                fh.write(table.to_csv())
            out["betti_csv"] = args.csv
        if orc.reg_ideal != res.reg_ideal:
            out["mismatch"] = True
            _emit(out)
            return EXIT_MISMATCH
    _emit(out)
    return EXIT_OK


def cmd_power_reg(args) -> int:
    G = _load_graph(args.input)
    q = args.q
    nu = induced_matching_number(G).size
    out = {"q": q, "nu": nu, "power_lower_bound": 2 * q + nu - 1}
    cls = classify(G)
    closed = None
    if q == 1:
        try:
            closed = compute_regularity(G).reg_ideal
            out["closed_form"] = closed
            out["method"] = "reg"
        except GraphError:
            pass
    elif (
        cls.kind == "Bicyclic"
        and cls.shape.l <= 2
        and cls.shape.n + cls.shape.m + cls.shape.l - 2 == G.n
    ):
        closed = reg_dumbbell_power(cls.shape.n, cls.shape.m, cls.shape.l, q)
        out["closed_form"] = closed
        out["method"] = "DumbbellPower"
    else:
        out["closed_form_refused"] = (
            "power closed form only established for bare dumbbells with l <= 2"
        )
    if args.oracle or closed is None:
        try:
            orc = regularity_oracle(
                power(edge_ideal(G), q), field_name=args.field,
                max_vars=_max_vars(args), budget=args.budget,
            )
            out["oracle_reg"] = orc.reg_ideal
            out["oracle_partial"] = orc.witnesses.get("partial", False)
            if closed is not None and orc.reg_ideal != closed and not out["oracle_partial"]:
                out["mismatch"] = True
                _emit(out)
                return EXIT_MISMATCH
        except (OracleCapError, IdealError) as exc:
            if closed is None:
                out["error"] = str(exc)
                _emit(out)
                return EXIT_CAP
            out["oracle_skipped"] = str(exc)
    _emit(out)
    return EXIT_OK


def cmd_lozin(args) -> int:
    G = _load_graph(args.input)
    L = bridge_lozin(G, index=args.bridge_index)
    out = {"graph": L.to_json_dict(), "class": classify(L).kind}
    shape = classify(L).shape
    if shape:
        out["shape"] = _shape_dict(shape)
    _emit(out)
    return EXIT_OK


def cmd_colon(args) -> int:
    G = _load_graph(args.input)
    M_edges = []
    for tok in args.edges.split(","):
        u, _, v = tok.partition("-")
        if not G.has_edge(u, v):
            raise CliInputError(f"{tok!r} is not an edge of the graph")
        M_edges.append((u, v))
    q = len(M_edges)
    I = edge_ideal(G)
    M = I.monomial({})
    for u, v in M_edges:
        M = tuple(a + b for a, b in zip(M, I.monomial({u: 1, v: 1})))
    col = colon_by_monomial(power(I, q + 1), M)
    conns = even_connections(G, M_edges)
    Gp = banerjee_graph(G, M_edges)
    _emit(
        {
            "colon_generators": col.gen_strings(),
            "max_degree": col.max_degree(),
            "even_connections": [
                {"u": ec.u, "v": ec.v, "path": list(ec.path)} for ec in conns
            ],
            "banerjee_graph": Gp.to_json_dict(),
        }
    )
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = _load_graph(args.input)
    I = edge_ideal(G)
    res, table = regularity_oracle_squarefree(
        I, field_name=args.field, max_vars=_max_vars(args), budget=args.budget
    )
    out = {
        "oracle_reg": res.reg_ideal,
        "field": args.field,
        "partial": table.partial,
        "subsets_visited": table.subsets_visited,
        "betti": [
            {"i": i, "j": j, "rank": r} for (i, j), r in sorted(table.entries.items())
        ],
    }
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(table.to_csv())
        out["betti_csv"] = args.csv
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    suite = verify_mod.SUITES.get(args.suite)
    if suite is None:
        raise CliInputError(
            f"unknown suite {args.suite!r}; choose from {sorted(verify_mod.SUITES)}"
        )
    kwargs = {}
    if args.suite in ("dumbbell-reg", "lozin", "bicyclic-reg", "bounds", "powers"):
        kwargs["jobs"] = args.jobs
    if args.suite in ("bicyclic-reg", "bounds") and args.seed is not None:
        kwargs["seed"] = args.seed
    if args.suite == "dumbbell-reg":
        if args.n:
            kwargs["nm_range"] = args.n
        if args.l:
            kwargs["l_range"] = args.l
    rep = suite(**kwargs)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(rep.to_csv())
    _emit(rep.to_json_dict())
    return EXIT_OK if rep.ok else EXIT_MISMATCH


def cmd_gen(args) -> int:
    config = verify_mod.GeneratorConfig(
        seed=args.seed,
        n_range=args.n or (3, 7),
        m_range=args.m or (3, 7),
        l_range=args.l or (1, 4),
        leaves_range=args.leaves or (0, 3),
        max_vertices=args.max_vertices,
    )
    graphs = verify_mod.generate_bicyclic(config, args.count)
    paths = []
    for idx, G in enumerate(graphs):
        path = os.path.join(args.out_dir, f"bicyclic-{args.seed}-{idx}.edges")
        with open(path, "w") as fh:
            fh.write(G.to_edge_list())
        paths.append(path)
    _emit({"files": paths, "count": len(paths)})
    return EXIT_OK


def _range_arg(text: str) -> tuple[int, int]:
    if ".." in text:
        a, b = text.split("..", 1)
        return int(a), int(b)
    v = int(text)
    return v, v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="edgereg",
        description="Regularity of edge ideals of bicyclic graphs: closed forms + homology oracle",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph_input=True):
        if graph_input:
            sp.add_argument("-i", "--input", required=True, help="graph file (edge list or .json)")
        sp.add_argument("--json", action="store_true", help="JSON output (always on; accepted for compatibility)")
        sp.add_argument("--field", choices=("gf2", "q"), default="gf2")
        sp.add_argument("--max-vars", type=int, default=None)
        sp.add_argument("--budget", type=int, default=None)
        sp.add_argument("--csv", default=None)

    sp = sub.add_parser("classify", help="forest / unicyclic / bicyclic-with-dumbbell")
    common(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("nu", help="induced matching number with witness")
    common(sp)
    sp.set_defaults(fn=cmd_nu)

    sp = sub.add_parser("reg", help="closed-form regularity (optionally cross-checked)")
    common(sp)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(fn=cmd_reg)

    sp = sub.add_parser("power-reg", help="regularity of I(G)^q")
    common(sp)
    sp.add_argument("-q", type=int, required=True)
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(fn=cmd_power_reg)

    sp = sub.add_parser("lozin", help="stretch a bridge vertex")
    common(sp)
    sp.add_argument("--bridge-index", type=int, default=0)
    sp.set_defaults(fn=cmd_lozin)

    sp = sub.add_parser("colon", help="colon ideal (I^{q+1}:M) and the associated graph G'")
    common(sp)
    sp.add_argument("--edges", required=True, help="comma-separated edge product, e.g. x1-x2,x2-x3")
    sp.set_defaults(fn=cmd_colon)

    sp = sub.add_parser("oracle", help="Hochster-formula Betti table and regularity")
    common(sp)
    sp.set_defaults(fn=cmd_oracle)

    sp = sub.add_parser("verify", help="run a verification sweep")
    common(sp, graph_input=False)
    sp.add_argument("suite")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--n", type=_range_arg, default=None)
    sp.add_argument("--m", type=_range_arg, default=None)
    sp.add_argument("--l", type=_range_arg, default=None)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("gen", help="seeded random bicyclic graph files")
    common(sp, graph_input=False)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--n", type=_range_arg, default=None)
    sp.add_argument("--m", type=_range_arg, default=None)
    sp.add_argument("--l", type=_range_arg, default=None)
    sp.add_argument("--leaves", type=_range_arg, default=None)
    sp.add_argument("--max-vertices", type=int, default=None)
    sp.add_argument("--out-dir", default=".")
    sp.set_defaults(fn=cmd_gen)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (CliInputError, GraphError, IdealError) as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)}), file=sys.stderr)
        return EXIT_INPUT
    except OracleCapError as exc:
        print(json.dumps({"schema": SCHEMA, "error": str(exc)}), file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
