"""Command-line front end.

Exit status: 0 on success, 1 when a checked identity fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path
from typing import Callable

from . import cw as cwmod
from .cycles import MeshContext
from .errors import MeshError
from .flux import best_cheeger_estimate, cheeger_estimate, flux_report
from .graph import Multigraph, count_spanning_trees, parse_graph
from .kirchhoff import verify_all_minors, verify_cone_identity
from .linalg import ExactMatrix, char_poly_exact
from .mesh import build_Y, mesh_laplacian, mesh_laplacian_direct, mesh_matrix, reduced_mesh_matrix
from .polynomial import Polynomial
from .stpoly import st_counts_enum, st_polynomial_dc, st_polynomial_enum, verify_theorem1
from .torsion import lattice_report


class UsageError(Exception):
    pass


def _ids(text: str | None) -> list[int] | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _graph(args) -> Multigraph:
    return parse_graph(_read(args.graph))


def _ctx(args) -> MeshContext:
    g = _graph(args)
    tree = _ids(getattr(args, "tree", None))
    return MeshContext.build(g, tree)


def _jsonable(obj):
    if isinstance(obj, ExactMatrix):
        return [[_jsonable(x) for x in r] for r in obj.rows()]
    if isinstance(obj, Polynomial):
        return obj.to_json()
    if isinstance(obj, Fraction):
        return obj.numerator if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    return obj


def _ctx_echo(ctx: MeshContext) -> dict:
    return {"tree": sorted(ctx.tree), "tree_order": list(ctx.tree_order), "cotree_order": list(ctx.cotree_order)}


def cmd_mesh(args):
    ctx = _ctx(args)
    lap = mesh_laplacian(ctx)
    direct = mesh_laplacian_direct(ctx)
    results = {
        **_ctx_echo(ctx),
        "Y": build_Y(ctx),
        "mesh": mesh_matrix(ctx),
        "reduced_mesh": reduced_mesh_matrix(ctx),
        "mesh_laplacian": lap,
        "mesh_laplacian_direct": direct,
        "direct_matches": lap == direct,
    }
    return results, lap == direct


def cmd_charpoly(args):
    ctx = _ctx(args)
    results = {
        **_ctx_echo(ctx),
        "charpoly_mesh": char_poly_exact(mesh_matrix(ctx)),
        "charpoly_reduced_mesh": char_poly_exact(reduced_mesh_matrix(ctx)),
    }
    return results, True


def cmd_stpoly(args):
    g = _graph(args)
    h = _ids(args.subgraph)
    for eid in h:
        if not g.has_edge(eid):
            raise UsageError(f"subgraph edge {eid} is not in the graph")
    dc = st_polynomial_dc(g, h)
    en = st_polynomial_enum(g, h)
    results = {
        "subgraph": sorted(set(h)),
        "st_counts": st_counts_enum(g, h),
        "st_polynomial_dc": dc,
        "st_polynomial_enum": en,
        "agree": dc == en,
    }
    return results, dc == en


def cmd_count_trees(args):
    return {"count": count_spanning_trees(_graph(args))}, True


def cmd_kirchhoff(args):
    report = verify_cone_identity(_graph(args))
    return report.to_dict(), report.ok


def cmd_allminors(args):
    report = verify_all_minors(_graph(args))
    return report.to_dict(), report.ok


def cmd_torsion(args):
    ctx = _ctx(args)
    report = lattice_report(ctx)
    return {**_ctx_echo(ctx), **report.to_dict()}, report.ok


def cmd_flux(args):
    ctx = _ctx(args)
    report = flux_report(ctx)
    results = {**_ctx_echo(ctx), **report.to_dict()}
    w = report.w
    chosen = _ids(args.partition)
    if chosen is not None:
        parts = [[v for v in comp if v in set(chosen)] for comp in w.components]
        est = cheeger_estimate(w, parts)
        results["partition"] = parts
    elif w.vertices:
        est, parts = best_cheeger_estimate(w)
        results["partition"] = parts
    else:
        est = None
    results["cheeger_estimate"] = est
    results["half_lambda"] = None if report.lam is None else report.lam / 2
    return results, True


def cmd_cw(args):
    x = cwmod.parse_complex(_read(args.complex))
    forest = _ids(args.forest)
    if forest is None:
        forest = list(cwmod.enumerate_spanning_forests(x)[0])
    if not cwmod.is_spanning_forest(x, forest):
        raise UsageError(f"{forest} is not a spanning forest")
    checks = ["star", "higher", "integral"] if args.check == "all" else [args.check]
    results = {
        "cell_counts": x.cell_counts,
        "forest": sorted(forest),
        "torsion_forest": cwmod.torsion_order(x, forest),
        "torsion_full": cwmod.torsion_order(x),
        "geometric_mesh": cwmod.geometric_mesh(x, forest).mesh,
    }
    ok = True
    runners: dict[str, Callable] = {
        "star": cwmod.verify_star,
        "higher": cwmod.verify_theorem_higher,
        "integral": cwmod.integral_mesh_ratio,
    }
    for name in checks:
        report = runners[name](x, forest)
        results[name] = report.to_dict()
        ok = ok and report.ok
    return results, ok


def cmd_verify(args):
    ctx = _ctx(args)
    report = verify_theorem1(ctx, minors=args.minors)
    return report.to_dict(), report.ok


COMMANDS = {
    "mesh": cmd_mesh,
    "charpoly": cmd_charpoly,
    "stpoly": cmd_stpoly,
    "count-trees": cmd_count_trees,
    "kirchhoff": cmd_kirchhoff,
    "allminors": cmd_allminors,
    "torsion": cmd_torsion,
    "flux": cmd_flux,
    "cw": cmd_cw,
    "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="meshmatrix", description="Exact mesh matrices of graphs and CW complexes.")
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report on stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds in the report")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_cmd(name, help_, tree=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("graph", help="graph file ('v <n>' then 'e <tail> <head>' lines)")
        if tree:
            p.add_argument("--tree", help="spanning tree edge ids, comma separated (default: deterministic tree)")
        return p

    graph_cmd("mesh", "Y, mesh matrix, reduced mesh matrix and mesh Laplacian")
    graph_cmd("charpoly", "characteristic polynomials of the mesh and reduced mesh matrices")
    p = graph_cmd("stpoly", "spanning-tree polynomial ST(G, H)", tree=False)
    p.add_argument("--subgraph", required=True, help="edge ids of H, comma separated")
    graph_cmd("count-trees", "number of spanning trees", tree=False)
    graph_cmd("kirchhoff", "Kirchhoff Laplacian against the cone's mesh Laplacian", tree=False)
    graph_cmd("allminors", "rooted forests, cone trees and Laplacian coefficients", tree=False)
    graph_cmd("torsion", "order of the cycle/coboundary lattice quotient")
    p = graph_cmd("flux", "smallest positive eigenvalues of the mesh Laplacian and of W")
    p.add_argument("--partition", help="W-vertex indices forming the C[k], comma separated")
    p = graph_cmd("verify", "check the characteristic polynomial identity end to end")
    p.add_argument("--minors", action="store_true", help="also check the principal minor expansion")
    p = sub.add_parser("cw", parents=[common], help="mesh identities of a CW complex")
    p.add_argument("complex", help="complex file ('dim <d>' then boundary blocks)")
    p.add_argument("--forest", help="top-cell indices of the spanning forest V0 (default: first forest)")
    p.add_argument("--check", choices=["star", "higher", "integral", "all"], default="all")
    return parser


def _human(value, indent: str = "") -> str:
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, dict):
                lines.append(f"{indent}{k}:")
                lines.append(_human(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_human(v)}")
        return "\n".join(lines)
    if isinstance(value, ExactMatrix):
        return "[" + "; ".join(" ".join(str(x) for x in r) for r in value.rows()) + "]"
    if isinstance(value, Polynomial):
        return str(value)
    return str(value)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        start = time.perf_counter()
        results, ok = COMMANDS[args.command](args)
        elapsed = time.perf_counter() - start
    except (UsageError, MeshError, KeyError) as exc:
        msg = exc.args[0] if exc.args else exc
        print(f"meshmatrix: error: {msg}", file=sys.stderr)
        return 2

    if args.json:
        report = {"command": args.command, "inputs": _inputs(args), **_jsonable(results)}
        if args.timing:
            report["timing"] = elapsed
        print(json.dumps(report, sort_keys=True, indent=2))
    elif args.command == "count-trees":
        print(results["count"])
    else:
        print(_human(results))
        if args.timing:
            print(f"timing: {elapsed:.6f}s")
    return 0 if ok else 1


def _inputs(args) -> dict:
    skip = {"json", "timing", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


if __name__ == "__main__":
    sys.exit(main())
