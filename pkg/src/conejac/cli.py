"""Command-line front end.

Commands: ``invariants``, ``fastpath``, ``closed-form``, ``oracle``.
Exit codes: 0 success, 1 verification mismatch, 2 parse/usage error,
3 enumeration guard violation.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import closed_forms, invariants
from .circulant_fastpath import cone_jacobian_fastpath
from .exact_linalg import AbelianGroup, IntMatrix, determinant
from .graph_core import (
    CirculantSpec,
    CobordismSpec,
    Multigraph,
    build_graph,
    circulant,
    cobordism,
    laplacian,
    load_edge_list,
    parse_graph_spec,
)
from .oracle import (
    EnumerationLimitError,
    bijection_check,
    enumerate_rooted_forests,
    enumerate_spanning_trees,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_GUARD = 3


class _ParseFailure(Exception):
    pass


def _resolve_graph(args) -> tuple[Multigraph, str]:
    """Return (graph, input label) from a spec string or --edges file."""
    if args.edges is not None:
        try:
            return load_edge_list(args.edges), str(args.edges)
        except (OSError, ValueError) as exc:
            raise _ParseFailure(f"cannot read edge list {args.edges}: {exc}") from exc
    if args.spec is None:
        raise _ParseFailure("provide a spec string (e.g. C6(1,3)) or --edges FILE")
    try:
        spec = parse_graph_spec(args.spec)
        return build_graph(spec), str(spec)
    except ValueError as exc:
        raise _ParseFailure(str(exc)) from exc


def _emit(record: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(record, separators=(",", ":")))
    else:
        for key, value in record.items():
            if isinstance(value, dict) and "torsion" in value:
                value = AbelianGroup(tuple(value["torsion"]), value["free_rank"])
            print(f"{key}: {value}")


def _group_field(grp: AbelianGroup, as_json: bool):
    return grp.to_dict() if as_json else grp.describe()


def cmd_invariants(args) -> int:
    g, label = _resolve_graph(args)
    record: dict = {"input": label}
    record["tau"] = invariants.tree_count(g)
    record["forest_count"] = invariants.forest_count(g)
    record["jacobian"] = _group_field(invariants.jacobian(g), args.json)
    record["forest_group"] = _group_field(invariants.forest_group(g), args.json)
    if args.cone:
        record["cone_tau"] = invariants.cone_tree_count(g)
        record["cone_jacobian"] = _group_field(invariants.cone_jacobian(g), args.json)
    _emit(record, args.json)
    return EXIT_OK


def cmd_fastpath(args) -> int:
    try:
        spec = parse_graph_spec(args.spec)
    except ValueError as exc:
        raise _ParseFailure(str(exc)) from exc
    t0 = time.perf_counter()
    try:
        result = cone_jacobian_fastpath(spec)
    except ValueError as exc:
        raise _ParseFailure(str(exc)) from exc
    fast_time = time.perf_counter() - t0
    record: dict = {
        "input": str(spec),
        "cone_jacobian": _group_field(result.group, args.json),
        "path": result.theorem,
    }
    if args.verify:
        g = build_graph(spec)
        t0 = time.perf_counter()
        direct = invariants.forest_group(g)
        direct_time = time.perf_counter() - t0
        record["verified"] = direct == result.group
        if not args.json:
            record["direct_forest_group"] = direct.describe()
            record["fastpath_seconds"] = f"{fast_time:.6f}"
            record["direct_seconds"] = f"{direct_time:.6f}"
        if direct != result.group:
            _emit(record, args.json)
            print(
                f"MISMATCH: fast path gave {result.group.describe()}, "
                f"direct computation gave {direct.describe()}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
    _emit(record, args.json)
    return EXIT_OK


def cmd_closed_form(args) -> int:
    family = args.family
    n = args.n
    try:
        if family == "wheel":
            count = closed_forms.wheel_tree_count(n)
            group = closed_forms.wheel_jacobian(n)
        elif family == "mobius-cone":
            count = closed_forms.mobius_cone_tree_count(n)
            group = None
        else:  # prism-cone
            count = closed_forms.prism_cone_tree_count(n)
            group = None
    except ValueError as exc:
        raise _ParseFailure(str(exc)) from exc
    record: dict = {"input": f"{family} n={n}", "cone_tau": count}
    if group is not None:
        record["cone_jacobian"] = _group_field(group, args.json)
    if args.verify:
        if family == "wheel":
            g = circulant(CirculantSpec(n, (1,)))
        elif family == "mobius-cone":
            g = circulant(CirculantSpec(2 * n, (1, n)))
        else:
            g = cobordism(CobordismSpec(n, (1,), (1,)))
        direct = determinant(IntMatrix.identity(g.n_vertices) + laplacian(g))
        ok = direct == count
        if group is not None:
            ok = ok and invariants.forest_group(g) == group
        record["verified"] = ok
        if not ok:
            _emit(record, args.json)
            print(
                f"MISMATCH: closed form gave {count}, determinant path gave {direct}",
                file=sys.stderr,
            )
            return EXIT_MISMATCH
    _emit(record, args.json)
    return EXIT_OK


def cmd_oracle(args) -> int:
    g, label = _resolve_graph(args)
    trees = enumerate_spanning_trees(g)
    forests = enumerate_rooted_forests(g)
    report = bijection_check(g)
    tau = invariants.tree_count(g)
    fcount = invariants.forest_count(g)
    agree = trees == tau and forests == fcount and report.is_bijection
    record: dict = {
        "input": label,
        "tau": trees,
        "forest_count": forests,
        "path": "enumeration",
        "verified": agree,
    }
    if not args.json:
        record["kirchhoff_tau"] = tau
        record["determinant_forest_count"] = fcount
        record["bijection"] = "OK" if report.is_bijection else "FAILED"
    _emit(record, args.json)
    if not agree:
        print(
            f"MISMATCH: enumeration ({trees} trees, {forests} rooted forests, "
            f"bijection {'ok' if report.is_bijection else 'broken'}) vs "
            f"algebraic ({tau} trees, {fcount} rooted forests)",
            file=sys.stderr,
        )
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conejac",
        description="Exact spanning-tree/forest counts and Jacobians of graph "
        "cones, with circulant companion-matrix fast paths.",
    )
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for randomized corpora (reserved; current commands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="tau, forest count, Jacobian, forest group")
    p_inv.add_argument("spec", nargs="?", help="graph spec string, e.g. C6(1,3) or COB3(1|1)")
    p_inv.add_argument("--edges", metavar="FILE", help="edge-list file ('n m' then 'u v' lines)")
    p_inv.add_argument("--cone", action="store_true", help="also report cone invariants")
    p_inv.add_argument("--json", action="store_true", help="single-line JSON output")
    p_inv.set_defaults(func=cmd_invariants)

    p_fast = sub.add_parser("fastpath", help="cone Jacobian via companion-matrix theorems")
    p_fast.add_argument("spec", help="circulant or cobordism spec string")
    p_fast.add_argument("--verify", action="store_true", help="cross-check against I+L cokernel")
    p_fast.add_argument("--json", action="store_true")
    p_fast.set_defaults(func=cmd_fastpath)

    p_cf = sub.add_parser("closed-form", help="closed-form counts for named families")
    p_cf.add_argument("family", choices=["wheel", "mobius-cone", "prism-cone"])
    p_cf.add_argument("n", type=int)
    p_cf.add_argument("--verify", action="store_true", help="cross-check against determinant path")
    p_cf.add_argument("--json", action="store_true")
    p_cf.set_defaults(func=cmd_closed_form)

    p_or = sub.add_parser("oracle", help="brute-force enumeration and bijection check")
    p_or.add_argument("spec", nargs="?", help="graph spec string")
    p_or.add_argument("--edges", metavar="FILE")
    p_or.add_argument("--json", action="store_true")
    p_or.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
