"""Command-line driver: generate families, color instances, verify grids.

Exit codes: 0 = query answered (either way), 1 = verification failure in
``verify``, 2 = usage, parse, or budget error. All reports are line-oriented
and deterministic; ``--threads`` never changes the output, only who computes
it.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .constructions import FAMILIES, CountMismatch, build_family
from .cover import DEFAULT_MAX_COVERS, load_cover, save_cover
from .critical import (
    DEFAULT_MAX_SEARCH_VERTICES as SEARCH_MAX_VERTICES,
    fdp_search,
    is_critical,
)
from .graph import (
    BudgetError,
    DefectParams,
    FormatError,
    Multigraph,
    Toughness,
    load_graph,
    save_graph,
)
from .potential import (
    DEFAULT_MAX_VERTICES as POTENTIAL_MAX_VERTICES,
    Regime,
    edge_bound,
    potential_threshold,
    regime,
    rho_graph,
)
from .solver import (
    DEFAULT_MAX_VERTICES as SOLVER_MAX_VERTICES,
    exhaustive_color,
    greedy_color,
    is_colorable,
)
from .sparsity import DEFAULT_MAX_VERTICES as SPARSITY_MAX_VERTICES, violating_subset

DEFAULT_MAX_N = 24
VERIFY_MAX_COVERS = 2**12


def _add_shared(sp: argparse.ArgumentParser, *, lists: bool = False) -> None:
    kind = _int_list if lists else int
    sp.add_argument("--i", type=kind, default=None, help="poor defect bound")
    sp.add_argument("--j", type=kind, default=None, help="rich defect bound")
    sp.add_argument("--m", type=kind, default=None, help="family size parameter")
    sp.add_argument("--graph", default=None, help="graph file path")
    sp.add_argument("--cover", default=None, help="cover file path")
    sp.add_argument(
        "--max-covers",
        type=int,
        default=None,
        help="refuse enumerations beyond this many covers",
    )
    sp.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="refuse per-vertex enumerations beyond this many vertices "
        "(defaults to each operation's own limit)",
    )
    sp.add_argument("--threads", type=int, default=1, help="worker pool size")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="dpcolor",
        description="Defective DP-colorings of multigraphs at desk scale.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a critical family instance")
    gen.add_argument("--family", required=True, choices=FAMILIES)
    _add_shared(gen)

    color = sub.add_parser("color", help="color one graph under one cover")
    color.add_argument(
        "--solver",
        choices=("exhaustive", "greedy"),
        default="exhaustive",
        help="greedy targets the symmetric (i, i) problem with zero toughness",
    )
    _add_shared(color)

    _add_shared(sub.add_parser("colorable", help="decide colorability over all covers"))
    _add_shared(sub.add_parser("critical", help="decide criticality"))
    _add_shared(sub.add_parser("potential", help="minimum potential and its argmin"))

    fdp = sub.add_parser("fdp", help="mine the minimum critical edge count")
    fdp.add_argument("--n", type=int, required=True, help="vertex count")
    fdp.add_argument("--max-edges", type=int, default=10)
    _add_shared(fdp)

    _add_shared(sub.add_parser("sparsity", help="check the colorability guarantee"))

    verify = sub.add_parser("verify", help="verify a family grid against the bounds")
    verify.add_argument("--family", required=True, choices=FAMILIES)
    _add_shared(verify, lists=True)
    return ap


def _require(value, flag: str):
    if value is None:
        raise ValueError(f"missing required flag {flag}")
    return value


def _params(args) -> DefectParams:
    return DefectParams(_require(args.i, "--i"), _require(args.j, "--j"))


def _load(args) -> tuple[Multigraph, Toughness | None]:
    return load_graph(_require(args.graph, "--graph"))


def _max_covers(args, default: int = DEFAULT_MAX_COVERS) -> int:
    return default if args.max_covers is None else args.max_covers


def _max_n(args, default: int) -> int:
    return default if args.max_n is None else args.max_n


def _cmd_gen(args) -> int:
    inst = build_family(args.family, args.i, args.j, args.m)
    print(f"family {inst.family} i={inst.i} j={inst.j} m={inst.m}")
    print(f"predicted n={inst.predicted_n} e={inst.predicted_e}")
    print(f"actual n={inst.graph.n} e={len(inst.graph.edges)}")
    if args.graph:
        save_graph(args.graph, inst.graph)
        print(f"wrote graph {args.graph}")
    if args.cover:
        save_cover(args.cover, inst.bad_cover)
        print(f"wrote cover {args.cover}")
    return 0


def _cmd_color(args) -> int:
    g, t = _load(args)
    c = load_cover(_require(args.cover, "--cover"))
    params = _params(args)
    if args.solver == "greedy":
        if params.i != params.j:
            raise ValueError("greedy targets the symmetric (i, i) problem")
        if t is not None:
            raise ValueError("greedy requires zero toughness; strip t lines")
        phi = greedy_color(g, c, params.i)
        if phi is None:
            print("GREEDY FAILED")
            return 0
    else:
        phi = exhaustive_color(g, c, params, t, max_vertices=_max_n(args, SOLVER_MAX_VERTICES))
        if phi is None:
            print("UNCOLORABLE")
            return 0
    for v, side in enumerate(phi.sides):
        print(f"v {v} {side.letter}")
    return 0


def _cmd_colorable(args) -> int:
    g, t = _load(args)
    ok, witness = is_colorable(
        g, _params(args), t, max_covers=_max_covers(args), threads=args.threads
    )
    if ok:
        print("COLORABLE")
    else:
        print("NOT COLORABLE")
        print(f"witness {witness.letters()}")
    return 0


def _cmd_critical(args) -> int:
    g, t = _load(args)
    ok = is_critical(g, _params(args), t, max_covers=_max_covers(args), threads=args.threads)
    print("CRITICAL" if ok else "NOT CRITICAL")
    return 0


def _cmd_potential(args) -> int:
    g, t = _load(args)
    params = _params(args)
    r = regime(params)
    if t is None:
        t = Toughness.zero_pairs(g.n) if r is Regime.I_PLUS_ONE else Toughness.zero(g.n)
    value, argmin = rho_graph(g, params, t, max_vertices=_max_n(args, POTENTIAL_MAX_VERTICES))
    print(f"regime {r.value}")
    print(f"rho {value}")
    print(f"argmin {' '.join(str(v) for v in sorted(argmin))}")
    return 0


def _cmd_fdp(args) -> int:
    found = fdp_search(
        _params(args),
        args.n,
        args.max_edges,
        max_vertices=_max_n(args, SEARCH_MAX_VERTICES),
        max_covers=_max_covers(args),
        threads=args.threads,
    )
    if found is None:
        print("NONE")
        return 0
    e, g = found
    print(f"fdp {e}")
    print(f"graph {g.n}")
    for u, v in g.edges:
        print(f"e {u} {v}")
    return 0


def _cmd_sparsity(args) -> int:
    g, _ = _load(args)
    params = _params(args)
    bad = violating_subset(g, params, max_vertices=_max_n(args, SPARSITY_MAX_VERTICES))
    if bad is None:
        print("GUARANTEE")
    else:
        print("NO GUARANTEE")
        print(f"violation {' '.join(str(v) for v in sorted(bad))}")
    return 0


def _verify_cell(inst, max_covers: int, max_n: int, threads: int) -> dict[str, str]:
    params = inst.params
    g = inst.graph
    cells: dict[str, str] = {}
    cells["counts"] = (
        "PASS"
        if (g.n, len(g.edges)) == (inst.predicted_n, inst.predicted_e)
        else "FAIL"
    )
    cells["sharp"] = "PASS" if Fraction(len(g.edges)) == edge_bound(params, g.n) else "FAIL"

    if g.n > max_n:
        cells["badcover"] = "SKIP"
    else:
        phi = exhaustive_color(g, inst.bad_cover, params, max_vertices=max_n)
        cells["badcover"] = "PASS" if phi is None else "FAIL"

    if (1 << len(g.edges)) > max_covers or g.n > max_n:
        cells["critical"] = "SKIP"
    else:
        ok = is_critical(g, params, max_covers=max_covers, threads=threads)
        cells["critical"] = "PASS" if ok else "FAIL"

    r = regime(params)
    if r is Regime.EQUAL:
        cells["potential"] = "-"
    elif g.n > max_n:
        cells["potential"] = "SKIP"
    else:
        t = Toughness.zero_pairs(g.n) if r is Regime.I_PLUS_ONE else Toughness.zero(g.n)
        value, _ = rho_graph(g, params, t, max_vertices=max_n)
        cells["potential"] = "PASS" if value <= potential_threshold(params) else "FAIL"
    return cells


def _cmd_verify(args) -> int:
    family = args.family
    i_list = args.i if args.i is not None else [None]
    j_list = args.j if args.j is not None else [None]
    m_list = _require(args.m, "--m")
    max_covers = _max_covers(args, VERIFY_MAX_COVERS)

    failures = 0
    skips = 0
    rows = 0
    for i in i_list:
        for j in j_list:
            for m in m_list:
                inst = build_family(family, i, j, m)
                cells = _verify_cell(inst, max_covers, _max_n(args, DEFAULT_MAX_N), args.threads)
                rows += 1
                failures += sum(1 for v in cells.values() if v == "FAIL")
                skips += sum(1 for v in cells.values() if v == "SKIP")
                detail = " ".join(f"{k}={v}" for k, v in cells.items())
                print(
                    f"{inst.family} i={inst.i} j={inst.j} m={inst.m} "
                    f"n={inst.graph.n} e={len(inst.graph.edges)} {detail}"
                )
    verdict = "PASS" if failures == 0 else "FAIL"
    print(f"VERIFY {verdict} rows={rows} failures={failures} skips={skips}")
    return 0 if failures == 0 else 1


_COMMANDS = {
    "gen": _cmd_gen,
    "color": _cmd_color,
    "colorable": _cmd_colorable,
    "critical": _cmd_critical,
    "potential": _cmd_potential,
    "fdp": _cmd_fdp,
    "sparsity": _cmd_sparsity,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (FormatError, CountMismatch, BudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
