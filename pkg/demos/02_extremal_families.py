#!/usr/bin/env python3
"""The five extremal families and their non-colorable covers.

Each generator returns a graph whose edge count sits exactly on the regime's
lower bound, together with the cover that defeats every map. The flags do the
heavy lifting: a flag pairs one even and one odd matching, so its base always
absorbs exactly one conflict per flag, no matter which sides are chosen.
"""

from dpcolor import (
    build_equal,
    build_iplusone,
    build_large,
    build_mid,
    build_zeroj,
    edge_bound,
    exhaustive_color,
)

instances = [
    build_zeroj(1, 2),      # (0,1): cycle plus one triangle hung off v0
    build_zeroj(2, 1),      # (0,2): digon cycle plus two triangles
    build_large(1, 3, 0),   # (1,3): path end loaded with three flags
    build_mid(2, 4, 1),     # (2,4): alternating path, flags at even spots
    build_iplusone(1, 0),   # (1,2): weak flags of weight 2
    build_equal(1, 2),      # (1,1): 4-cycle with a flag at each even vertex
]

print(f"{'family':10} {'(i,j,m)':10} {'n':>3} {'e':>3} {'bound':>7} sharp  bad cover")
for inst in instances:
    n, e = inst.graph.n, len(inst.graph.edges)
    bound = edge_bound(inst.params, n)
    refused = exhaustive_color(inst.graph, inst.bad_cover, inst.params) is None
    print(
        f"{inst.family:10} ({inst.i},{inst.j},{inst.m}):   {n:>3} {e:>3} {str(bound):>7} "
        f"{str(e == bound):5}  {'refused' if refused else 'COLORED?!'}"
    )

# The flag mechanics, explicitly: attach a flag and watch the degrees.
from dpcolor import Multigraph, attach_flag, attach_weak_flag

g = Multigraph(1, ())
g, u = attach_flag(g, 0)
print(f"\nflag at a lone vertex: n={g.n}, e={len(g.edges)}, "
      f"base degree {g.degree(0)}, flag degree {g.degree(u)}")

g = attach_weak_flag(Multigraph(1, ()), 0, weight=2)
print(f"weak flag of weight 2: n={g.n}, e={len(g.edges)}, base degree {g.degree(0)}")
