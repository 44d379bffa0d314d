#!/usr/bin/env python3
"""Potentials: regime constants, vertex weights, and the critical thresholds.

The potential of a vertex set trades vertex weights against internal edges,
so low potential means locally dense. Critical graphs must contain a set at
or below the regime threshold, and the extremal families land exactly on it.
"""

from dpcolor import (
    DefectParams,
    Toughness,
    build_iplusone,
    build_large,
    build_mid,
    build_zeroj,
    potential_threshold,
    regime,
    rho_graph,
    rho_set,
    rho_vertex,
    scalar_constants,
    weight_w,
)

# The regime decides the constants (a, b) and the per-vertex weight formula.
for i, j in [(0, 1), (0, 3), (1, 3), (2, 4), (1, 2), (1, 1)]:
    p = DefectParams(i, j)
    r = regime(p)
    try:
        a, b = scalar_constants(p)
        ws = [weight_w(p, k) for k in range(j + 2)]
        print(f"({i},{j}) {r.value:10} a={a} b={b} weights w_0..w_{j + 1} = {ws}")
    except ValueError as exc:
        print(f"({i},{j}) {r.value:10} {exc}")

# Toughness eats into the weights: a j-tough vertex is one flip from useless.
p = DefectParams(1, 3)
print("\n(1,3) vertex weights by toughness:",
      [rho_vertex(p, Toughness.scalar([k]), 0) for k in range(5)])

# The refined pairs for j = i + 1 weight the larger coordinate more.
p12 = DefectParams(1, 2)
for tp, tr in [(0, 0), (1, 0), (0, 1), (2, 1), (1, 2)]:
    val = rho_vertex(p12, Toughness.pairs([(tp, tr)]), 0)
    print(f"(1,2) rho of a ({tp},{tr})-tough vertex: {val}")

# Every family undercuts its threshold, with the zeroj family exactly on it.
print()
for inst in [build_zeroj(1, 2), build_large(1, 3, 0), build_mid(2, 4, 1)]:
    t = Toughness.zero(inst.graph.n)
    value, argmin = rho_graph(inst.graph, inst.params, t)
    thr = potential_threshold(inst.params)
    print(f"{inst.family}({inst.i},{inst.j},{inst.m}): rho = {value} <= {thr},"
          f" argmin size {len(argmin)} of {inst.graph.n}")

ip = build_iplusone(1, 0)
value, argmin = rho_graph(ip.graph, ip.params, Toughness.zero_pairs(ip.graph.n))
print(f"iplusone(1,0): rho = {value} <= {potential_threshold(ip.params)}")

# Potentials are additive across pieces that share no edges.
g = build_zeroj(1, 2).graph
t = Toughness.zero(g.n)
p01 = DefectParams(0, 1)
print("\nrho of one triangle:", rho_set(g, p01, t, {3, 4, 5}),
      " rho of the whole graph:", rho_set(g, p01, t, range(g.n)))
