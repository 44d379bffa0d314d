"""Coloring existence: branch-and-bound per cover, greedy repair, all-cover scans."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from .cover import (
    DEFAULT_MAX_COVERS,
    Cover,
    PhiMap,
    Side,
    cover_from_index,
    is_valid_coloring,
)
from .graph import BudgetError, DefectParams, Multigraph, Toughness

DEFAULT_MAX_VERTICES = 32


class _Search:
    """Reusable branch-and-bound state for one (graph, params, toughness).

    Vertices are assigned in descending-degree order (ties by id), rich side
    first. A branch dies as soon as any assigned vertex's conflict count over
    decided edges exceeds its cap; counts only grow deeper in the tree, so the
    prune is sound and the first leaf reached is the deterministic witness.
    """

    def __init__(self, g: Multigraph, params: DefectParams, t: Toughness):
        self.n = g.n
        self.incident = g.incidence()
        deg = [len(inc) for inc in self.incident]
        self.order = sorted(range(g.n), key=lambda v: (-deg[v], v))
        # cap[v][side], indexed by the Side integer (RICH = 0, POOR = 1)
        self.cap = [(params.j - t.rich[v], params.i - t.poor[v]) for v in range(g.n)]

    def run(self, parity_bits: Sequence[int]) -> list[int] | None:
        sides = [-1] * self.n
        conf = [0] * self.n
        incident = self.incident
        cap = self.cap
        order = self.order

        def assign(pos: int) -> bool:
            if pos == len(order):
                return True
            v = order[pos]
            for s in (0, 1):
                cap_v = cap[v][s]
                if cap_v < 0:
                    continue
                mine = 0
                bumped: list[int] = []
                ok = True
                for u, e in incident[v]:
                    su = sides[u]
                    if su < 0:
                        continue
                    if parity_bits[e] ^ s ^ su == 0:
                        mine += 1
                        if mine > cap_v:
                            ok = False
                            break
                        conf[u] += 1
                        bumped.append(u)
                        if conf[u] > cap[u][su]:
                            ok = False
                            break
                if ok:
                    sides[v] = s
                    conf[v] = mine
                    if assign(pos + 1):
                        return True
                    sides[v] = -1
                    conf[v] = 0
                for u in bumped:
                    conf[u] -= 1
            return False

        return sides if assign(0) else None


def _prepared(
    g: Multigraph, params: DefectParams, t: Toughness | None
) -> tuple[_Search, Toughness]:
    if t is None:
        t = Toughness.zero(g.n)
    t.check(params, g.n)
    return _Search(g, params, t), t


def exhaustive_color(
    g: Multigraph,
    c: Cover,
    params: DefectParams,
    t: Toughness | None = None,
    *,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> PhiMap | None:
    """A valid map for this cover, or None when none exists.

    Existence agrees with brute force over all 2^n side vectors; the returned
    witness is the first one in the deterministic branch order.
    """
    if g.n > max_vertices:
        raise BudgetError(f"graph has {g.n} vertices, limit is {max_vertices}")
    if len(c.parities) != len(g.edges):
        raise ValueError(f"cover indexes {len(c.parities)} edges, graph has {len(g.edges)}")
    search, _ = _prepared(g, params, t)
    sides = search.run([int(p) for p in c.parities])
    if sides is None:
        return None
    return PhiMap(tuple(Side(s) for s in sides))


def brute_force_color(
    g: Multigraph,
    c: Cover,
    params: DefectParams,
    t: Toughness | None = None,
) -> PhiMap | None:
    """Reference scan over all 2^n side vectors in mask order (bit v set = poor)."""
    for mask in range(1 << g.n):
        phi = PhiMap(tuple(Side((mask >> v) & 1) for v in range(g.n)))
        if is_valid_coloring(g, c, phi, params, t):
            return phi
    return None


def greedy_color(g: Multigraph, c: Cover, i: int) -> PhiMap | None:
    """Flip-repair for the symmetric (i, i) problem with zero toughness.

    Starts all-rich; while some vertex has more than i conflicts, flips the
    lowest-id such vertex provided the flip strictly lowers the number of
    conflicting edge instances, and gives up otherwise. Each incident edge
    conflicts with exactly one of the two sides, so a flip replaces c
    conflicts at v with d(v) - c; whenever every degree is at most 2i + 1 the
    flip always improves and the repair is guaranteed to finish. The total
    strictly drops at each step, so there are at most |E| flips.
    """
    if i < 0:
        raise ValueError("defect bound i must be non-negative")
    if len(c.parities) != len(g.edges):
        raise ValueError(f"cover indexes {len(c.parities)} edges, graph has {len(g.edges)}")
    bits = [int(p) for p in c.parities]
    incident = g.incidence()
    sides = [0] * g.n
    conf = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        if bits[e] ^ sides[u] ^ sides[v] == 0:
            conf[u] += 1
            conf[v] += 1
    while True:
        v = next((w for w in range(g.n) if conf[w] >= i + 1), None)
        if v is None:
            return PhiMap(tuple(Side(s) for s in sides))
        flipped = len(incident[v]) - conf[v]
        if flipped >= conf[v]:
            return None
        sides[v] ^= 1
        for u, e in incident[v]:
            if bits[e] ^ sides[v] ^ sides[u] == 0:
                conf[u] += 1
            else:
                conf[u] -= 1
        conf[v] = flipped


def is_colorable(
    g: Multigraph,
    params: DefectParams,
    t: Toughness | None = None,
    *,
    max_covers: int = DEFAULT_MAX_COVERS,
    threads: int = 1,
) -> tuple[bool, Cover | None]:
    """Whether every cover admits a coloring.

    Returns (True, None), or (False, w) where w is the lexicographically
    first cover with no coloring. Workers scan disjoint index ranges and the
    reduction keeps the smallest failing index, so the witness does not
    depend on the thread count.
    """
    m = len(g.edges)
    if (1 << m) > max_covers:
        raise BudgetError(f"2^{m} covers exceed the limit of {max_covers}")
    search, _ = _prepared(g, params, t)
    total = 1 << m

    def first_failure(lo: int, hi: int) -> int | None:
        for k in range(lo, hi):
            bits = [(k >> (m - 1 - e)) & 1 for e in range(m)]
            if search.run(bits) is None:
                return k
        return None

    if threads <= 1 or total <= 1:
        bad = first_failure(0, total)
    else:
        workers = min(threads, total)
        step = -(-total // workers)
        ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda r: first_failure(*r), ranges))
        bad = min((r for r in results if r is not None), default=None)
    if bad is None:
        return True, None
    return False, cover_from_index(m, bad)


def partition_witness(g: Multigraph, i: int, a_set: Iterable[int]) -> int | None:
    """A vertex v outside A with (i+1)·d_A(v) + d_B(v) >= 2i + 2, or None.

    Degrees count edge instances. Such a vertex exists for every partition of
    an (i, i)-critical graph, which makes this a handy criticality probe.
    """
    if i < 0:
        raise ValueError("defect bound i must be non-negative")
    a = set(a_set)
    for v in a:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range [0, {g.n})")
    if not a or len(a) >= g.n:
        raise ValueError("A must be a nonempty proper subset of the vertices")
    for v in sorted(set(range(g.n)) - a):
        d_a = d_b = 0
        for u, w in g.edges:
            if u == v or w == v:
                other = w if u == v else u
                if other in a:
                    d_a += 1
                else:
                    d_b += 1
        if (i + 1) * d_a + d_b >= 2 * i + 2:
            return v
    return None
