from __future__ import annotations

from hypothesis import strategies as st

from dpcolor import Cover, DefectParams, Multigraph, Parity

SMALL_PARAMS = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (1, 3), (2, 2), (2, 4)]


@st.composite
def multigraphs(draw, max_n: int = 6, max_edges: int = 8, min_n: int = 0):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return Multigraph(n, ())
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=max_edges))
    return Multigraph(n, tuple(edges))


@st.composite
def graph_cover_pairs(draw, max_n: int = 6, max_edges: int = 8, min_n: int = 0):
    g = draw(multigraphs(max_n=max_n, max_edges=max_edges, min_n=min_n))
    parities = draw(
        st.lists(
            st.sampled_from((Parity.EVEN, Parity.ODD)),
            min_size=len(g.edges),
            max_size=len(g.edges),
        )
    )
    return g, Cover(tuple(parities))


@st.composite
def defect_params(draw, include_zero_zero: bool = True):
    choices = SMALL_PARAMS if include_zero_zero else SMALL_PARAMS[1:]
    i, j = draw(st.sampled_from(choices))
    return DefectParams(i, j)


@st.composite
def bounded_degree_graphs(draw, degree_cap: int, max_n: int = 7, max_edges: int = 10):
    """Multigraphs in which every vertex degree stays within degree_cap."""
    n = draw(st.integers(1, max_n))
    deg = [0] * n
    edges: list[tuple[int, int]] = []
    for _ in range(draw(st.integers(0, max_edges))):
        room = [(u, v) for u in range(n) for v in range(u + 1, n) if deg[u] < degree_cap and deg[v] < degree_cap]
        if not room:
            break
        u, v = draw(st.sampled_from(room))
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    return Multigraph(n, tuple(edges))
