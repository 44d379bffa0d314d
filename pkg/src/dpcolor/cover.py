"""Two-fold covers as per-edge parity vectors, vertex side choices, validity.

Each vertex owns a two-element list {poor, rich}; each edge instance carries a
perfect matching between the endpoint lists, fully determined by its parity:
an even matching joins equal sides (poor-poor and rich-rich), an odd one joins
opposite sides. The cover graph itself is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from typing import Iterator

from .graph import BudgetError, DefectParams, FormatError, Multigraph, Toughness

DEFAULT_MAX_COVERS = 2**24


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    @property
    def letter(self) -> str:
        return "E" if self is Parity.EVEN else "O"


class Side(IntEnum):
    RICH = 0
    POOR = 1

    @property
    def letter(self) -> str:
        return "R" if self is Side.RICH else "P"


_PARITY_FROM_LETTER = {"E": Parity.EVEN, "O": Parity.ODD}
_SIDE_FROM_LETTER = {"R": Side.RICH, "P": Side.POOR}


@dataclass(frozen=True)
class Cover:
    """One parity per edge instance, indexed by edge id of the covered graph."""

    parities: tuple[Parity, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parities", tuple(Parity(p) for p in self.parities))

    def letters(self) -> str:
        return "".join(p.letter for p in self.parities)


@dataclass(frozen=True)
class PhiMap:
    """One chosen side per vertex: the representative picked from each list."""

    sides: tuple[Side, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sides", tuple(Side(s) for s in self.sides))

    @classmethod
    def all_rich(cls, n: int) -> PhiMap:
        return cls((Side.RICH,) * n)

    def letters(self) -> str:
        return "".join(s.letter for s in self.sides)


def side_from_letter(letter: str) -> Side:
    try:
        return _SIDE_FROM_LETTER[letter]
    except KeyError:
        raise ValueError(f"side must be 'P' or 'R', got {letter!r}") from None


def edge_conflicts(parity: Parity, side_u: Side, side_v: Side) -> bool:
    """Whether the matching joins the two chosen vertices.

    Even joins equal sides, odd joins opposite sides, so the instance
    conflicts exactly when parity XOR side_u XOR side_v vanishes.
    """
    return (int(parity) ^ int(side_u) ^ int(side_v)) == 0


def _check_cover(g: Multigraph, c: Cover) -> None:
    if len(c.parities) != len(g.edges):
        raise ValueError(f"cover indexes {len(c.parities)} edges, graph has {len(g.edges)}")


def _check_phi(g: Multigraph, phi: PhiMap) -> None:
    if len(phi.sides) != g.n:
        raise ValueError(f"map covers {len(phi.sides)} vertices, graph has {g.n}")


def conflict_degrees(g: Multigraph, c: Cover, phi: PhiMap) -> list[int]:
    """Per-vertex count of incident edge instances whose matching joins the chosen pair."""
    _check_cover(g, c)
    _check_phi(g, phi)
    conf = [0] * g.n
    for e, (u, v) in enumerate(g.edges):
        if edge_conflicts(c.parities[e], phi.sides[u], phi.sides[v]):
            conf[u] += 1
            conf[v] += 1
    return conf


def conflict_degree(g: Multigraph, c: Cover, phi: PhiMap, v: int) -> int:
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range [0, {g.n})")
    return conflict_degrees(g, c, phi)[v]


def conflict_total(g: Multigraph, c: Cover, phi: PhiMap) -> int:
    """Number of conflicting edge instances."""
    _check_cover(g, c)
    _check_phi(g, phi)
    return sum(
        1
        for e, (u, v) in enumerate(g.edges)
        if edge_conflicts(c.parities[e], phi.sides[u], phi.sides[v])
    )


def is_valid_coloring(
    g: Multigraph,
    c: Cover,
    phi: PhiMap,
    params: DefectParams,
    t: Toughness | None = None,
) -> bool:
    """Whether phi is an (i, j, t)-coloring for this cover.

    A poor vertex tolerates i - t_poor(v) conflicts, a rich one j - t_rich(v);
    a negative cap means that side is never valid.
    """
    if t is None:
        t = Toughness.zero(g.n)
    t.check(params, g.n)
    conf = conflict_degrees(g, c, phi)
    for v in range(g.n):
        if phi.sides[v] is Side.POOR:
            cap = params.i - t.poor[v]
        else:
            cap = params.j - t.rich[v]
        if conf[v] > cap:
            return False
    return True


def cover_from_index(num_edges: int, index: int) -> Cover:
    """The index-th cover in lexicographic order (edge 0 most significant, E < O)."""
    if not 0 <= index < (1 << num_edges):
        raise ValueError(f"cover index {index} out of range for {num_edges} edges")
    return Cover(tuple(Parity((index >> (num_edges - 1 - e)) & 1) for e in range(num_edges)))


def cover_index(c: Cover) -> int:
    k = 0
    for p in c.parities:
        k = (k << 1) | int(p)
    return k


def all_covers(g: Multigraph, max_covers: int = DEFAULT_MAX_COVERS) -> Iterator[Cover]:
    """All 2^|E| covers in lexicographic parity order; refuses oversized graphs."""
    m = len(g.edges)
    if (1 << m) > max_covers:
        raise BudgetError(f"2^{m} covers exceed the limit of {max_covers}")
    for k in range(1 << m):
        yield cover_from_index(m, k)


def parse_cover(text: str) -> Cover:
    """Parse the cover format: ``cover <m>`` then one ``p <edgeId> E|O`` line per edge."""
    m: int | None = None
    seen: dict[int, Parity] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "cover":
            if m is not None:
                raise FormatError(f"line {lineno}: duplicate 'cover' header")
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: expected 'cover <m>'")
            try:
                m = int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: edge count is not an integer") from None
            if m < 0:
                raise FormatError(f"line {lineno}: edge count must be non-negative")
            continue
        if m is None:
            raise FormatError(f"line {lineno}: expected 'cover <m>' before {parts[0]!r}")
        if parts[0] != "p" or len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 'p <edgeId> E|O'")
        try:
            e = int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: edge id is not an integer") from None
        if not 0 <= e < m:
            raise FormatError(f"line {lineno}: edge id out of range [0, {m})")
        if e in seen:
            raise FormatError(f"line {lineno}: duplicate parity for edge {e}")
        if parts[2] not in _PARITY_FROM_LETTER:
            raise FormatError(f"line {lineno}: parity must be 'E' or 'O', got {parts[2]!r}")
        seen[e] = _PARITY_FROM_LETTER[parts[2]]
    if m is None:
        raise FormatError("missing 'cover <m>' header")
    missing = [e for e in range(m) if e not in seen]
    if missing:
        raise FormatError(f"missing parity for edge(s) {missing}")
    return Cover(tuple(seen[e] for e in range(m)))


def format_cover(c: Cover) -> str:
    lines = [f"cover {len(c.parities)}"]
    lines.extend(f"p {e} {p.letter}" for e, p in enumerate(c.parities))
    return "\n".join(lines) + "\n"


def load_cover(path: str) -> Cover:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_cover(fh.read())


def save_cover(path: str, c: Cover) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_cover(c))
