"""Immutable bitset graphs on at most 64 vertices, generators and surgery.

Vertices are the integers ``0..n-1``.  Row ``adj[v]`` is an int whose bit
``u`` is set iff ``uv`` is an edge.  Every set-valued result is reported in
increasing label order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import InvalidSize, MalformedEdgeList, TooLarge

MAX_N = 64


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class VertexSet:
    """An immutable subset of ``range(n)`` stored as a bitmask."""

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] | int = 0):
        if isinstance(vertices, int):
            if vertices < 0:
                raise ValueError("negative mask")
            mask = vertices
        else:
            mask = bits_to_mask(vertices)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        if isinstance(other, (set, frozenset)):
            return self.mask == bits_to_mask(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("VertexSet", self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & ~other.mask)

    def to_list(self) -> list[int]:
        return list(iter_bits(self.mask))

    def sort_key(self) -> tuple[int, list[int]]:
        """Smallest cardinality first, then lexicographic on sorted labels."""
        return (len(self), self.to_list())


def as_mask(s: VertexSet | Iterable[int] | int) -> int:
    if isinstance(s, VertexSet):
        return s.mask
    if isinstance(s, int):
        return s
    return bits_to_mask(s)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with bitset adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_N:
            raise TooLarge(f"graph has {self.n} vertices; the limit is {MAX_N}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {v} has bits outside range(n)")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n > MAX_N:
            raise TooLarge(f"graph has {n} vertices; the limit is {MAX_N}")
        if n < 0:
            raise InvalidSize("negative vertex count")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(self.full_mask)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def neighborhood_mask(self, s: int) -> int:
        """N(S) as a mask: all neighbours of S that are not in S."""
        out = 0
        for v in iter_bits(s):
            out |= self.adj[v]
        return out & ~s

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_independent(self, s: VertexSet | Iterable[int] | int) -> bool:
        mask = as_mask(s)
        return all(not (self.adj[v] & mask) for v in iter_bits(mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# --- generators -------------------------------------------------------------


def _check_n(n: int) -> None:
    if n < 0:
        raise InvalidSize(f"negative size {n}")
    if n > MAX_N:
        raise TooLarge(f"graph has {n} vertices; the limit is {MAX_N}")


def empty(n: int) -> Graph:
    _check_n(n)
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _check_n(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b} with side A = ``0..a-1`` and side B = ``a..a+b-1``."""
    if a < 0 or b < 0:
        raise InvalidSize("negative side")
    _check_n(a + b)
    side_a = (1 << a) - 1
    side_b = ((1 << b) - 1) << a
    return Graph(a + b, tuple(side_b if v < a else side_a for v in range(a + b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSize(f"cycle needs at least 3 vertices, got {n}")
    _check_n(n)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _check_n(n)
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    """Union with the vertices of later graphs shifted past earlier ones."""
    total = sum(g.n for g in graphs)
    if total > MAX_N:
        raise TooLarge(f"union has {total} vertices; the limit is {MAX_N}")
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(total, tuple(rows))


def forbidden_pattern(k: int) -> Graph:
    """The graph P2 ∪ kP1: vertices 0-1 joined, 2..k+1 isolated."""
    return disjoint_union(path(2), *([path(1)] * k))


def add_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edges(g.n, list(g.edges()) + list(edges))


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Append vertex ``g.n`` adjacent to ``neighbors``."""
    new = g.n
    return Graph.from_edges(new + 1, list(g.edges()) + [(u, new) for u in neighbors])


def random_gnp(n: int, p: Fraction | int | str, seed: int) -> Graph:
    """G(n, p) sample driven by Python's Mersenne Twister.

    Pairs are visited in graph6 order (column-major upper triangle); pair
    ``(i, j)`` is kept iff a fresh 53-bit draw ``r`` satisfies
    ``r < p * 2**53``, compared exactly.
    """
    _check_n(n)
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    threshold = p * (1 << 53)
    edges = []
    for j in range(1, n):
        for i in range(j):
            if rng.getrandbits(53) < threshold:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


# --- surgery ----------------------------------------------------------------


def induced_subgraph(g: Graph, s: VertexSet | Iterable[int] | int) -> tuple[Graph, list[int]]:
    """G[S] relabelled to ``0..|S|-1``; the list maps new labels to old ones."""
    mask = as_mask(s) & g.full_mask
    labels = list(iter_bits(mask))
    index = {old: new for new, old in enumerate(labels)}
    rows = []
    for old in labels:
        rows.append(bits_to_mask(index[u] for u in iter_bits(g.adj[old] & mask)))
    return Graph(len(labels), tuple(rows)), labels


def remove_vertices(g: Graph, s: VertexSet | Iterable[int] | int) -> Graph:
    """G - S, relabelled densely (use :func:`induced_subgraph` for the map)."""
    return induced_subgraph(g, g.full_mask & ~as_mask(s))[0]


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of G[within] as masks, ordered by minimum vertex."""
    remaining = g.full_mask if within is None else within & g.full_mask
    out = []
    adj = g.adj
    while remaining:
        comp = remaining & -remaining
        frontier = comp
        while frontier:
            grow = 0
            for v in iter_bits(frontier):
                grow |= adj[v]
            grow &= remaining & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        remaining &= ~comp
    return out


def components(g: Graph, within: VertexSet | int | None = None) -> list[VertexSet]:
    mask = None if within is None else as_mask(within)
    return [VertexSet(c) for c in component_masks(g, mask)]


def is_connected(g: Graph, within: int | None = None) -> bool:
    return len(component_masks(g, within)) <= 1


def count_components_without(g: Graph, s: VertexSet | Iterable[int] | int) -> int:
    """c(G - S), counted on the original labels."""
    return len(component_masks(g, g.full_mask & ~as_mask(s)))


# --- edge-list text ---------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` (0-indexed)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MalformedEdgeList("empty edge list")
    try:
        head = [int(x) for x in lines[0]]
        if len(head) != 2:
            raise MalformedEdgeList("header must be 'n m'")
        n, m = head
        pairs = [tuple(int(x) for x in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise MalformedEdgeList(f"non-integer token: {exc}") from None
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise MalformedEdgeList(f"expected {m} edge lines of two integers")
    if n > MAX_N:
        raise TooLarge(f"graph has {n} vertices; the limit is {MAX_N}")
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise MalformedEdgeList(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    edges = g.edges()
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]) + "\n"


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Graph whose vertex ``i`` is ``order[i]`` of ``g``."""
    index = {old: new for new, old in enumerate(order)}
    return Graph.from_edges(g.n, [(index[u], index[v]) for u, v in g.edges()])
