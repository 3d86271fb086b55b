"""Exact structural invariants: δ, κ, α, toughness and (P2 ∪ kP1)-freeness.

Every search runs on the bitset kernels in :mod:`toughham.kernels`.  All
ratios are :class:`fractions.Fraction`; floats never enter a comparison.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import kernels
from .errors import CapExceeded, EmptyGraph, ValidationFailure
from .graph import Graph, VertexSet, as_mask, component_masks, iter_bits

DEFAULT_CAPS = {"toughness": 20, "longest_cycle": 18, "ham_dp": 22}


def solver_cap(what: str) -> int:
    """Vertex cap for an exponential solver; ``TOUGHHAM_CAP_N`` overrides all."""
    override = os.environ.get("TOUGHHAM_CAP_N")
    if override:
        return int(override)
    return DEFAULT_CAPS[what]


def check_cap(what: str, n: int, cap: Optional[int] = None) -> None:
    limit = solver_cap(what) if cap is None else cap
    if n > limit:
        raise CapExceeded(what, n, limit)


def format_ratio(value: Optional[Fraction]) -> str:
    """``"p/q"`` for a rational, ``"inf"`` for the complete-graph sentinel."""
    if value is None:
        return "inf"
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_ratio(text: str) -> Optional[Fraction]:
    if text == "inf":
        return None
    return Fraction(text)


# --- degree, connectivity, independence ---------------------------------------


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the null graph")
    return min(g.degree(v) for v in range(g.n))


def _min_cut_search(g: Graph, limit: Optional[int] = None) -> tuple[int, Optional[int]]:
    """Exact κ(G) by Even's pair scheme over unit-capacity max-flows.

    Returns ``(kappa, cut_mask)``; ``cut_mask`` is None for complete graphs.
    With ``limit`` set, the search stops as soon as κ < limit is certain or
    κ ≥ limit is proven, and the returned value is then min(κ, limit).
    """
    n = g.n
    if n <= 1:
        return 0, None
    if g.is_complete():
        return n - 1, None
    comps = component_masks(g)
    if len(comps) > 1:
        return 0, 0
    delta = min_degree(g)
    v = next(u for u in range(n) if g.degree(u) == delta)
    best, cut = delta, g.adj[v]
    # a separator of size < bound misses one of vertices 0..bound-1
    bound = best if limit is None else min(best, limit)
    i = 0
    while i <= min(best, bound) and i < n:
        non_nbrs = g.full_mask & ~g.adj[i] & ~((1 << (i + 1)) - 1)
        for j in iter_bits(non_nbrs):
            value, sep = kernels.vertex_flow(g.adj, n, i, j, min(best, bound))
            if value < best and value < bound:
                best, cut = value, sep
        if limit is not None and best < limit:
            break
        i += 1
    if limit is not None:
        return min(best, limit), cut
    return best, cut


def vertex_connectivity(g: Graph) -> int:
    """κ(G); ``n - 1`` for complete graphs and 0 for disconnected ones."""
    return _min_cut_search(g)[0]


def minimum_vertex_cut(g: Graph) -> Optional[VertexSet]:
    """A minimum separating set, or None when ``g`` is complete."""
    _, cut = _min_cut_search(g)
    return None if cut is None else VertexSet(cut)


def is_k_connected(g: Graph, k: int) -> bool:
    """κ(G) ≥ k, stopping early once a smaller separator turns up."""
    if k <= 0:
        return True
    if g.n <= k:
        return False
    if any(g.degree(v) < k for v in range(g.n)):
        return False
    return _min_cut_search(g, limit=k)[0] >= k


def independence_number(g: Graph, within: VertexSet | int | None = None) -> tuple[int, VertexSet]:
    """α(G[within]) with the lexicographically least maximum independent set."""
    mask = g.full_mask if within is None else as_mask(within) & g.full_mask
    best = kernels.max_independent_set(g.adj, mask)
    return best.bit_count(), VertexSet(best)


# --- toughness --------------------------------------------------------------


@dataclass(frozen=True)
class ToughnessResult:
    """τ(G) as a reduced fraction (``value is None`` means infinite)."""

    value: Optional[Fraction]
    witness: Optional[VertexSet]
    components: int = 0

    @property
    def infinite(self) -> bool:
        return self.value is None

    def at_least(self, t: Fraction | int) -> bool:
        return self.value is None or self.value >= Fraction(t)

    def __str__(self) -> str:
        return format_ratio(self.value)


def toughness(g: Graph, cap: Optional[int] = None) -> ToughnessResult:
    """Exact toughness with the minimising cutset.

    Among cutsets of minimum ratio the witness has the fewest vertices and,
    among those, the lexicographically smallest sorted label list.
    """
    if g.n == 0:
        raise EmptyGraph("toughness of the null graph")
    if g.is_complete():
        return ToughnessResult(None, None)
    check_cap("toughness", g.n, cap)
    alpha = kernels.max_independent_set(g.adj, g.full_mask).bit_count()
    found = kernels.toughness_search(g.adj, g.n, alpha, 0, 0, False)
    assert found is not None, "non-complete graph without a cutset"
    size, comps, mask = found
    return ToughnessResult(Fraction(size, comps), VertexSet(mask), comps)


@dataclass(frozen=True)
class TToughCheck:
    """Outcome of a t-toughness test; truthy iff the graph is t-tough."""

    tough: bool
    cutset: Optional[VertexSet] = None
    components: int = 0

    def __bool__(self) -> bool:
        return self.tough

    @property
    def ratio(self) -> Optional[Fraction]:
        if self.cutset is None:
            return None
        return Fraction(len(self.cutset), self.components)


def is_t_tough(g: Graph, t: Fraction | int | str, cap: Optional[int] = None) -> TToughCheck:
    """Decide τ(G) ≥ t; on failure return some S with |S| < t·c(G - S)."""
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be non-negative")
    if g.n == 0:
        raise EmptyGraph("toughness of the null graph")
    if g.is_complete() or t == 0:
        return TToughCheck(True)
    check_cap("toughness", g.n, cap)
    alpha = kernels.max_independent_set(g.adj, g.full_mask).bit_count()
    found = kernels.toughness_search(g.adj, g.n, alpha, t.numerator, t.denominator, True)
    if found is None:
        return TToughCheck(True)
    _, comps, mask = found
    return TToughCheck(False, VertexSet(mask), comps)


# --- (P2 ∪ kP1)-freeness ------------------------------------------------------


@dataclass(frozen=True)
class FreenessWitness:
    """An edge ``uv`` and ``k`` vertices inducing P2 ∪ kP1 together."""

    edge: tuple[int, int]
    isolated: VertexSet

    @property
    def vertices(self) -> VertexSet:
        return VertexSet(self.isolated.mask | 1 << self.edge[0] | 1 << self.edge[1])

    def to_json(self) -> dict:
        return {"edge": list(self.edge), "isolated": self.isolated.to_list()}


def find_p2kp1(g: Graph, k: int) -> Optional[FreenessWitness]:
    """First induced P2 ∪ kP1, scanning edges lexicographically.

    For an edge ``uv`` the isolated part must come from
    ``V - (N[u] ∪ N[v])``, so the test reduces to an independent k-set there.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    for u, v in g.edges():
        rest = g.full_mask & ~(g.adj[u] | g.adj[v] | 1 << u | 1 << v)
        if rest.bit_count() < k:
            continue
        found = kernels.independent_k_subset(g.adj, rest, k)
        if found >= 0:
            return FreenessWitness((u, v), VertexSet(found))
    return None


def is_p2kp1_free(g: Graph, k: int) -> bool:
    return find_p2kp1(g, k) is None


def find_induced(g: Graph, h: Graph) -> Optional[dict[int, int]]:
    """Injective map φ with g[φ(V(h))] ≅ h via φ, by plain backtracking.

    Intended for small patterns only; the first map in lexicographic order
    of ``(φ(0), φ(1), ...)`` is returned.
    """
    if h.n > g.n:
        return None
    image: list[int] = []

    def extend(i: int, used: int) -> bool:
        if i == h.n:
            return True
        for x in range(g.n):
            if used >> x & 1:
                continue
            if all(g.has_edge(x, image[j]) == h.has_edge(i, j) for j in range(i)):
                image.append(x)
                if extend(i + 1, used | 1 << x):
                    return True
                image.pop()
        return False

    if extend(0, 0):
        return dict(enumerate(image))
    return None


# --- re-validation (independent of the search kernels) ------------------------


def cut_ratio(g: Graph, s: VertexSet | int) -> tuple[int, Optional[Fraction]]:
    """``(c(G - S), |S| / c(G - S))``; the ratio is None unless c ≥ 2."""
    mask = as_mask(s)
    comps = len(component_masks(g, g.full_mask & ~mask))
    if comps < 2:
        return comps, None
    return comps, Fraction(mask.bit_count(), comps)


def validate_freeness_witness(g: Graph, w: FreenessWitness, k: int) -> None:
    u, v = w.edge
    iso = w.isolated.mask
    if not g.has_edge(u, v):
        raise ValidationFailure(f"witness edge {u}-{v} is not an edge")
    if len(w.isolated) != k:
        raise ValidationFailure(f"witness has {len(w.isolated)} isolated vertices, wanted {k}")
    if iso >> u & 1 or iso >> v & 1:
        raise ValidationFailure("witness edge endpoint listed as isolated")
    if (g.adj[u] | g.adj[v]) & iso:
        raise ValidationFailure("an isolated vertex touches the witness edge")
    if not g.is_independent(iso):
        raise ValidationFailure("isolated vertices are not independent")
