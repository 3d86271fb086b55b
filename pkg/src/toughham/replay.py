"""Executable replay of the longest-cycle argument for 4-tough, 2k-connected,
(P2 ∪ kP1)-free graphs.

Given ``(G, k, C)`` with ``C`` a non-hamiltonian cycle, :func:`replay` walks
the argument's claim/case tree on the concrete instance.  Each branch either
builds a strictly longer cycle from one named formula, exhibits an induced
P2 ∪ kP1, exhibits a cutset of ratio below 4, or reports which hypothesis
the instance violates.  Every emitted certificate is re-validated by
:func:`validate_certificate`, which only uses graph primitives.

Notation follows the argument: ``x1..xt`` are the attachment vertices of an
exterior component H in clockwise order, ``xi+`` their successors, ``X`` the
successors of ``x1..x_{k+1}``, and the long arc ``x_{k+1} -> x1`` reads
``x_{k+1}, x_{k+1}+, y1, ..., yh, x1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .errors import (
    ArcTooShort,
    InvalidCycle,
    NoExteriorVertex,
    SnotCut,
    ValidationFailure,
)
from .graph import Graph, VertexSet, component_masks, iter_bits
from .hamilton import BACKWARD, FORWARD, OrientedCycle, longest_cycle, validate_cycle
from .structure import (
    FreenessWitness,
    cut_ratio,
    find_p2kp1,
    format_ratio,
    is_k_connected,
    is_t_tough,
    minimum_vertex_cut,
    validate_freeness_witness,
)

SCHEMA = "toughham/1"
TOUGHNESS_BOUND = Fraction(4)

NOT_4_TOUGH = "not-4-tough"
NOT_2K_CONNECTED = "not-2k-connected"
NOT_FREE = "not-free"
N_TOO_SMALL = "n-too-small"

# Longer-cycle constructions.  Each step is a literal vertex run ("P" for the
# path inside H, or a single named vertex) or an oriented segment of the base
# cycle.  The closing vertex of every formula equals its first vertex and is
# omitted, so the steps concatenate to the vertex sequence of the new cycle.
_EXTEND_SHAPE = (("v", "x"), ("bwd", "xi", "b"), ("fwd", "xj+", "a"), ("fwd", "xi+", "xj"))

FORMULAS: dict[str, tuple[str, tuple]] = {
    "claim1-consecutive": (
        "x_i x_i' P x_j' x_i^+ ->C x_i",
        (("P",), ("fwd", "xi+", "xi")),
    ),
    "claim1-successor-chord": (
        "x_i x_i' P x_j' x_j <-C x_i^+ x_j^+ ->C x_i",
        (("P",), ("bwd", "xj", "xi+"), ("fwd", "xj+", "xi")),
    ),
    "case1": ("x x_i <-C y2 x_j^+ ->C y1 x_i^+ ->C x_j x", _EXTEND_SHAPE),
    "case2-i-first": ("x x_1 <-C y2 x_j^+ ->C y1 x_1^+ ->C x_j x", _EXTEND_SHAPE),
    "case2-i-last": ("x x_j <-C y2 x_{k+1}^+ ->C y1 x_j^+ ->C x_{k+1} x", _EXTEND_SHAPE),
    "case2-s-below": ("x x_s <-C y2 x_i^+ ->C y1 x_s^+ ->C x_i x", _EXTEND_SHAPE),
    "case2-l-above": ("x x_i <-C y2 x_l^+ ->C y1 x_i^+ ->C x_l x", _EXTEND_SHAPE),
    "case2-odd-adjacent-x": (
        "x y1 <-C x_i^+ y2 ->C x_i x",
        (("v", "x"), ("bwd", "a", "xi+"), ("fwd", "b", "xi")),
    ),
    "case2-far-successor": (
        "x x_i <-C x_h^+ y1 <-C x_i^+ y2 ->C x_h x",
        (("v", "x"), ("bwd", "xi", "xh+"), ("bwd", "a", "xi+"), ("fwd", "b", "xh")),
    ),
    "case3-s-below-l": ("x x_s <-C y2 x_l^+ ->C y1 x_s^+ ->C x_l x", _EXTEND_SHAPE),
    "case3-odd-adjacent-x": (
        "x x_l <-C y2 x_l^+ ->C y1 x",
        (("v", "x"), ("bwd", "xi", "b"), ("fwd", "xi+", "a")),
    ),
    "case3-far-successor": (
        "x x_l <-C x_h^+ y1 <-C x_l^+ y2 ->C x_h x",
        (("v", "x"), ("bwd", "xi", "xh+"), ("bwd", "a", "xi+"), ("fwd", "b", "xh")),
    ),
}


def rebuild_sequence(base: OrientedCycle, tag: str, bindings: dict) -> list[int]:
    """Vertex sequence of construction ``tag`` on ``base`` under ``bindings``."""
    _, steps = FORMULAS[tag]
    seq: list[int] = []
    for step in steps:
        kind = step[0]
        if kind == "P":
            seq.extend(bindings["P"])
        elif kind == "v":
            seq.append(bindings[step[1]])
        else:
            direction = FORWARD if kind == "fwd" else BACKWARD
            seq.extend(base.segment(bindings[step[1]], bindings[step[2]], direction))
    return seq


# --- certificates -------------------------------------------------------------


@dataclass(frozen=True)
class Construction:
    tag: str
    base: tuple[int, ...]
    bindings: dict = field(hash=False, compare=True)

    @property
    def formula(self) -> str:
        return FORMULAS[self.tag][0]

    def to_json(self) -> dict:
        return {"tag": self.tag, "formula": self.formula, "base": list(self.base), "bindings": self.bindings}


@dataclass(frozen=True)
class Hamiltonian:
    cycle: OrientedCycle
    outcome: str = field(default="Hamiltonian", init=False)

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "cycle": self.cycle.to_list()}


@dataclass(frozen=True)
class LongerCycle:
    cycle: OrientedCycle
    construction: Construction
    outcome: str = field(default="LongerCycle", init=False)

    @property
    def tag(self) -> str:
        return self.construction.tag

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "tag": self.tag,
            "cycle": self.cycle.to_list(),
            "length": len(self.cycle),
            "construction": self.construction.to_json(),
        }


@dataclass(frozen=True)
class InducedWitness:
    witness: FreenessWitness
    tag: str
    outcome: str = field(default="InducedWitness", init=False)

    def to_json(self) -> dict:
        return {"outcome": self.outcome, "tag": self.tag, **self.witness.to_json()}


@dataclass(frozen=True)
class ToughnessCut:
    cutset: VertexSet
    components: int
    ratio: Fraction
    tag: str
    outcome: str = field(default="ToughnessCut", init=False)

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "tag": self.tag,
            "cutset": self.cutset.to_list(),
            "components": self.components,
            "ratio": format_ratio(self.ratio),
        }


@dataclass(frozen=True)
class IndependentCut:
    independent: VertexSet
    cutset: VertexSet
    ratio: Fraction
    tag: str = "final-cut"
    outcome: str = field(default="IndependentCut", init=False)

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome,
            "tag": self.tag,
            "independent": self.independent.to_list(),
            "cutset": self.cutset.to_list(),
            "components": len(self.independent),
            "ratio": format_ratio(self.ratio),
        }


@dataclass(frozen=True)
class HypothesisFailure:
    """The instance violates a hypothesis the argument consumes at ``tag``.

    ``witness`` is re-checkable: a separator smaller than 2k, a cutset of
    ratio below 4, an induced P2 ∪ kP1, or the size data for n-too-small.
    """

    which: str
    witness: dict
    tag: str
    note: str = ""
    outcome: str = field(default="HypothesisFailure", init=False)

    def to_json(self) -> dict:
        out = {"outcome": self.outcome, "which": self.which, "tag": self.tag, "witness": self.witness}
        if self.note:
            out["note"] = self.note
        return out


Certificate = Union[LongerCycle, InducedWitness, ToughnessCut, IndependentCut, HypothesisFailure]
ReplayOutcome = Union[Hamiltonian, Certificate]


def outcome_json(outcome: ReplayOutcome) -> dict:
    return {"schema": SCHEMA, **outcome.to_json()}


class ReplayGap(Exception):
    """Internal signal: the local argument does not apply to this instance."""


# --- attachment structure -----------------------------------------------------


@dataclass(frozen=True)
class AttachmentStructure:
    """H, its attachments ``x1..xt`` on the (re-oriented) cycle, and their successors."""

    cycle: OrientedCycle
    component: VertexSet
    attachments: tuple[int, ...]
    k: int
    orientation: str = "forward"
    anchored: bool = False

    @property
    def t(self) -> int:
        return len(self.attachments)

    @property
    def successors(self) -> tuple[int, ...]:
        return tuple(self.cycle.succ(v) for v in self.attachments)

    @property
    def x_set(self) -> tuple[int, ...]:
        """X = (x1+, ..., x_{k+1}+); only meaningful when t ≥ k + 1."""
        return self.successors[: self.k + 1]

    def cut_witness(self, g: Graph) -> dict:
        """N(H), which separates H from the rest of the cycle."""
        cut = g.neighborhood_mask(self.component.mask)
        comps, ratio = cut_ratio(g, cut)
        return {
            "cutset": list(iter_bits(cut)),
            "components": comps,
            "ratio": None if ratio is None else format_ratio(ratio),
        }


def exterior_components(g: Graph, c: OrientedCycle) -> list[VertexSet]:
    return [VertexSet(m) for m in component_masks(g, g.full_mask & ~c.mask)]


def _clockwise_attachments(cycle: OrientedCycle, nbr_mask: int) -> list[int]:
    return [v for v in cycle.order if nbr_mask >> v & 1]


def attachment_structure(
    g: Graph, c: OrientedCycle, k: int, component: Optional[VertexSet] = None
) -> AttachmentStructure:
    """Build the attachment data for H (default: the exterior component with the smallest label).

    When ``t ≥ k + 1`` every rotation of the attachment sequence in both
    orientations is tried and the lexicographically least sequence with
    ``|V(x1 -> x_{k+1})| ≤ |V(x_{k+1} -> x1)|`` is kept.
    """
    if component is None:
        comps = exterior_components(g, c)
        if not comps:
            raise NoExteriorVertex("cycle covers every vertex")
        component = comps[0]
    nbrs = g.neighborhood_mask(component.mask)
    base = _clockwise_attachments(c, nbrs)
    t = len(base)
    if t < k + 1:
        return AttachmentStructure(c, component, tuple(base), k)
    best = None
    for orientation, cyc in (("forward", c), ("reversed", c.reversed())):
        seq = _clockwise_attachments(cyc, nbrs)
        for r in range(t):
            rot = tuple(seq[r:] + seq[:r])
            short = len(cyc.segment(rot[0], rot[k], FORWARD))
            long = len(cyc.segment(rot[k], rot[0], FORWARD))
            if short <= long and (best is None or rot < best[0]):
                best = (rot, orientation, cyc)
    if best is None:
        return AttachmentStructure(c, component, tuple(base), k)
    rot, orientation, cyc = best
    return AttachmentStructure(cyc, component, rot, k, orientation, True)


@dataclass(frozen=True)
class ArcDecomposition:
    ys: tuple[int, ...]
    Y: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.ys)


def arc_decomposition(st: AttachmentStructure) -> ArcDecomposition:
    """Split the long arc ``x_{k+1} -> x1`` and take every second interior vertex."""
    k = st.k
    if st.t < k + 1:
        return ArcDecomposition((), ())
    x1, xk1 = st.attachments[0], st.attachments[k]
    arc = st.cycle.segment(st.cycle.succ(xk1), x1, FORWARD)
    ys = tuple(arc[1:-1])
    h = len(ys)
    top = h if h % 2 == 0 else h - 1
    Y = tuple(ys[i - 1] for i in range(2, top + 1, 2))
    return ArcDecomposition(ys, Y)


# --- helpers -----------------------------------------------------------------


def _h_path(g: Graph, h_mask: int, src: int, dst: int) -> list[int]:
    """Shortest path inside H, lexicographic on ties."""
    parent = {src: src}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for w in iter_bits(g.adj[v] & h_mask):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    out = [dst]
    while out[-1] != src:
        out.append(parent[out[-1]])
    return out[::-1]


def _construct(g: Graph, st: AttachmentStructure, tag: str, bindings: dict) -> Optional[LongerCycle]:
    """Build a construction; None unless it is a valid cycle longer than C."""
    seq = rebuild_sequence(st.cycle, tag, bindings)
    if len(set(seq)) != len(seq) or len(seq) <= len(st.cycle):
        return None
    try:
        cyc = validate_cycle(g, OrientedCycle(tuple(seq)))
    except InvalidCycle:
        return None
    return LongerCycle(cyc.canonical(), Construction(tag, st.cycle.order, dict(bindings)))


def _witness(g: Graph, k: int, edge: tuple[int, int], candidates, tag: str) -> Optional[InducedWitness]:
    """Edge plus the k smallest candidates that avoid it; None if fewer qualify."""
    u, v = edge
    avoid = g.adj[u] | g.adj[v] | 1 << u | 1 << v
    pool = sorted(x for x in set(candidates) if not avoid >> x & 1)
    chosen: list[int] = []
    for x in pool:
        if not any(g.has_edge(x, y) for y in chosen):
            chosen.append(x)
        if len(chosen) == k:
            break
    if len(chosen) < k:
        return None
    w = FreenessWitness((min(u, v), max(u, v)), VertexSet(chosen))
    validate_freeness_witness(g, w, k)
    return InducedWitness(w, tag)


def _not_connected(g: Graph, st: AttachmentStructure, tag: str, note: str = "") -> HypothesisFailure:
    return HypothesisFailure(NOT_2K_CONNECTED, st.cut_witness(g), tag, note)


# --- claims ------------------------------------------------------------------


def claim1_check(g: Graph, st: AttachmentStructure) -> Optional[LongerCycle]:
    """Attachments are pairwise non-consecutive and their successors independent."""
    cyc = st.cycle
    h_mask = st.component.mask
    att = st.attachments
    att_set = set(att)

    def entry(x: int) -> int:
        return next(iter_bits(g.adj[x] & h_mask))

    for xi in att:
        nxt = cyc.succ(xi)
        if nxt in att_set:
            bindings = {"xi": xi, "xi+": nxt, "P": _h_path(g, h_mask, entry(xi), entry(nxt))}
            made = _construct(g, st, "claim1-consecutive", bindings)
            if made is None:
                raise ValidationFailure("consecutive-attachment extension failed to validate")
            return made
    succ = st.successors
    for i in range(len(att)):
        for j in range(i + 1, len(att)):
            if g.has_edge(succ[i], succ[j]):
                bindings = {
                    "xi": att[i], "xj": att[j], "xi+": succ[i], "xj+": succ[j],
                    "P": _h_path(g, h_mask, entry(att[i]), entry(att[j])),
                }
                made = _construct(g, st, "claim1-successor-chord", bindings)
                if made is None:
                    raise ValidationFailure("successor-chord extension failed to validate")
                return made
    return None


def claim2_check(g: Graph, st: AttachmentStructure, k: int) -> Optional[Certificate]:
    """H is a single vertex; otherwise an edge of H plus k successors is induced P2 ∪ kP1."""
    edges = [(u, v) for u in iter_bits(st.component.mask) for v in iter_bits(g.adj[u] & st.component.mask) if u < v]
    if not edges:
        return None
    if st.t < k:
        return _not_connected(g, st, "claim2", f"exterior component with an edge has only t={st.t} < k={k} attachments")
    found = _witness(g, k, edges[0], st.successors, "claim2")
    if found is None:
        raise ValidationFailure("claim 2 witness failed although successors are independent")
    return found


def claim3_check(g: Graph, c: OrientedCycle) -> Optional[ToughnessCut]:
    """|V(C)| ≥ 4n/5, else V(C) is a cutset of ratio below 4."""
    outside = g.n - len(c)
    if outside <= 0:
        raise SnotCut("G - V(C) is empty")
    if 5 * len(c) < 4 * g.n:
        comps, ratio = cut_ratio(g, c.mask)
        if comps < 2:
            # a single exterior vertex: only |C| = 3, n = 4 lands here
            raise ReplayGap("claim3")
        if ratio >= TOUGHNESS_BOUND:
            raise ValidationFailure("claim 3 cut does not have ratio below 4")
        return ToughnessCut(VertexSet(c.mask), comps, ratio, "claim3")
    return None


def _succ_in(st: AttachmentStructure, segment: list[int]) -> list[int]:
    succs = set(st.successors)
    return [v for v in segment if v in succs]


def _scan_pair(g: Graph, st: AttachmentStructure, k: int, prev: int, a: int, b: int) -> Optional[Certificate]:
    """One (y_odd, y_even) step; None when N(y_even) ∩ X = ∅ is established."""
    cyc = st.cycle
    att = st.attachments
    succ = st.successors
    X = st.x_set
    t = st.t
    x = next(iter_bits(st.component.mask))
    index = {v: i + 1 for i, v in enumerate(X)}  # x_i^+ -> i
    x_mask = sum(1 << v for v in X)
    NA = sorted(index[v] for v in iter_bits(g.adj[a] & x_mask))
    NB = sorted(index[v] for v in iter_bits(g.adj[b] & x_mask))

    def xa(i):  # x_i
        return att[i - 1]

    def xs(i):  # x_i^+
        return succ[i - 1]

    def shape(tag, i, j, extra=None):
        bindings = {"x": x, "xi": xa(i), "xj": xa(j), "xi+": xs(i), "xj+": xs(j), "a": a, "b": b}
        return _construct(g, st, tag, bindings)

    if len(NA) < 2:
        found = _witness(g, k, (prev, a), [v for v in X if v != prev], "claim4-odd-degree")
        if found is None:
            raise ReplayGap("claim4-odd-degree")
        return found
    if not NB:
        return None
    if len(NB) == 1:
        found = _witness(g, k, (b, xs(NB[0])), X, "claim4-even-single")
        if found is None:
            raise ReplayGap("claim4-even-single")
        return found

    common = sorted(set(NA) & set(NB))
    if len(common) >= 2:
        made = shape("case1", common[0], common[1])
        if made is None:
            raise ReplayGap("case1")
        return made

    def far_successor(tag, i):
        for h in range(k + 2, t + 1):
            if g.has_edge(a, xs(h)):
                bindings = {"x": x, "xi": xa(i), "xi+": xs(i), "xh": xa(h), "xh+": xs(h), "a": a, "b": b}
                made = _construct(g, st, tag, bindings)
                if made is not None:
                    return made
        return None

    if len(common) == 1:
        i = common[0]
        if i == 1:
            j = next(v for v in NB if v != 1)
            made = shape("case2-i-first", 1, j)
        elif i == k + 1:
            j = next(v for v in NA if v != k + 1)
            made = shape("case2-i-last", j, k + 1)
        else:
            s, l = NA[0], NB[-1]
            made = None
            if s < i:
                made = shape("case2-s-below", s, i)
            if made is None and l > i:
                made = shape("case2-l-above", i, l)
            if made is None and s == i == l:
                if g.has_edge(a, x):
                    made = _construct(g, st, "case2-odd-adjacent-x", {"x": x, "xi": xa(i), "xi+": xs(i), "a": a, "b": b})
                else:
                    made = far_successor("case2-far-successor", i)
                    if made is None:
                        pivot = xs(i)
                        short = _succ_in(st, cyc.segment(pivot, a, FORWARD))
                        long = _succ_in(st, cyc.segment(b, pivot, FORWARD))
                        for edge, pool, tag in (
                            ((b, pivot), short, "case2-short-side"),
                            ((a, pivot), long, "case2-long-side"),
                        ):
                            if len(pool) >= k + 1:
                                found = _witness(g, k, edge, [v for v in pool if v != pivot], tag)
                                if found is not None:
                                    return found
                        if t < 2 * k:
                            return _not_connected(g, st, "case2", f"t={t} < 2k={2 * k}: neither side holds k+1 successors")
                        raise ReplayGap("case2")
        if made is None:
            raise ReplayGap("case2")
        return made

    s, l = NA[0], NB[-1]
    if s < l:
        made = shape("case3-s-below-l", s, l)
        if made is None:
            raise ReplayGap("case3")
        return made
    if g.has_edge(a, x):
        made = _construct(g, st, "case3-odd-adjacent-x", {"x": x, "xi": xa(l), "xi+": xs(l), "a": a, "b": b})
        if made is None:
            raise ReplayGap("case3")
        return made
    made = far_successor("case3-far-successor", l)
    if made is not None:
        return made
    long = _succ_in(st, cyc.segment(b, xa(s), FORWARD))
    short = _succ_in(st, cyc.segment(xs(s), xs(k + 1), FORWARD))
    for edge, pool, tag in (((a, xs(s)), long, "case3-long-side"), ((b, xs(l)), short, "case3-short-side")):
        if len(pool) >= k:
            found = _witness(g, k, edge, pool, tag)
            if found is not None:
                return found
    if t < 2 * k:
        return _not_connected(g, st, "case3", f"t={t} < 2k={2 * k}: neither side holds k successors")
    raise ReplayGap("case3")


def claim4_scan(
    g: Graph, st: AttachmentStructure, arcs: ArcDecomposition, k: int
) -> tuple[Optional[Certificate], tuple[int, ...]]:
    """Walk the pairs (y1, y2), (y3, y4), ...; return ``(certificate, ())`` or ``(None, Y)``.

    Raises :class:`ArcTooShort` when h < 2, and :class:`ReplayGap` when a
    branch does not apply to this instance.
    """
    if st.t < k + 1:
        return _not_connected(g, st, "claim4-gate", f"t={st.t} < k+1={k + 1}"), ()
    if not st.anchored:
        return _not_connected(g, st, "claim4-anchor", f"no rotation has a short arc and t={st.t} < 2k={2 * k}"), ()
    if arcs.h < 2:
        raise ArcTooShort(f"arc interior has h={arcs.h} < 2 vertices")
    X = st.x_set
    prev = X[-1]
    ys = arcs.ys
    for m in range(0, len(arcs.Y)):
        a, b = ys[2 * m], ys[2 * m + 1]
        cert = _scan_pair(g, st, k, prev, a, b)
        if cert is not None:
            return cert, ()
        prev = b
    x_mask = sum(1 << v for v in X)
    for y in arcs.Y:
        if g.adj[y] & x_mask:
            raise ValidationFailure(f"Y vertex {y} has a neighbour in X after the scan")
    y_mask = sum(1 << v for v in arcs.Y)
    for y in arcs.Y:
        hit = g.adj[y] & y_mask
        if hit:
            z = (hit & -hit).bit_length() - 1
            found = _witness(g, k, (y, z), X, "claim4-consequence")
            if found is None:
                raise ValidationFailure("Y edge plus X should induce P2 ∪ kP1")
            return found, ()
    return None, arcs.Y


def final_cut(g: Graph, st: AttachmentStructure, Y, k: int) -> Certificate:
    """X ∪ Y is independent; S = V - (X ∪ Y) should have ratio below 4."""
    xy = VertexSet(list(st.x_set) + list(Y))
    if not g.is_independent(xy):
        raise ValidationFailure("X ∪ Y is not independent")
    s = g.vertices - xy
    ratio = Fraction(len(s), len(xy))
    if ratio < TOUGHNESS_BOUND:
        return IndependentCut(xy, s, ratio)
    return HypothesisFailure(
        N_TOO_SMALL,
        {"independent": xy.to_list(), "cutset": s.to_list(), "ratio": format_ratio(ratio), "n": g.n},
        "final-cut",
        "independent set X ∪ Y is too small for a ratio below 4 at this n",
    )


# --- driver ------------------------------------------------------------------


def _exhaustive(g: Graph, k: int, c: OrientedCycle, where: str) -> Certificate:
    """Settle the instance directly when the local argument does not apply."""
    tag = f"{where}/exhaustive"
    w = find_p2kp1(g, k)
    if w is not None:
        return InducedWitness(w, tag)
    if not is_k_connected(g, 2 * k):
        cut = minimum_vertex_cut(g)
        comps, ratio = cut_ratio(g, cut)
        return HypothesisFailure(
            NOT_2K_CONNECTED,
            {"cutset": cut.to_list(), "components": comps, "ratio": None if ratio is None else format_ratio(ratio)},
            tag,
        )
    check = is_t_tough(g, TOUGHNESS_BOUND)
    if not check:
        return ToughnessCut(check.cutset, check.components, check.ratio, tag)
    raise ValidationFailure(
        f"all hypotheses hold yet the argument stalled at {where}: C is not a longest cycle "
        "or the implementation is wrong"
    )


def replay(g: Graph, k: int, c: Optional[OrientedCycle] = None) -> ReplayOutcome:
    """Run the argument on ``g``; ``c`` defaults to the canonical longest cycle.

    When ``c`` is computed here it is a verified longest cycle, so a
    LongerCycle outcome would be a contradiction and raises instead.
    """
    if k < 4:
        raise ValueError("k must be at least 4")
    if g.n < 3:
        return HypothesisFailure(N_TOO_SMALL, {"n": g.n}, "start", "fewer than three vertices")
    verified = c is None
    if c is None:
        c = longest_cycle(g)
        if c is None:
            cut = minimum_vertex_cut(g)
            comps, ratio = cut_ratio(g, cut)
            return HypothesisFailure(
                NOT_2K_CONNECTED,
                {"cutset": cut.to_list(), "components": comps, "ratio": None if ratio is None else format_ratio(ratio)},
                "start",
                "graph has no cycle",
            )
    c = validate_cycle(g, c)
    if len(c) == g.n:
        return Hamiltonian(c)
    outcome = _run_claims(g, k, c)
    validate_certificate(g, k, c, outcome)
    if verified and isinstance(outcome, LongerCycle):
        raise ValidationFailure("replay found a cycle longer than a verified longest cycle")
    return outcome


def _run_claims(g: Graph, k: int, c: OrientedCycle) -> Certificate:
    comps = exterior_components(g, c)
    for comp in comps:
        st = attachment_structure(g, c, k, comp)
        cert = claim1_check(g, st)
        if cert is None:
            cert = claim2_check(g, st, k)
        if cert is not None:
            return cert
    try:
        cert = claim3_check(g, c)
    except ReplayGap as gap:
        return _exhaustive(g, k, c, str(gap))
    if cert is not None:
        return cert
    st = attachment_structure(g, c, k, comps[0])
    if st.t < k + 1 or not st.anchored:
        cert, _ = claim4_scan(g, st, ArcDecomposition((), ()), k)
        return cert
    arcs = arc_decomposition(st)
    try:
        cert, Y = claim4_scan(g, st, arcs, k)
    except ArcTooShort:
        cert, Y = None, ()
    except ReplayGap as gap:
        return _exhaustive(g, k, c, str(gap))
    if cert is not None:
        return cert
    return final_cut(g, st, Y, k)


# --- independent re-validation ---------------------------------------------------


def validate_certificate(g: Graph, k: int, c: OrientedCycle, outcome: ReplayOutcome) -> None:
    """Re-check ``outcome`` against ``g`` using only graph-level primitives."""
    if isinstance(outcome, Hamiltonian):
        validate_cycle(g, outcome.cycle)
        if len(outcome.cycle) != g.n:
            raise ValidationFailure("Hamiltonian outcome does not cover every vertex")
    elif isinstance(outcome, LongerCycle):
        validate_cycle(g, outcome.cycle, canonical=True)
        if len(outcome.cycle) <= len(c):
            raise ValidationFailure("LongerCycle is not longer than C")
        con = outcome.construction
        if con.tag not in FORMULAS:
            raise ValidationFailure(f"unknown construction tag {con.tag}")
        seq = rebuild_sequence(OrientedCycle(con.base), con.tag, con.bindings)
        if OrientedCycle(tuple(seq)).canonical() != outcome.cycle:
            raise ValidationFailure("construction does not rebuild the certificate cycle")
    elif isinstance(outcome, InducedWitness):
        validate_freeness_witness(g, outcome.witness, k)
    elif isinstance(outcome, (ToughnessCut, IndependentCut)):
        comps, ratio = cut_ratio(g, outcome.cutset)
        if ratio is None or ratio != outcome.ratio or ratio >= TOUGHNESS_BOUND:
            raise ValidationFailure(f"cut ratio {ratio} does not certify a ratio below 4")
        if isinstance(outcome, IndependentCut):
            if not g.is_independent(outcome.independent):
                raise ValidationFailure("independent part has an edge")
            if outcome.cutset.mask | outcome.independent.mask != g.full_mask or outcome.cutset.mask & outcome.independent.mask:
                raise ValidationFailure("cutset is not the complement of the independent set")
        elif isinstance(outcome, ToughnessCut) and comps != outcome.components:
            raise ValidationFailure("component count mismatch")
    elif isinstance(outcome, HypothesisFailure):
        _validate_failure(g, k, outcome)
    else:
        raise ValidationFailure(f"unknown outcome {outcome!r}")


def _validate_failure(g: Graph, k: int, hf: HypothesisFailure) -> None:
    w = hf.witness
    if hf.which == NOT_2K_CONNECTED:
        cut = VertexSet(w["cutset"])
        comps, _ = cut_ratio(g, cut)
        if comps < 2 or len(cut) >= 2 * k:
            raise ValidationFailure("separator witness does not show κ < 2k")
    elif hf.which == NOT_4_TOUGH:
        _, ratio = cut_ratio(g, VertexSet(w["cutset"]))
        if ratio is None or ratio >= TOUGHNESS_BOUND:
            raise ValidationFailure("cut witness does not show τ < 4")
    elif hf.which == NOT_FREE:
        validate_freeness_witness(g, FreenessWitness(tuple(w["edge"]), VertexSet(w["isolated"])), k)
    elif hf.which == N_TOO_SMALL:
        if "independent" in w:
            ind = VertexSet(w["independent"])
            if not g.is_independent(ind):
                raise ValidationFailure("n-too-small witness set has an edge")
            if Fraction(g.n - len(ind), len(ind)) < TOUGHNESS_BOUND:
                raise ValidationFailure("n-too-small claimed but the ratio is below 4")
        elif g.n >= 3:
            raise ValidationFailure("n-too-small without data")
    else:
        raise ValidationFailure(f"unknown hypothesis {hf.which}")
