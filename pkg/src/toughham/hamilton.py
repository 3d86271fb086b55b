"""Exact hamiltonian-cycle and longest-cycle solvers with oriented cycle witnesses."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from . import kernels
from .errors import InvalidCycle, NotOnCycle, TooSmall
from .graph import Graph
from .structure import check_cap, solver_cap

FORWARD = "forward"
BACKWARD = "backward"


@dataclass(frozen=True)
class OrientedCycle:
    """Cyclic vertex sequence; "clockwise" means increasing index in ``order``.

    Solvers return the canonical form (smallest label first, second vertex
    smaller than the last).  Re-oriented or rotated copies are legal cycles
    too; :meth:`canonical` recovers the normal form.
    """

    order: tuple[int, ...]

    def __post_init__(self):
        if len(self.order) < 3:
            raise InvalidCycle(f"a cycle needs at least 3 vertices, got {len(self.order)}")
        if len(set(self.order)) != len(self.order):
            raise InvalidCycle("repeated vertex on cycle")
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(self.order)})

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> OrientedCycle:
        return cls(tuple(seq))

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    @property
    def mask(self) -> int:
        m = 0
        for v in self.order:
            m |= 1 << v
        return m

    def position(self, v: int) -> int:
        try:
            return self._pos[v]
        except KeyError:
            raise NotOnCycle(f"vertex {v} is not on the cycle") from None

    def succ(self, v: int) -> int:
        """x⁺: the next vertex clockwise."""
        return self.order[(self.position(v) + 1) % len(self.order)]

    def pred(self, v: int) -> int:
        """x⁻: the previous vertex clockwise."""
        return self.order[(self.position(v) - 1) % len(self.order)]

    def segment(self, u: int, v: int, direction: str = FORWARD) -> list[int]:
        """Vertices from ``u`` to ``v`` inclusive, following or against the orientation."""
        i, j = self.position(u), self.position(v)
        size = len(self.order)
        step = 1 if direction == FORWARD else -1
        if direction not in (FORWARD, BACKWARD):
            raise ValueError(f"unknown direction {direction!r}")
        out = [self.order[i]]
        while i != j:
            i = (i + step) % size
            out.append(self.order[i])
        return out

    def rotated(self, start: int) -> OrientedCycle:
        i = self.position(start)
        return OrientedCycle(self.order[i:] + self.order[:i])

    def reversed(self) -> OrientedCycle:
        return OrientedCycle((self.order[0],) + tuple(reversed(self.order[1:])))

    def canonical(self) -> OrientedCycle:
        c = self.rotated(min(self.order))
        if c.order[1] > c.order[-1]:
            c = c.reversed()
        return c

    @property
    def is_canonical(self) -> bool:
        return self.canonical().order == self.order

    def edges(self) -> list[tuple[int, int]]:
        size = len(self.order)
        return [(self.order[i], self.order[(i + 1) % size]) for i in range(size)]

    def to_list(self) -> list[int]:
        return list(self.order)


def validate_cycle(g: Graph, c: OrientedCycle | Sequence[int], canonical: bool = False) -> OrientedCycle:
    """Check that ``c`` is a cycle of ``g`` (and optionally canonical)."""
    if not isinstance(c, OrientedCycle):
        c = OrientedCycle(tuple(c))
    for v in c.order:
        if not 0 <= v < g.n:
            raise InvalidCycle(f"vertex {v} outside range(n={g.n})")
    for u, v in c.edges():
        if not g.has_edge(u, v):
            raise InvalidCycle(f"cycle uses non-edge {u}-{v}")
    if canonical and not c.is_canonical:
        raise InvalidCycle("cycle is not in canonical form")
    return c


def _auto(g: Graph) -> str:
    # the tables are cheap below the cap; backtracking can blow up on non-hamiltonian input
    return "dp" if g.n <= solver_cap("ham_dp") else "backtrack"


def hamiltonian_cycle(g: Graph, method: str = "auto") -> Optional[OrientedCycle]:
    """The lexicographically least canonical hamiltonian cycle, or None.

    ``method="backtrack"`` runs pruned depth-first search; ``method="dp"``
    reconstructs through the bitmask path tables (cap ``ham_dp``).  Both
    return the same cycle, which makes each an oracle for the other.
    ``"auto"`` picks dp within the cap and backtracking above it.
    """
    if g.n < 3:
        raise TooSmall(f"hamiltonian cycles need n >= 3, got {g.n}")
    if method == "auto":
        method = _auto(g)
    if method == "backtrack":
        order = kernels.ham_backtrack(g.adj, g.n)
    elif method == "dp":
        check_cap("ham_dp", g.n)
        if not kernels.ham_dp(g.adj, g.n):
            return None
        order = kernels.longest_cycle(g.adj, g.n)
        assert order is not None and len(order) == g.n
    else:
        raise ValueError(f"unknown method {method!r}")
    return None if order is None else OrientedCycle(tuple(order))


def is_hamiltonian(g: Graph, method: str = "auto") -> bool:
    if g.n < 3:
        return False
    if method == "auto":
        method = _auto(g)
    if method == "dp":
        check_cap("ham_dp", g.n)
        return kernels.ham_dp(g.adj, g.n)
    return hamiltonian_cycle(g, method) is not None


def longest_cycle(g: Graph, cap: Optional[int] = None) -> Optional[OrientedCycle]:
    """A maximum-length cycle in canonical form, lexicographically least; None if acyclic."""
    if g.n < 3:
        return None
    limit = solver_cap("longest_cycle") if cap is None else cap
    if g.n <= solver_cap("ham_dp") and kernels.ham_dp(g.adj, g.n):
        return OrientedCycle(tuple(kernels.longest_cycle(g.adj, g.n)))
    if g.n > limit:
        ham = kernels.ham_backtrack(g.adj, g.n)
        if ham is not None:
            return OrientedCycle(tuple(ham))
    check_cap("longest_cycle", g.n, cap)
    order = kernels.longest_cycle(g.adj, g.n)
    return None if order is None else OrientedCycle(tuple(order))
