"""Brute-force reference implementations used only by the tests.

Nothing here imports the package's search code: graphs are plain
``(n, set-of-edges)`` pairs and every answer comes from exhaustive
enumeration, so agreement with the fast solvers is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def adjacency(n, edges):
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def graph_data(g):
    """(n, adjacency sets) from a package Graph, via its public edge list only."""
    return g.n, adjacency(g.n, g.edges())


def count_components(adj, alive):
    alive = set(alive)
    seen = set()
    count = 0
    for s in sorted(alive):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w in alive and w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def brute_toughness(n, adj):
    """(value, witness) with value None for complete graphs.

    Witness tie-break: smallest |S|, then lexicographically smallest sorted list.
    """
    best = None
    for size in range(n + 1):
        for s in combinations(range(n), size):
            rest = set(range(n)) - set(s)
            c = count_components(adj, rest)
            if c < 2:
                continue
            ratio = Fraction(size, c)
            if best is None or ratio < best[0]:
                best = (ratio, list(s))
    if best is None:
        return None, None
    return best


def brute_alpha(n, adj):
    for size in range(n, 0, -1):
        for s in combinations(range(n), size):
            if all(b not in adj[a] for a, b in combinations(s, 2)):
                return size, list(s)
    return 0, []


def brute_connectivity(n, adj):
    """Smallest separating set size; n - 1 for complete graphs."""
    if all(len(adj[v]) == n - 1 for v in range(n)):
        return max(n - 1, 0)
    for size in range(n):
        for s in combinations(range(n), size):
            rest = set(range(n)) - set(s)
            if len(rest) >= 2 and count_components(adj, rest) >= 2:
                return size
    return n - 1


def brute_hamiltonian(n, adj):
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        order = (0,) + perm
        if all(order[i + 1] in adj[order[i]] for i in range(n - 1)) and 0 in adj[order[-1]]:
            return True
    return False


def brute_longest_cycle_length(n, adj):
    """Length of a longest cycle by trying vertex subsets from largest down."""
    for size in range(n, 2, -1):
        for sub in combinations(range(n), size):
            first, rest = sub[0], sub[1:]
            for perm in permutations(rest):
                order = (first,) + perm
                if order[1] > order[-1]:
                    continue
                if all(order[i + 1] in adj[order[i]] for i in range(size - 1)) and first in adj[order[-1]]:
                    return size
    return 0


def brute_has_p2kp1(n, adj, k):
    for u in range(n):
        for v in adj[u]:
            if v < u:
                continue
            pool = [w for w in range(n) if w not in (u, v) and w not in adj[u] and w not in adj[v]]
            for s in combinations(pool, k):
                if all(b not in adj[a] for a, b in combinations(s, 2)):
                    return True
    return False


def decode_graph6(text):
    """Reference graph6 decoder for n < 63 written from the format description."""
    data = [ord(ch) - 63 for ch in text.strip()]
    n = data[0]
    bits = []
    for value in data[1:]:
        for shift in range(5, -1, -1):
            bits.append((value >> shift) & 1)
    edges = set()
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.add((i, j))
            idx += 1
    return n, edges


def encode_graph6(n, edges):
    """Reference graph6 encoder for n < 63."""
    es = {(min(e), max(e)) for e in edges}
    bits = [1 if (i, j) in es else 0 for j in range(1, n) for i in range(j)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for p in range(0, len(bits), 6):
        value = 0
        for b in bits[p:p + 6]:
            value = value * 2 + b
        out.append(chr(value + 63))
    return "".join(out)


def is_cycle_of(adj, order):
    size = len(order)
    return size >= 3 and len(set(order)) == size and all(order[(i + 1) % size] in adj[order[i]] for i in range(size))


def brute_least_longest_cycle(n, adj):
    """Lexicographically least canonical cycle among those of maximum length."""
    for size in range(n, 2, -1):
        found = []
        for sub in combinations(range(n), size):
            first, rest = sub[0], sub[1:]
            for perm in permutations(rest):
                order = (first,) + perm
                if order[1] < order[-1] and is_cycle_of(adj, order):
                    found.append(order)
        if found:
            return min(found)
    return None


def frontier_hamiltonian(n, adj):
    """Hamiltonicity by growing the set of (visited, end) path states from vertex 0.

    Only reachable states are stored, which keeps unbalanced bipartite
    graphs cheap; used where permutation enumeration is out of reach.
    """
    if n < 3:
        return False
    states = {(1, 0)}
    for _ in range(n - 1):
        nxt = set()
        for mask, end in states:
            for w in adj[end]:
                if not mask >> w & 1:
                    nxt.add((mask | 1 << w, w))
        states = nxt
    return any(0 in adj[end] for _, end in states)
