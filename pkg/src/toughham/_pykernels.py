"""Pure-Python search kernels.

Reference implementation of every function in ``_kernels.pyx``; the two
must return identical results on identical input.  ``adj`` is a sequence
of neighbour bitmasks, ``n <= 64``.
"""

from __future__ import annotations

BACKEND = "python"


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def count_components(adj, mask):
    """Number of connected components of G[mask]."""
    count = 0
    while mask:
        comp = mask & -mask
        frontier = comp
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            grow &= mask & ~comp
            comp |= grow
            frontier = grow
        mask &= ~comp
        count += 1
    return count


def _clique_cover_bound(adj, cand):
    """Greedy clique cover of G[cand]; its size bounds α(G[cand])."""
    cliques = 0
    while cand:
        v = (cand & -cand).bit_length() - 1
        clique_common = adj[v] & cand
        cand &= ~(1 << v)
        while clique_common:
            w = (clique_common & -clique_common).bit_length() - 1
            clique_common &= adj[w]
            cand &= ~(1 << w)
        cliques += 1
    return cliques


def max_independent_set(adj, mask):
    """Lexicographically least maximum independent set of G[mask]."""
    best = [0, 0]  # size, set

    def expand(cur, size, cand):
        if not cand:
            if size > best[0]:
                best[0] = size
                best[1] = cur
            return
        if size + _clique_cover_bound(adj, cand) <= best[0]:
            return
        v = (cand & -cand).bit_length() - 1
        bit = 1 << v
        expand(cur | bit, size + 1, cand & ~bit & ~adj[v])
        expand(cur, size, cand & ~bit)

    expand(0, 0, mask)
    return best[1]


def independent_k_subset(adj, mask, k):
    """Lexicographically least independent k-subset of ``mask``, or -1."""
    if k <= 0:
        return 0

    def expand(cur, size, cand):
        if size == k:
            return cur
        if not cand or size + _clique_cover_bound(adj, cand) < k:
            return -1
        v = (cand & -cand).bit_length() - 1
        bit = 1 << v
        found = expand(cur | bit, size + 1, cand & ~bit & ~adj[v])
        if found >= 0:
            return found
        return expand(cur, size, cand & ~bit)

    return expand(0, 0, mask)


def _lex_less(a, b):
    """True iff sorted(bits(a)) < sorted(bits(b)) for equal-size masks."""
    diff = a ^ b
    if not diff:
        return False
    low = diff & -diff
    return bool(a & low)


def toughness_search(adj, n, alpha, inc_num, inc_den, stop_first):
    """Branch and bound for the cutset minimising |S| / c(G - S).

    Only cutsets with ratio strictly below ``inc_num/inc_den`` are reported
    (``inc_den == 0`` means no bound).  Ties on ratio go to smaller |S|,
    then to the lexicographically smaller sorted label list.  Returns
    ``(num, den, mask)`` with ``den = c(G - S)`` unreduced, or ``None``.
    """
    full = (1 << n) - 1
    # best: [num, den, mask, found]
    best = [inc_num, inc_den, 0, False]

    def better(num, den, s):
        bnum, bden = best[0], best[1]
        if bden == 0:
            return True
        lhs = num * bden
        rhs = bnum * den
        if lhs != rhs:
            return lhs < rhs
        if not best[3]:
            return False
        size, bsize = num, best[2].bit_count()
        if size != bsize:
            return size < bsize
        return _lex_less(s, best[2])

    def search(d, s, r, ssize):
        if best[3] and stop_first:
            return
        if d == n:
            if not r:
                return
            c = count_components(adj, r)
            if c >= 2 and better(ssize, c, s):
                best[0], best[1], best[2], best[3] = ssize, c, s, True
            return
        undecided = full & ~((1 << d) - 1)
        if r:
            reach = 0
            for v in _bits(r):
                reach |= adj[v]
            cmax = count_components(adj, r) + (undecided & ~reach).bit_count()
        else:
            cmax = undecided.bit_count()
        if cmax > alpha:
            cmax = alpha
        if cmax < 2:
            return
        if best[1]:
            lhs = ssize * best[1]
            rhs = best[0] * cmax
            if lhs > rhs:
                return
            if lhs == rhs and (not best[3] or ssize > best[2].bit_count()):
                return
        bit = 1 << d
        search(d + 1, s, r | bit, ssize)
        search(d + 1, s | bit, r, ssize + 1)

    search(0, 0, 0, 0)
    if not best[3]:
        return None
    return best[0], best[1], best[2]


def ham_backtrack(adj, n):
    """Lexicographically least canonical hamiltonian cycle, or None.

    Canonical: starts at 0 and the second vertex is smaller than the last.
    Prunes on residual degree, connectivity of the unvisited part and on
    the closing constraint.
    """
    if n < 3:
        return None
    full = (1 << n) - 1
    order = [0]

    def feasible(u, unvisited, v1):
        if not unvisited:
            return bool(adj[u] & 1)
        pool = unvisited | (1 << u) | 1
        for w in _bits(unvisited):
            if (adj[w] & pool).bit_count() < 2:
                return False
        if not (adj[0] & unvisited) >> (v1 + 1):
            return False
        return count_components(adj, pool) == 1

    def extend(u, unvisited, v1):
        if not unvisited:
            return v1 < u and bool(adj[u] & 1)
        for w in _bits(adj[u] & unvisited):
            rest = unvisited & ~(1 << w)
            first = w if v1 < 0 else v1
            if feasible(w, rest, first):
                order.append(w)
                if extend(w, rest, first):
                    return True
                order.pop()
        return False

    if extend(0, full & ~1, -1):
        return order
    return None


def _path_table(adj, n, s, starts):
    """Endpoint masks for paths that begin at ``s``.

    Index ``M`` runs over subsets of vertices ``s+1..n-1`` (bit i <-> vertex
    s+1+i).  Entry ``M`` holds, as an absolute vertex mask, every ``e`` such
    that some path s, w, ..., e has vertex set exactly {s} ∪ M, where the
    first step ``w`` lies in ``starts``.
    """
    shift = s + 1
    width = n - shift
    size = 1 << width
    table = [0] * size
    for w in _bits(starts):
        table[1 << (w - shift)] = 1 << w
    high = ((1 << n) - 1) & ~((1 << shift) - 1)
    for m in range(1, size):
        ends = table[m]
        if not ends:
            continue
        used = m << shift
        for e in _bits(ends):
            for x in _bits(adj[e] & high & ~used):
                table[m | (1 << (x - shift))] |= 1 << x
    return table


def ham_dp(adj, n):
    """Held-Karp style hamiltonicity test over bitmask path tables."""
    if n < 3:
        return False
    table = _path_table(adj, n, 0, adj[0] & ~1)
    return bool(table[(1 << (n - 1)) - 1] & adj[0])


def _feasible(table, shift, u, blocked, need):
    """Is there M ∋ u, |M| = need, M ∩ blocked = ∅, with u ∈ table[M]?"""
    ubit_rel = 1 << (u - shift)
    ubit = 1 << u
    for m in range(len(table)):
        if m & ubit_rel and not m & blocked and table[m] & ubit and m.bit_count() == need:
            return True
    return False


def longest_cycle(adj, n):
    """Lexicographically least canonical longest cycle, or None."""
    if n < 3:
        return None
    best_len = 0
    best_start = -1
    for s in range(n - 2):
        if best_len >= n - s:
            break
        starts = adj[s] & ~((1 << (s + 1)) - 1)
        if (starts).bit_count() < 2:
            continue
        table = _path_table(adj, n, s, starts)
        shift = s + 1
        for m in range(len(table)):
            if table[m] & adj[s]:
                length = m.bit_count() + 1
                if length >= 3 and length > best_len:
                    best_len = length
                    best_start = s
    if best_start < 0:
        return None
    s = best_start
    shift = s + 1
    high = ((1 << n) - 1) & ~((1 << shift) - 1)
    for v1 in _bits(adj[s] & high):
        starts = adj[s] & high & ~((1 << (v1 + 1)) - 1)
        if not starts:
            break
        table = _path_table(adj, n, s, starts)
        if not _feasible(table, shift, v1, 0, best_len - 1):
            continue
        order = [s, v1]
        used_rel = 1 << (v1 - shift)
        u = v1
        for j in range(2, best_len):
            for w in _bits(adj[u] & high & ~(used_rel << shift)):
                if _feasible(table, shift, w, used_rel, best_len - j):
                    order.append(w)
                    used_rel |= 1 << (w - shift)
                    u = w
                    break
            else:
                raise AssertionError("feasibility table inconsistent")
        return order
    raise AssertionError("longest cycle length found but no cycle reconstructed")


def vertex_flow(adj, n, s, t, cutoff):
    """Max number of internally disjoint s-t paths (s, t non-adjacent), capped.

    Returns ``(value, cut)``; when ``value < cutoff`` the mask ``cut`` is a
    minimum s-t vertex separator, otherwise it is 0.
    """
    # node 2v = v_in, 2v+1 = v_out; unit capacity on v_in -> v_out
    size = 2 * n
    big = n + 1
    cap = {}

    def add(a, b, c):
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    out = [[] for _ in range(size)]
    for v in range(n):
        add(2 * v, 2 * v + 1, big if v in (s, t) else 1)
        for u in _bits(adj[v]):
            add(2 * v + 1, 2 * u, big)
    for (a, b) in cap:
        out[a].append(b)
    for lst in out:
        lst.sort()
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < cutoff:
        parent = {source: source}
        queue = [source]
        head = 0
        while head < len(queue) and sink not in parent:
            a = queue[head]
            head += 1
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    if flow >= cutoff:
        return flow, 0
    cut = 0
    for v in range(n):
        if v in (s, t):
            continue
        if 2 * v in parent and 2 * v + 1 not in parent:
            cut |= 1 << v
    return flow, cut
