# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; a line-for-line port of ``_pykernels``."""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

BACKEND = "cython"

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil


cdef inline uint64_t low_mask(int d) nogil:
    # bits 0..d-1 set
    if d >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (<uint64_t>1 << d) - 1


cdef int load_adj(adj, uint64_t* out) except -1:
    cdef int i = 0
    for row in adj:
        out[i] = <uint64_t>row
        i += 1
    return i


cdef int c_count_components(const uint64_t* adj, uint64_t mask) nogil:
    cdef int count = 0
    cdef uint64_t comp, frontier, grow, f
    while mask:
        comp = mask & (~mask + 1)
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                grow |= adj[ctz(f)]
                f &= f - 1
            grow &= mask & ~comp
            comp |= grow
            frontier = grow
        mask &= ~comp
        count += 1
    return count


def count_components(adj, mask):
    cdef uint64_t a[64]
    load_adj(adj, a)
    return c_count_components(a, <uint64_t>mask)


cdef int clique_cover_bound(const uint64_t* adj, uint64_t cand) nogil:
    cdef int cliques = 0
    cdef int v, w
    cdef uint64_t common
    while cand:
        v = ctz(cand)
        common = adj[v] & cand
        cand &= ~(<uint64_t>1 << v)
        while common:
            w = ctz(common)
            common &= adj[w]
            cand &= ~(<uint64_t>1 << w)
        cliques += 1
    return cliques


cdef void mis_expand(const uint64_t* adj, uint64_t cur, int size, uint64_t cand,
                     int* best_size, uint64_t* best_set) nogil:
    cdef int v
    cdef uint64_t bit
    if not cand:
        if size > best_size[0]:
            best_size[0] = size
            best_set[0] = cur
        return
    if size + clique_cover_bound(adj, cand) <= best_size[0]:
        return
    v = ctz(cand)
    bit = <uint64_t>1 << v
    mis_expand(adj, cur | bit, size + 1, cand & ~bit & ~adj[v], best_size, best_set)
    mis_expand(adj, cur, size, cand & ~bit, best_size, best_set)


def max_independent_set(adj, mask):
    cdef uint64_t a[64]
    cdef int best_size = 0
    cdef uint64_t best_set = 0
    load_adj(adj, a)
    mis_expand(a, 0, 0, <uint64_t>mask, &best_size, &best_set)
    return best_set


cdef bint indk_expand(const uint64_t* adj, uint64_t cur, int size, uint64_t cand, int k,
                      uint64_t* out) nogil:
    cdef int v
    cdef uint64_t bit
    if size == k:
        out[0] = cur
        return True
    if not cand or size + clique_cover_bound(adj, cand) < k:
        return False
    v = ctz(cand)
    bit = <uint64_t>1 << v
    if indk_expand(adj, cur | bit, size + 1, cand & ~bit & ~adj[v], k, out):
        return True
    return indk_expand(adj, cur, size, cand & ~bit, k, out)


def independent_k_subset(adj, mask, k):
    cdef uint64_t a[64]
    cdef uint64_t found = 0
    if k <= 0:
        return 0
    if k > 64:
        return -1
    load_adj(adj, a)
    if indk_expand(a, 0, 0, <uint64_t>mask, k, &found):
        return int(found)
    return -1


cdef struct ToughState:
    const uint64_t* adj
    int n
    int alpha
    int64_t bnum
    int64_t bden
    uint64_t bset
    int found
    int stop_first


cdef inline bint lex_less(uint64_t a, uint64_t b) nogil:
    cdef uint64_t diff = a ^ b
    if not diff:
        return False
    return (a & (diff & (~diff + 1))) != 0


cdef bint tough_better(ToughState* st, int64_t num, int64_t den, uint64_t s) nogil:
    cdef int64_t lhs, rhs
    cdef int size, bsize
    if st.bden == 0:
        return True
    lhs = num * st.bden
    rhs = st.bnum * den
    if lhs != rhs:
        return lhs < rhs
    if not st.found:
        return False
    size = <int>num
    bsize = popcount(st.bset)
    if size != bsize:
        return size < bsize
    return lex_less(s, st.bset)


cdef void tough_search(ToughState* st, int d, uint64_t s, uint64_t r, int ssize) nogil:
    cdef int c, cmax
    cdef uint64_t undecided, reach, f, bit
    cdef int64_t lhs, rhs
    if st.found and st.stop_first:
        return
    if d == st.n:
        if not r:
            return
        c = c_count_components(st.adj, r)
        if c >= 2 and tough_better(st, ssize, c, s):
            st.bnum = ssize
            st.bden = c
            st.bset = s
            st.found = 1
        return
    undecided = low_mask(st.n) & ~low_mask(d)
    if r:
        reach = 0
        f = r
        while f:
            reach |= st.adj[ctz(f)]
            f &= f - 1
        cmax = c_count_components(st.adj, r) + popcount(undecided & ~reach)
    else:
        cmax = popcount(undecided)
    if cmax > st.alpha:
        cmax = st.alpha
    if cmax < 2:
        return
    if st.bden:
        lhs = <int64_t>ssize * st.bden
        rhs = st.bnum * cmax
        if lhs > rhs:
            return
        if lhs == rhs and (not st.found or ssize > popcount(st.bset)):
            return
    bit = <uint64_t>1 << d
    tough_search(st, d + 1, s, r | bit, ssize)
    tough_search(st, d + 1, s | bit, r, ssize + 1)


def toughness_search(adj, n, alpha, inc_num, inc_den, stop_first):
    cdef uint64_t a[64]
    cdef ToughState st
    load_adj(adj, a)
    st.adj = a
    st.n = n
    st.alpha = alpha
    st.bnum = inc_num
    st.bden = inc_den
    st.bset = 0
    st.found = 0
    st.stop_first = 1 if stop_first else 0
    with nogil:
        tough_search(&st, 0, 0, 0, 0)
    if not st.found:
        return None
    return int(st.bnum), int(st.bden), int(st.bset)


cdef bint ham_feasible(const uint64_t* adj, int u, uint64_t unvisited, int v1) nogil:
    cdef uint64_t pool, f
    cdef int w
    if not unvisited:
        return (adj[u] & 1) != 0
    pool = unvisited | (<uint64_t>1 << u) | 1
    f = unvisited
    while f:
        w = ctz(f)
        if popcount(adj[w] & pool) < 2:
            return False
        f &= f - 1
    if v1 >= 63 or not ((adj[0] & unvisited) >> (v1 + 1)):
        return False
    return c_count_components(adj, pool) == 1


cdef bint ham_extend(const uint64_t* adj, int u, uint64_t unvisited, int v1,
                     int* order, int depth) nogil:
    cdef uint64_t cand, rest
    cdef int w, first
    if not unvisited:
        return v1 < u and (adj[u] & 1) != 0
    cand = adj[u] & unvisited
    while cand:
        w = ctz(cand)
        cand &= cand - 1
        rest = unvisited & ~(<uint64_t>1 << w)
        first = w if v1 < 0 else v1
        if ham_feasible(adj, w, rest, first):
            order[depth] = w
            if ham_extend(adj, w, rest, first, order, depth + 1):
                return True
    return False


def ham_backtrack(adj, n):
    cdef uint64_t a[64]
    cdef int order[64]
    cdef bint ok
    cdef int nn = n
    if n < 3:
        return None
    load_adj(adj, a)
    order[0] = 0
    with nogil:
        ok = ham_extend(a, 0, low_mask(nn) & ~(<uint64_t>1), -1, order, 1)
    if ok:
        return [order[i] for i in range(n)]
    return None


cdef uint64_t* path_table(const uint64_t* adj, int n, int s, uint64_t starts) nogil:
    cdef int shift = s + 1
    cdef int width = n - shift
    cdef size_t size = (<size_t>1) << width
    cdef uint64_t* table = <uint64_t*>calloc(size, sizeof(uint64_t))
    cdef uint64_t high, used, ends, nxt, f
    cdef size_t m
    cdef int e, x
    if table == NULL:
        return NULL
    f = starts
    while f:
        e = ctz(f)
        table[(<size_t>1) << (e - shift)] = <uint64_t>1 << e
        f &= f - 1
    high = low_mask(n) & ~low_mask(shift)
    for m in range(1, size):
        ends = table[m]
        if not ends:
            continue
        used = (<uint64_t>m) << shift
        while ends:
            e = ctz(ends)
            ends &= ends - 1
            nxt = adj[e] & high & ~used
            while nxt:
                x = ctz(nxt)
                nxt &= nxt - 1
                table[m | ((<size_t>1) << (x - shift))] |= <uint64_t>1 << x
    return table


def ham_dp(adj, n):
    cdef uint64_t a[64]
    cdef uint64_t* table
    cdef bint result
    cdef int nn = n
    if n < 3:
        return False
    load_adj(adj, a)
    with nogil:
        table = path_table(a, nn, 0, a[0] & ~(<uint64_t>1))
    if table == NULL:
        raise MemoryError()
    result = (table[((<size_t>1) << (nn - 1)) - 1] & a[0]) != 0
    free(table)
    return result


cdef bint table_feasible(const uint64_t* table, size_t size, int shift, int u,
                         uint64_t blocked, int need) nogil:
    cdef size_t m
    cdef size_t ubit_rel = (<size_t>1) << (u - shift)
    cdef uint64_t ubit = <uint64_t>1 << u
    for m in range(size):
        if (m & ubit_rel) and not (m & blocked) and (table[m] & ubit) and popcount(m) == need:
            return True
    return False


def longest_cycle(adj, n):
    cdef uint64_t a[64]
    cdef uint64_t* table
    cdef int best_len = 0, best_start = -1
    cdef int s, shift, length, v1, u, w, j
    cdef int nn = n
    cdef size_t m, size
    cdef uint64_t starts, high, used_rel, cand, f
    cdef bint placed
    if n < 3:
        return None
    load_adj(adj, a)
    for s in range(nn - 2):
        if best_len >= nn - s:
            break
        starts = a[s] & ~low_mask(s + 1)
        if popcount(starts) < 2:
            continue
        with nogil:
            table = path_table(a, nn, s, starts)
        if table == NULL:
            raise MemoryError()
        size = (<size_t>1) << (nn - s - 1)
        for m in range(size):
            if table[m] & a[s]:
                length = popcount(m) + 1
                if length >= 3 and length > best_len:
                    best_len = length
                    best_start = s
        free(table)
    if best_start < 0:
        return None
    s = best_start
    shift = s + 1
    size = (<size_t>1) << (nn - shift)
    high = low_mask(nn) & ~low_mask(shift)
    f = a[s] & high
    while f:
        v1 = ctz(f)
        f &= f - 1
        starts = a[s] & high & ~low_mask(v1 + 1)
        if not starts:
            break
        with nogil:
            table = path_table(a, nn, s, starts)
        if table == NULL:
            raise MemoryError()
        if not table_feasible(table, size, shift, v1, 0, best_len - 1):
            free(table)
            continue
        order = [s, v1]
        used_rel = (<uint64_t>1) << (v1 - shift)
        u = v1
        for j in range(2, best_len):
            cand = a[u] & high & ~(used_rel << shift)
            placed = False
            while cand:
                w = ctz(cand)
                cand &= cand - 1
                if table_feasible(table, size, shift, w, used_rel, best_len - j):
                    order.append(w)
                    used_rel |= (<uint64_t>1) << (w - shift)
                    u = w
                    placed = True
                    break
            if not placed:
                free(table)
                raise AssertionError("feasibility table inconsistent")
        free(table)
        return order
    raise AssertionError("longest cycle length found but no cycle reconstructed")


def vertex_flow(adj, n, s, t, cutoff):
    """Unit vertex capacity max-flow on the split graph (see ``_pykernels``)."""
    cdef uint64_t a[64]
    cdef int size = 2 * n
    cdef int big = n + 1
    cdef int* cap = <int*>calloc(size * size, sizeof(int))
    cdef int parent[128]
    cdef int queue[128]
    cdef int head, tail, x, y, v, u, flow = 0
    cdef int source = 2 * s + 1
    cdef int sink = 2 * t
    cdef uint64_t f, cut = 0
    cdef int ncut = cutoff
    if cap == NULL:
        raise MemoryError()
    load_adj(adj, a)
    for v in range(n):
        cap[(2 * v) * size + 2 * v + 1] = big if (v == s or v == t) else 1
        f = a[v]
        while f:
            u = ctz(f)
            f &= f - 1
            cap[(2 * v + 1) * size + 2 * u] = big
    with nogil:
        while flow < ncut:
            for x in range(size):
                parent[x] = -1
            parent[source] = source
            queue[0] = source
            head = 0
            tail = 1
            while head < tail and parent[sink] < 0:
                x = queue[head]
                head += 1
                for y in range(size):
                    if parent[y] < 0 and cap[x * size + y] > 0:
                        parent[y] = x
                        queue[tail] = y
                        tail += 1
            if parent[sink] < 0:
                break
            y = sink
            while y != source:
                x = parent[y]
                cap[x * size + y] -= 1
                cap[y * size + x] += 1
                y = x
            flow += 1
    free(cap)
    if flow >= ncut:
        return flow, 0
    for v in range(n):
        if v == s or v == t:
            continue
        if parent[2 * v] >= 0 and parent[2 * v + 1] < 0:
            cut |= (<uint64_t>1) << v
    return flow, int(cut)
