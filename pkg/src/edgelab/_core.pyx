# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels; results are identical to ``_pycore``.

Bitsets are 64-bit words, so every kernel accepts ``n <= 64``.  The canonical
code is built as a byte-per-bit buffer, compared with ``memcmp`` and converted
to a Python integer once at the end.
"""

from libc.stdlib cimport malloc, realloc, free
from libc.string cimport memcmp, memcpy, memset

ctypedef unsigned long long u64

cdef extern from *:
    int popcount "__builtin_popcountll"(unsigned long long) nogil
    int ctz "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef int _load(object adj, int n, u64* out) except -1:
    if n < 0 or n > MAXN:
        raise ValueError(f"compiled kernels support 0 <= n <= {MAXN}, got {n}")
    cdef int i
    for i in range(n):
        out[i] = <u64>adj[i]
    return 0


# -- maximum matching ---------------------------------------------------------------


cdef struct MState:
    int n
    u64 adj[MAXN]
    int match[MAXN]
    int parent[MAXN]
    int base[MAXN]


cdef int _lca(MState* s, int a, int b) nogil:
    cdef char seen[MAXN]
    memset(seen, 0, MAXN)
    while True:
        a = s.base[a]
        seen[a] = 1
        if s.match[a] == -1:
            break
        a = s.parent[s.match[a]]
    while True:
        b = s.base[b]
        if seen[b]:
            return b
        b = s.parent[s.match[b]]


cdef void _mark_path(MState* s, int v, int b, int child, char* blossom) nogil:
    while s.base[v] != b:
        blossom[s.base[v]] = 1
        blossom[s.base[s.match[v]]] = 1
        s.parent[v] = child
        child = s.match[v]
        v = s.parent[s.match[v]]


cdef int _find_path(MState* s, int root) nogil:
    cdef int n = s.n
    cdef char used[MAXN]
    cdef char blossom[MAXN]
    cdef int queue[MAXN]
    cdef int head = 0, tail = 0, i, v, to, cur, nxt
    cdef u64 row
    memset(used, 0, MAXN)
    for i in range(n):
        s.parent[i] = -1
        s.base[i] = i
    used[root] = 1
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        row = s.adj[v]
        while row:
            to = ctz(row)
            row &= row - 1
            if s.base[v] == s.base[to] or s.match[v] == to:
                continue
            if to == root or (s.match[to] != -1 and s.parent[s.match[to]] != -1):
                cur = _lca(s, v, to)
                memset(blossom, 0, MAXN)
                _mark_path(s, v, cur, to, blossom)
                _mark_path(s, to, cur, v, blossom)
                for i in range(n):
                    if blossom[s.base[i]]:
                        s.base[i] = cur
                        if not used[i]:
                            used[i] = 1
                            queue[tail] = i
                            tail += 1
            elif s.parent[to] == -1:
                s.parent[to] = v
                if s.match[to] == -1:
                    return to
                nxt = s.match[to]
                used[nxt] = 1
                queue[tail] = nxt
                tail += 1
    return -1


cdef void _blossom(MState* s) nogil:
    cdef int n = s.n, v, u, root, pv, ppv
    cdef u64 row
    for v in range(n):
        s.match[v] = -1
    for v in range(n):
        if s.match[v] == -1:
            row = s.adj[v]
            while row:
                u = ctz(row)
                row &= row - 1
                if s.match[u] == -1:
                    s.match[u] = v
                    s.match[v] = u
                    break
    for root in range(n):
        if s.match[root] == -1 and s.adj[root]:
            v = _find_path(s, root)
            while v != -1:
                pv = s.parent[v]
                ppv = s.match[pv]
                s.match[v] = pv
                s.match[pv] = v
                v = ppv


def max_matching_mate(int n, adj):
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or -1."""
    cdef MState s
    s.n = n
    _load(adj, n, s.adj)
    _blossom(&s)
    return [s.match[i] for i in range(n)]


def matching_number(int n, adj):
    cdef MState s
    cdef int i, count = 0
    s.n = n
    _load(adj, n, s.adj)
    _blossom(&s)
    for i in range(n):
        if s.match[i] != -1:
            count += 1
    return count // 2


# -- maximum independent set ---------------------------------------------------------


cdef struct MisState:
    u64 nbr[MAXN]
    int best
    u64 best_mask


cdef int _colour_sort(u64 cand, u64* nbr, int* order, int* bounds) nogil:
    cdef int colour = 0, k = 0, v
    cdef u64 uncoloured = cand, q
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = ctz(q)
            q &= ~(<u64>1 << v)
            q &= ~nbr[v]
            uncoloured &= ~(<u64>1 << v)
            order[k] = v
            bounds[k] = colour
            k += 1
    return k


cdef void _expand(MisState* st, u64 cand, int size, u64 cur) nogil:
    cdef int order[MAXN]
    cdef int bounds[MAXN]
    cdef int k = _colour_sort(cand, st.nbr, order, bounds)
    cdef int i, v
    cdef u64 new
    for i in range(k - 1, -1, -1):
        if size + bounds[i] <= st.best:
            return
        v = order[i]
        new = cand & st.nbr[v]
        if new:
            _expand(st, new, size + 1, cur | (<u64>1 << v))
        elif size + 1 > st.best:
            st.best = size + 1
            st.best_mask = cur | (<u64>1 << v)
        cand &= ~(<u64>1 << v)


def max_independent_set(int n, adj):
    """Return ``(size, mask)`` of a maximum independent set."""
    if n == 0:
        return 0, 0
    cdef u64 rows[MAXN]
    cdef MisState st
    cdef int v
    _load(adj, n, rows)
    cdef u64 full = (~<u64>0) if n == 64 else ((<u64>1 << n) - 1)
    for v in range(n):
        st.nbr[v] = full ^ rows[v] ^ (<u64>1 << v)
    st.best = 0
    st.best_mask = 0
    _expand(&st, full, 0, 0)
    return st.best, int(st.best_mask)


# -- canonical labelling -------------------------------------------------------------


cdef struct Canon:
    int n
    int nbits
    u64 adj[MAXN]
    char* best
    char* tmp
    int best_lab[MAXN]
    int have_best
    int* gens
    int ngens
    int cap


cdef int _refine(Canon* st, u64* cells, int ncells) nogil:
    """Refine ``cells`` in place to the coarsest equitable partition; return the new cell count."""
    cdef u64 out[MAXN]
    cdef int sig[MAXN][MAXN]
    cdef int mem[MAXN]
    cdef int idx[MAXN]
    cdef int nout, changed, ci, m, i, j, k, t, cmp, a, b
    cdef u64 c, acc
    while True:
        changed = 0
        nout = 0
        for ci in range(ncells):
            c = cells[ci]
            if not (c & (c - 1)):
                out[nout] = c
                nout += 1
                continue
            m = 0
            while c:
                mem[m] = ctz(c)
                c &= c - 1
                m += 1
            for i in range(m):
                for k in range(ncells):
                    sig[i][k] = popcount(st.adj[mem[i]] & cells[k])
                idx[i] = i
            # stable insertion sort of members by signature
            for i in range(1, m):
                t = idx[i]
                j = i - 1
                while j >= 0:
                    cmp = 0
                    for k in range(ncells):
                        a = sig[idx[j]][k]
                        b = sig[t][k]
                        if a != b:
                            cmp = 1 if a > b else -1
                            break
                    if cmp <= 0:
                        break
                    idx[j + 1] = idx[j]
                    j -= 1
                idx[j + 1] = t
            acc = <u64>1 << mem[idx[0]]
            for i in range(1, m):
                cmp = 0
                for k in range(ncells):
                    if sig[idx[i]][k] != sig[idx[i - 1]][k]:
                        cmp = 1
                        break
                if cmp:
                    changed = 1
                    out[nout] = acc
                    nout += 1
                    acc = 0
                acc |= <u64>1 << mem[idx[i]]
            out[nout] = acc
            nout += 1
        memcpy(cells, out, nout * sizeof(u64))
        ncells = nout
        if not changed:
            return ncells


cdef int _root(int* parent, int x) nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


cdef void _orbits(Canon* st, int* prefix, int plen, int* parent) nogil:
    cdef int n = st.n, g, x, a, b, ok
    cdef int* perm
    for x in range(n):
        parent[x] = x
    for g in range(st.ngens):
        perm = st.gens + g * n
        ok = 1
        for x in range(plen):
            if perm[prefix[x]] != prefix[x]:
                ok = 0
                break
        if not ok:
            continue
        for x in range(n):
            a = _root(parent, x)
            b = _root(parent, perm[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b


cdef int _leaf(Canon* st, u64* cells) except -1:
    cdef int n = st.n, i, j, k = 0, cmp
    cdef int lab[MAXN]
    cdef u64 row
    cdef int* perm
    for i in range(n):
        lab[i] = ctz(cells[i])
    for j in range(1, n):
        row = st.adj[lab[j]]
        for i in range(j):
            st.tmp[k] = <char>((row >> lab[i]) & 1)
            k += 1
    if st.have_best:
        cmp = memcmp(st.tmp, st.best, st.nbits)
    else:
        cmp = -1
    if cmp < 0:
        memcpy(st.best, st.tmp, st.nbits)
        memcpy(st.best_lab, lab, n * sizeof(int))
        st.have_best = 1
    elif cmp == 0:
        if st.ngens == st.cap:
            st.cap = st.cap * 2 if st.cap else 8
            perm = <int*>realloc(st.gens, st.cap * n * sizeof(int))
            if perm == NULL:
                raise MemoryError()
            st.gens = perm
        perm = st.gens + st.ngens * n
        for i in range(n):
            perm[st.best_lab[i]] = lab[i]
        st.ngens += 1
    return 0


cdef int _search(Canon* st, u64* cells, int ncells, int* prefix, int plen) except -1:
    cdef int n = st.n, idx = -1, i, v, ntried = 0, skip, r
    cdef u64 target, rest
    cdef u64 child[MAXN]
    cdef int tried[MAXN]
    cdef int parent[MAXN]
    for i in range(ncells):
        if cells[i] & (cells[i] - 1):
            idx = i
            break
    if idx < 0:
        return _leaf(st, cells)
    target = cells[idx]
    rest = target
    while rest:
        v = ctz(rest)
        rest &= rest - 1
        if ntried:
            _orbits(st, prefix, plen, parent)
            r = _root(parent, v)
            skip = 0
            for i in range(ntried):
                if _root(parent, tried[i]) == r:
                    skip = 1
                    break
            if skip:
                continue
        memcpy(child, cells, idx * sizeof(u64))
        child[idx] = <u64>1 << v
        child[idx + 1] = target & ~(<u64>1 << v)
        memcpy(child + idx + 2, cells + idx + 1, (ncells - idx - 1) * sizeof(u64))
        prefix[plen] = v
        _search(st, child, _refine(st, child, ncells + 1), prefix, plen + 1)
        tried[ntried] = v
        ntried += 1
    return 0


def canon_search(int n, adj):
    """Canonical labelling: ``(code, lab, gens)`` exactly as in the pure-Python kernel."""
    if n == 0:
        return 0, [], []
    cdef Canon st
    cdef u64 cells[MAXN]
    cdef int prefix[MAXN]
    cdef int i, g
    st.n = n
    _load(adj, n, st.adj)
    st.nbits = n * (n - 1) // 2
    st.best = <char*>malloc(st.nbits + 1)
    st.tmp = <char*>malloc(st.nbits + 1)
    st.gens = NULL
    st.ngens = 0
    st.cap = 0
    st.have_best = 0
    if st.best == NULL or st.tmp == NULL:
        free(st.best)
        free(st.tmp)
        raise MemoryError()
    try:
        cells[0] = (~<u64>0) if n == 64 else ((<u64>1 << n) - 1)
        _search(&st, cells, _refine(&st, cells, 1), prefix, 0)
        bits = bytes([48 + st.best[i] for i in range(st.nbits)])
        code = int(bits, 2) if st.nbits else 0
        lab = [st.best_lab[i] for i in range(n)]
        gens = [tuple([st.gens[g * n + i] for i in range(n)]) for g in range(st.ngens)]
    finally:
        free(st.best)
        free(st.tmp)
        free(st.gens)
    return code, lab, gens
