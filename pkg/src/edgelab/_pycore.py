"""Pure-Python hot kernels.

Every function takes a vertex count ``n`` and a sequence of neighbour bitsets
``adj`` and mirrors, result for result, the compiled versions in ``_core.pyx``.
"""

from __future__ import annotations

from collections import deque


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- maximum matching (Edmonds' blossom algorithm) --------------------------------


def max_matching_mate(n, adj):
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or -1."""
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for u in _bits(adj[v]):
                if match[u] == -1:
                    match[u] = v
                    match[v] = u
                    break

    parent = [-1] * n
    base = list(range(n))

    def lca(a, b):
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v, b, child, blossom):
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root):
        used = [False] * n
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in _bits(adj[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    nxt = match[to]
                    used[nxt] = True
                    queue.append(nxt)
        return -1

    for root in range(n):
        if match[root] == -1 and adj[root]:
            v = find_path(root)
            while v != -1:
                pv = parent[v]
                ppv = match[pv]
                match[v] = pv
                match[pv] = v
                v = ppv
    return match


def matching_number(n, adj):
    return sum(1 for m in max_matching_mate(n, adj) if m != -1) // 2


# -- maximum independent set (clique search in the complement) -------------------


def _colour_sort(cand, nbr):
    """Greedy colouring of ``cand`` into independent classes of the clique graph."""
    order = []
    bounds = []
    colour = 0
    uncoloured = cand
    while uncoloured:
        colour += 1
        q = uncoloured
        while q:
            v = (q & -q).bit_length() - 1
            q &= ~(1 << v)
            q &= ~nbr[v]
            uncoloured &= ~(1 << v)
            order.append(v)
            bounds.append(colour)
    return order, bounds


def max_independent_set(n, adj):
    """Return ``(size, mask)`` of a maximum independent set."""
    if n == 0:
        return 0, 0
    full = (1 << n) - 1
    nbr = [full ^ adj[v] ^ (1 << v) for v in range(n)]
    best = [0, 0]

    def expand(cand, size, cur):
        order, bounds = _colour_sort(cand, nbr)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            new = cand & nbr[v]
            if new:
                expand(new, size + 1, cur | 1 << v)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = cur | 1 << v
            cand &= ~(1 << v)

    expand(full, 0, 0)
    return best[0], best[1]


# -- canonical labelling (individualisation-refinement) --------------------------


def _refine(adj, cells):
    """Coarsest equitable refinement; sub-cells ordered by neighbour-count signature."""
    while True:
        changed = False
        out = []
        for c in cells:
            if not c & (c - 1):
                out.append(c)
                continue
            groups = {}
            for v in _bits(c):
                row = adj[v]
                sig = tuple([(row & d).bit_count() for d in cells])
                groups[sig] = groups.get(sig, 0) | 1 << v
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        cells = out
        if not changed:
            return cells


def _leaf_code(n, adj, lab):
    code = 0
    for j in range(1, n):
        row = adj[lab[j]]
        for i in range(j):
            code = code << 1 | (row >> lab[i] & 1)
    return code


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _orbit_partition(n, gens, fixed):
    parent = list(range(n))
    for g in gens:
        if any(g[x] != x for x in fixed):
            continue
        for x in range(n):
            a = _find(parent, x)
            b = _find(parent, g[x])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return parent


def canon_search(n, adj):
    """Canonical labelling of the graph.

    Returns ``(code, lab, gens)``: ``code`` is the least upper-triangle bit
    string (graph6 column order, first pair most significant) over all leaves
    of the search tree; ``lab[i]`` is the original vertex placed at position
    ``i`` of the canonical graph; ``gens`` generate the automorphism group,
    each as a tuple mapping vertex -> image.
    """
    if n == 0:
        return 0, [], []
    best = [None, None]
    gens = []

    def search(cells, prefix):
        idx = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                idx = i
                break
        if idx < 0:
            lab = [c.bit_length() - 1 for c in cells]
            code = _leaf_code(n, adj, lab)
            if best[0] is None or code < best[0]:
                best[0] = code
                best[1] = lab
            elif code == best[0]:
                perm = [0] * n
                for bv, v in zip(best[1], lab):
                    perm[bv] = v
                gens.append(tuple(perm))
            return
        target = cells[idx]
        tried = []
        for v in _bits(target):
            if tried:
                orbits = _orbit_partition(n, gens, prefix)
                root = _find(orbits, v)
                if any(_find(orbits, w) == root for w in tried):
                    continue
            child = cells[:idx] + [1 << v, target & ~(1 << v)] + cells[idx + 1:]
            search(_refine(adj, child), prefix + [v])
            tried.append(v)

    search(_refine(adj, [(1 << n) - 1]), [])
    return best[0], best[1], gens
