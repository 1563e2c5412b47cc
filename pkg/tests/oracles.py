"""Independent reference implementations used only by the tests.

Nothing here imports the package's solvers: each oracle works from the
definition (exhaustive subsets, exhaustive colourings, all permutations) or
delegates to networkx.
"""

from __future__ import annotations

import itertools

import networkx as nx

from edgelab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(index), [(index[u], index[v]) for u, v in h.edges()])


def labeled_graphs(n: int):
    """Every labelled simple graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def brute_canonical_key(g: Graph) -> tuple[int, ...]:
    """Lexicographically least sorted edge list over all n! relabellings."""
    best = None
    edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return (g.n,) + tuple(itertools.chain.from_iterable(best or ()))


def count_classes_bruteforce(n: int) -> int:
    """Isomorphism classes on n vertices by labelled enumeration plus brute-force dedup."""
    return len({brute_canonical_key(g) for g in labeled_graphs(n)})


def independence_bruteforce(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n, 0, -1):
        for s in itertools.combinations(range(g.n), k):
            ss = set(s)
            if not any(u in ss and v in ss for u, v in edges):
                return k
    return 0


def matching_nx(g: Graph) -> int:
    return len(nx.max_weight_matching(to_nx(g), maxcardinality=True))


def _colourable(n: int, edges: list[tuple[int, int]], k: int) -> bool:
    for colours in itertools.product(range(k), repeat=n):
        if all(colours[u] != colours[v] for u, v in edges):
            return True
    return False


def chromatic_bruteforce(g: Graph) -> int:
    if g.n == 0:
        return 0
    k = 1
    while not _colourable(g.n, g.edges(), k):
        k += 1
    return k


def chromatic_index_bruteforce(g: Graph) -> int:
    edges = g.edges()
    if not edges:
        return 0
    conflicts = [
        (i, j)
        for i, j in itertools.combinations(range(len(edges)), 2)
        if set(edges[i]) & set(edges[j])
    ]
    k = 1
    while not _colourable(len(edges), conflicts, k):
        k += 1
    return k


def max_edges_bruteforce(n_max: int, accept) -> tuple[int | None, list[Graph]]:
    """Labelled brute force: maximum edge count over accepted graphs with n <= n_max."""
    best, witnesses = None, []
    for n in range(1, n_max + 1):
        for g in labeled_graphs(n):
            if not accept(g):
                continue
            if best is None or g.num_edges > best:
                best, witnesses = g.num_edges, [g]
            elif g.num_edges == best:
                witnesses.append(g)
    return best, witnesses


def count_classes_burnside(n: int) -> int:
    """Isomorphism classes on n vertices as the orbit count of S_n acting on vertex pairs."""
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    total = 0
    for perm in itertools.permutations(range(n)):
        seen = [False] * len(pairs)
        cycles = 0
        for k in range(len(pairs)):
            if seen[k]:
                continue
            cycles += 1
            j = k
            while not seen[j]:
                seen[j] = True
                u, v = pairs[j]
                a, b = perm[u], perm[v]
                j = index[(a, b) if a < b else (b, a)]
        total += 1 << cycles
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return total // fact
