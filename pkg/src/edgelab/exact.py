"""Exact small-graph solvers: independence number, chromatic number, chromatic index."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Mapping

from . import _kernels
from .errors import CapacityError
from .graph import Graph, VertexSet, iter_bits

INDEPENDENCE_MAX_N = 40
CHROMATIC_MAX_N = 16
CHROMATIC_INDEX_MAX_EDGES = 24


@dataclass(frozen=True)
class ColoringCertificate:
    """A proper colouring witnessing a chromatic number or chromatic index."""

    kind: str  # "vertex" or "edge"
    num_classes: int
    assignment: Mapping[Hashable, int] = field(hash=False)

    def is_valid_for(self, g: Graph) -> bool:
        if self.kind == "vertex":
            items = list(range(g.n))
            conflicts = [(u, v) for u, v in g.edges()]
        elif self.kind == "edge":
            items = g.edges()
            conflicts = [
                (e, f) for i, e in enumerate(items) for f in items[i + 1:] if set(e) & set(f)
            ]
        else:
            return False
        if set(self.assignment) != set(items):
            return False
        if any(not 0 <= c < self.num_classes for c in self.assignment.values()):
            return False
        if set(self.assignment.values()) != set(range(self.num_classes)):
            return False
        return all(self.assignment[a] != self.assignment[b] for a, b in conflicts)


def independence_number(g: Graph) -> int:
    """alpha(g) by branch and bound with a greedy clique-cover bound."""
    if g.n > INDEPENDENCE_MAX_N:
        raise CapacityError(f"independence number is capped at n <= {INDEPENDENCE_MAX_N}")
    return _kernels.max_independent_set(g.n, g.adj)[0]


def max_independent_set(g: Graph) -> VertexSet:
    if g.n > INDEPENDENCE_MAX_N:
        raise CapacityError(f"independence number is capped at n <= {INDEPENDENCE_MAX_N}")
    return VertexSet(_kernels.max_independent_set(g.n, g.adj)[1])


def clique_number(g: Graph) -> int:
    return independence_number(g.complement())


def _k_colouring(n: int, adj: tuple[int, ...], k: int) -> list[int] | None:
    """Backtracking k-colouring with DSATUR vertex order; None if infeasible."""
    colour = [-1] * n
    degree = [row.bit_count() for row in adj]

    def pick() -> int:
        best_v, best_key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            seen = 0
            for u in iter_bits(adj[v]):
                if colour[u] >= 0:
                    seen |= 1 << colour[u]
            key = (seen.bit_count(), degree[v])
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def place(done: int, used: int) -> bool:
        if done == n:
            return True
        v = pick()
        forbidden = 0
        for u in iter_bits(adj[v]):
            if colour[u] >= 0:
                forbidden |= 1 << colour[u]
        # colours above `used` are interchangeable, so only one fresh colour is tried
        for c in range(min(k, used + 1)):
            if not forbidden >> c & 1:
                colour[v] = c
                if place(done + 1, max(used, c + 1)):
                    return True
        colour[v] = -1
        return False

    return list(colour) if place(0, 0) else None


def _chromatic(n: int, adj: tuple[int, ...], lower: int) -> tuple[int, list[int]]:
    if n == 0:
        return 0, []
    k = max(lower, 1)
    while True:
        colouring = _k_colouring(n, adj, k)
        if colouring is not None:
            return k, colouring
        k += 1


def chromatic_number(
    g: Graph, with_certificate: bool = False
) -> tuple[int, ColoringCertificate | None]:
    """Exact chi(g), starting the search at the clique number."""
    if g.n > CHROMATIC_MAX_N:
        raise CapacityError(f"chromatic number is capped at n <= {CHROMATIC_MAX_N}")
    lower = clique_number(g) if g.n else 0
    k, colouring = _chromatic(g.n, g.adj, lower)
    cert = None
    if with_certificate:
        cert = ColoringCertificate("vertex", k, dict(enumerate(colouring)))
    return k, cert


def line_graph(g: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``g`` together with the edge list that indexes its vertices."""
    edges = g.edges()
    incident: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    rows = [(incident[u] | incident[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return Graph(len(edges), tuple(rows)), edges


def chromatic_index(
    g: Graph, with_certificate: bool = False
) -> tuple[int, ColoringCertificate | None]:
    """Exact chi'(g) as the chromatic number of the line graph."""
    m = g.num_edges
    if m > CHROMATIC_INDEX_MAX_EDGES:
        raise CapacityError(f"chromatic index is capped at |E| <= {CHROMATIC_INDEX_MAX_EDGES}")
    lg, edges = line_graph(g)
    k, colouring = _chromatic(lg.n, lg.adj, g.max_degree() if g.n else 0)
    cert = None
    if with_certificate:
        cert = ColoringCertificate("edge", k, {e: colouring[i] for i, e in enumerate(edges)})
    return k, cert
