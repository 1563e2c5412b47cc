"""Isomorph-free generation of simple graphs and exhaustive extremal searches.

Graphs on ``n`` vertices are generated by adding one edge at a time, with
canonical-augmentation rejection: a child ``G + e`` is kept only if ``e`` lies
in the automorphism orbit of the child's canonical deletion edge (the last
edge of its canonical graph), and only one non-edge per automorphism orbit of
the parent is tried.  Each isomorphism class is then produced exactly once.

Filters whose violation is preserved by adding edges (maximum degree above a
bound, matching number above a bound, independence number below a required
value) prune whole subtrees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import _kernels
from .canon import CanonicalForm, canonical_form
from .errors import CapacityError, DomainError
from .graph import Graph

ENUM_MAX_N = 9
MODES = ("le", "eq")


@dataclass(frozen=True)
class GraphFilter:
    """Parameter constraints on generated graphs.

    With ``mode="le"`` each given parameter is an upper bound; with
    ``mode="eq"`` it must be matched exactly.
    """

    delta: int | None = None
    nu: int | None = None
    alpha: int | None = None
    no_isolated: bool = False
    mode: str = "le"

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise DomainError(f"constraint mode must be one of {MODES}, got {self.mode!r}")

    def _cmp(self, value: int, bound: int) -> bool:
        return value == bound if self.mode == "eq" else value <= bound

    def prunes(self, n: int, adj: tuple[int, ...]) -> bool:
        """True if this graph and every graph obtained by adding edges fail the filter."""
        if self.delta is not None and max(row.bit_count() for row in adj) > self.delta:
            return True
        if self.nu is not None and _kernels.matching_number(n, adj) > self.nu:
            return True
        if self.mode == "eq" and self.alpha is not None:
            if _kernels.max_independent_set(n, adj)[0] < self.alpha:
                return True
        return False

    def accepts(self, g: Graph) -> bool:
        if self.no_isolated and any(row == 0 for row in g.adj):
            return False
        if self.delta is not None and not self._cmp(g.max_degree(), self.delta):
            return False
        if self.nu is not None and not self._cmp(_kernels.matching_number(g.n, g.adj), self.nu):
            return False
        if self.alpha is not None:
            if not self._cmp(_kernels.max_independent_set(g.n, g.adj)[0], self.alpha):
                return False
        return True

    def describe(self) -> dict[str, object]:
        return {
            "delta": self.delta,
            "nu": self.nu,
            "alpha": self.alpha,
            "no_isolated": self.no_isolated,
            "mode": self.mode,
        }


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def _nonedge_orbit_reps(n: int, adj: tuple[int, ...], gens) -> list[tuple[int, int]]:
    nonedges = [(i, j) for j in range(n) for i in range(j) if not adj[j] >> i & 1]
    if not gens or not nonedges:
        return nonedges
    index = {e: k for k, e in enumerate(nonedges)}
    parent = list(range(len(nonedges)))
    for g in gens:
        for k, (i, j) in enumerate(nonedges):
            a, b = g[i], g[j]
            other = index[(a, b) if a < b else (b, a)]
            ra, rb = _find(parent, k), _find(parent, other)
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
    return [e for k, e in enumerate(nonedges) if _find(parent, k) == k]


def _deletion_edge(n: int, code: int, lab) -> tuple[int, int]:
    """Edge of the original graph that is last in its canonical graph's bit order."""
    nbits = n * (n - 1) // 2
    k = nbits - (code & -code).bit_length()
    j = 1
    while j * (j + 1) // 2 <= k:
        j += 1
    i = k - j * (j - 1) // 2
    a, b = lab[i], lab[j]
    return (a, b) if a < b else (b, a)


def _same_edge_orbit(e: tuple[int, int], f: tuple[int, int], gens) -> bool:
    if e == f:
        return True
    seen = {f}
    frontier = [f]
    while frontier:
        nxt = []
        for u, v in frontier:
            for g in gens:
                a, b = g[u], g[v]
                img = (a, b) if a < b else (b, a)
                if img not in seen:
                    if img == e:
                        return True
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return False


def _generate(n: int, filt: GraphFilter | None, prune: bool) -> Iterator[tuple[int, ...]]:
    canon = _kernels.canon_search
    root = (0,) * n

    def visit(adj: tuple[int, ...], gens) -> Iterator[tuple[int, ...]]:
        yield adj
        for i, j in _nonedge_orbit_reps(n, adj, gens):
            rows = list(adj)
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            child = tuple(rows)
            if prune and filt is not None and filt.prunes(n, child):
                continue
            code, lab, child_gens = canon(n, child)
            if _same_edge_orbit((i, j), _deletion_edge(n, code, lab), child_gens):
                yield from visit(child, child_gens)

    if prune and filt is not None and filt.prunes(n, root):
        return
    yield from visit(root, canon(n, root)[2])


class GraphStream:
    """Iterator over one representative per isomorphism class on ``n`` vertices.

    ``yielded`` counts graphs passed to the consumer; ``rejected`` counts
    generated graphs that failed the filter (pruned subtrees are not counted).
    """

    def __init__(self, n: int, filt: GraphFilter | None = None, *, prune: bool = True):
        if not 1 <= n <= ENUM_MAX_N:
            raise CapacityError(f"exhaustive generation supports 1 <= n <= {ENUM_MAX_N}, got {n}")
        self.n = n
        self.filter = filt
        self.yielded = 0
        self.rejected = 0
        self._it = self._run(prune)

    def _run(self, prune: bool) -> Iterator[Graph]:
        filt = self.filter
        for adj in _generate(self.n, filt, prune):
            g = Graph._unchecked(self.n, adj)
            if filt is None or filt.accepts(g):
                self.yielded += 1
                yield g
            else:
                self.rejected += 1

    def __iter__(self) -> GraphStream:
        return self

    def __next__(self) -> Graph:
        return next(self._it)


def all_graphs(n: int, filt: GraphFilter | None = None, *, prune: bool = True) -> GraphStream:
    return GraphStream(n, filt, prune=prune)


def graphs_up_to(n_max: int, filt: GraphFilter | None = None, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from all_graphs(n, filt)


@dataclass
class ExtremalResult:
    """Outcome of an exhaustive search; ``max_edges`` is None for an empty search space."""

    max_edges: int | None
    extremal: list[CanonicalForm] = field(default_factory=list)
    scanned: int = 0
    n_max: int = 0


def extremal_search(
    filt: GraphFilter,
    n_max: int,
    *,
    n_min: int = 1,
    source: Iterable[Graph] | None = None,
) -> ExtremalResult:
    """Maximum edge count over all graphs with ``n_min <= n <= n_max`` passing ``filt``,
    and every graph attaining it up to isomorphism.

    ``source`` replaces generation with an external stream of graphs (for
    example decoded graph6 lines); it is filtered the same way.
    """
    if source is None:
        graphs: Iterable[Graph] = graphs_up_to(n_max, filt, n_min)
    else:
        graphs = (g for g in source if n_min <= g.n <= n_max and filt.accepts(g))
    best: int | None = None
    forms: set[CanonicalForm] = set()
    scanned = 0
    for g in graphs:
        scanned += 1
        m = g.num_edges
        if best is None or m > best:
            best = m
            forms = {canonical_form(g)}
        elif m == best:
            forms.add(canonical_form(g))
    return ExtremalResult(best, sorted(forms), scanned, n_max)
