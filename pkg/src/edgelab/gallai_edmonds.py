"""Gallai-Edmonds decomposition computed from its definition, plus executable
checks of the structure theorem and the stability lemma."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graph import Graph, VertexSet
from .matching import (
    Matching,
    is_factor_critical,
    has_perfect_matching,
    iter_maximum_matchings,
    matching_number,
    max_matching_bruteforce,
)

STRUCTURE_MAX_N = 12
STRUCTURE_UNIVERSAL_MAX_N = 9
STABILITY_MAX_N = 10


@dataclass(frozen=True)
class GallaiEdmonds:
    D: VertexSet
    A: VertexSet
    C: VertexSet
    d_components: tuple[VertexSet, ...]

    @property
    def essential(self) -> VertexSet:
        return self.A | self.C


def _nu(g: Graph, bruteforce: bool) -> int:
    return max_matching_bruteforce(g) if bruteforce else matching_number(g)


def essential_vertices(g: Graph, *, bruteforce: bool = False) -> VertexSet:
    """Vertices whose deletion lowers the matching number (covered by every maximum matching)."""
    nu = _nu(g, bruteforce)
    return VertexSet.of(v for v in range(g.n) if _nu(g.delete_vertex(v), bruteforce) == nu - 1)


def gallai_edmonds(g: Graph, *, bruteforce: bool = False) -> GallaiEdmonds:
    s = essential_vertices(g, bruteforce=bruteforce)
    d = VertexSet(g.vertex_mask & ~s.mask)
    a = VertexSet.of(v for v in s if g.adj[v] & d.mask)
    c = s - a
    sub = g.induced_subgraph(d)
    members = d.to_list()
    comps = tuple(VertexSet.of(members[i] for i in comp) for comp in sub.components())
    return GallaiEdmonds(D=d, A=a, C=c, d_components=comps)


def _matching_fits(ge: GallaiEdmonds, m: Matching) -> bool:
    """Near-perfect on each D-component, perfect on C, A matched into distinct D-components."""
    mate = m.mate()
    for comp in ge.d_components:
        inside = sum(1 for u, v in m.edges if u in comp and v in comp)
        if 2 * inside != len(comp) - 1:
            return False
    for v in ge.C:
        if mate.get(v) not in ge.C:
            return False
    used = set()
    for v in ge.A:
        w = mate.get(v)
        if w is None or w not in ge.D:
            return False
        k = next(i for i, comp in enumerate(ge.d_components) if w in comp)
        if k in used:
            return False
        used.add(k)
    return True


def verify_structure_theorem(g: Graph) -> bool:
    """Check clauses (a), (b), (c) of the Edmonds-Gallai structure theorem on ``g``.

    Matching numbers come from the brute-force oracle.  Clause (c) is checked for
    every maximum matching when n <= 9 and for at least one when 9 < n <= 12.
    """
    if g.n > STRUCTURE_MAX_N:
        raise CapacityError(f"structure theorem check is capped at n <= {STRUCTURE_MAX_N}")
    ge = gallai_edmonds(g, bruteforce=True)
    for comp in ge.d_components:
        if not is_factor_critical(g.induced_subgraph(comp), bruteforce=True):
            return False
    if not has_perfect_matching(g.induced_subgraph(ge.C), bruteforce=True):
        return False
    nu = max_matching_bruteforce(g)
    matchings = iter_maximum_matchings(g, nu)
    if g.n <= STRUCTURE_UNIVERSAL_MAX_N:
        return all(_matching_fits(ge, m) for m in matchings)
    return any(_matching_fits(ge, m) for m in matchings)


def _lift(vs: VertexSet, u: int) -> VertexSet:
    """Map vertex indices of ``g.delete_vertex(u)`` back to those of ``g``."""
    low = vs.mask & ((1 << u) - 1)
    return VertexSet(low | (vs.mask >> u << (u + 1)))


def verify_stability(g: Graph) -> bool:
    """Check all three clauses of the stability lemma for every vertex of ``g``."""
    if g.n > STABILITY_MAX_N:
        raise CapacityError(f"stability check is capped at n <= {STABILITY_MAX_N}")
    ge = gallai_edmonds(g)
    for u in range(g.n):
        sub = gallai_edmonds(g.delete_vertex(u))
        a, c, d = _lift(sub.A, u), _lift(sub.C, u), _lift(sub.D, u)
        bit = VertexSet(1 << u)
        if u in ge.A:
            ok = a == ge.A - bit and c == ge.C and d == ge.D
        elif u in ge.C:
            ok = ge.A.issubset(a) and c.issubset(ge.C - bit) and ge.D.issubset(d)
        else:
            ok = a.issubset(ge.A) and ge.C.issubset(c) and d.issubset(ge.D - bit)
        if not ok:
            return False
    return True


def inessential_by_enumeration(g: Graph) -> VertexSet:
    """Vertices missed by at least one maximum matching, found by listing them all."""
    missed = 0
    full = g.vertex_mask
    for m in iter_maximum_matchings(g):
        missed |= full & ~m.covered.mask
    return VertexSet(missed)

