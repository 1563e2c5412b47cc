"""Maximum matchings: blossom algorithm, brute-force oracle, and derived predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import _kernels
from .errors import CapacityError, DomainError
from .graph import Graph, VertexSet, iter_bits

BRUTE_FORCE_MAX_N = 16
ENUMERATE_MAX_N = 12


@dataclass(frozen=True)
class Matching:
    """A set of pairwise vertex-disjoint edges, each stored as ``(u, v)`` with ``u < v``."""

    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_mate(cls, mate: list[int]) -> Matching:
        return cls(frozenset((v, m) for v, m in enumerate(mate) if m > v))

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def covered(self) -> VertexSet:
        return VertexSet.of(v for e in self.edges for v in e)

    def mate(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def is_valid_for(self, g: Graph) -> bool:
        seen: set[int] = set()
        for u, v in self.edges:
            if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                return False
            if u in seen or v in seen:
                return False
            seen.update((u, v))
        return True


def max_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching of ``g``.  Which one is unspecified."""
    return Matching.from_mate(_kernels.max_matching_mate(g.n, g.adj))


def matching_number(g: Graph) -> int:
    """nu(g), the size of a maximum matching."""
    return _kernels.matching_number(g.n, g.adj)


def max_matching_bruteforce(g: Graph) -> int:
    """nu(g) by exhaustive search over matchings.  Independent of the blossom code."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise CapacityError(f"brute-force matching is capped at n <= {BRUTE_FORCE_MAX_N}")
    adj = g.adj

    @lru_cache(maxsize=None)
    def best(mask: int) -> int:
        if mask & (mask - 1) == 0:
            return 0
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        result = best(rest)
        for u in iter_bits(adj[v] & rest):
            result = max(result, 1 + best(rest & ~(1 << u)))
        return result

    return best(g.vertex_mask)


def iter_maximum_matchings(g: Graph, nu: int | None = None) -> Iterator[Matching]:
    """Every maximum matching of ``g``, by exhaustive enumeration (n <= 12)."""
    if g.n > ENUMERATE_MAX_N:
        raise CapacityError(f"matching enumeration is capped at n <= {ENUMERATE_MAX_N}")
    target = max_matching_bruteforce(g) if nu is None else nu
    adj = g.adj
    chosen: list[tuple[int, int]] = []

    def walk(mask: int, need: int) -> Iterator[Matching]:
        if need == 0:
            yield Matching(frozenset(chosen))
            return
        if mask.bit_count() < 2 * need:
            return
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        for u in iter_bits(adj[v] & rest):
            chosen.append((v, u))
            yield from walk(rest & ~(1 << u), need - 1)
            chosen.pop()
        yield from walk(rest, need)

    yield from walk(g.vertex_mask, target)


def has_perfect_matching(g: Graph, *, bruteforce: bool = False) -> bool:
    if g.n % 2:
        return False
    nu = max_matching_bruteforce(g) if bruteforce else matching_number(g)
    return 2 * nu == g.n


def is_factor_critical(g: Graph, *, bruteforce: bool = False) -> bool:
    """Connected, and every single-vertex deletion leaves a perfect matching."""
    if g.n < 1:
        raise DomainError("factor-criticality needs at least one vertex")
    if g.n % 2 == 0 or not g.is_connected():
        return False
    return all(has_perfect_matching(g.delete_vertex(v), bruteforce=bruteforce) for v in range(g.n))
