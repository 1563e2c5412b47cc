"""Closed-form edge bounds and the extremal graph families that attain them.

Three pairs of parameters are covered:

* independence number and matching number: ``e1``, with graphs ``build_G``
  (a clique on 2nu+1 vertices plus isolated vertices) and ``build_H`` (a split
  graph: K_{alpha,nu} with the nu-side completed to a clique);
* independence number and maximum degree: ``e2``, attained only by
  ``build_F`` (alpha disjoint copies of K_{Delta+1});
* maximum degree and matching number: ``e3``, built from copies of
  ``build_J`` and stars, with ``build_second_extremal`` producing two
  non-isomorphic extremal graphs when the extremal graph is not unique.

All arithmetic is exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import DomainError
from .graph import Graph, disjoint_union


class Regime(str, enum.Enum):
    ALPHA_NU_LT = "ALPHA_NU_LT"
    ALPHA_NU_GT = "ALPHA_NU_GT"
    ALPHA_NU_EQ = "ALPHA_NU_EQ"
    ALPHA_DELTA = "ALPHA_DELTA"
    DELTA_NU_DIVIDES = "DELTA_NU_DIVIDES"
    DELTA_NU_NONDIVIDES = "DELTA_NU_NONDIVIDES"
    DELTA_NU_TRIVIAL = "DELTA_NU_TRIVIAL"


class ExtremalCount(str, enum.Enum):
    ONE = "one"
    TWO = "two"
    MANY = "many"


@dataclass(frozen=True)
class BoundCase:
    regime: Regime
    value: int
    expected_extremal_count: ExtremalCount


def _positive(**params: int) -> None:
    for name, value in params.items():
        if not isinstance(value, int) or value < 1:
            raise DomainError(f"{name} must be a positive integer, got {value!r}")


def ceil_half(x: int) -> int:
    return (x + 1) // 2


# -- bound formulas ---------------------------------------------------------------


def e1(alpha: int, nu: int) -> BoundCase:
    """Max edges given the independence number and the matching number."""
    _positive(alpha=alpha, nu=nu)
    value = max(comb(2 * nu + 1, 2), alpha * nu + comb(nu, 2))
    sign = 2 * alpha - 3 * (nu + 1)
    if sign < 0:
        return BoundCase(Regime.ALPHA_NU_LT, value, ExtremalCount.ONE)
    if sign > 0:
        return BoundCase(Regime.ALPHA_NU_GT, value, ExtremalCount.ONE)
    return BoundCase(Regime.ALPHA_NU_EQ, value, ExtremalCount.TWO)


def e2(alpha: int, delta: int) -> BoundCase:
    """Max edges given the independence number and the maximum degree."""
    _positive(alpha=alpha, delta=delta)
    return BoundCase(Regime.ALPHA_DELTA, alpha * comb(delta + 1, 2), ExtremalCount.ONE)


def e3_value(delta: int, nu: int) -> int:
    return delta * nu + (nu // ceil_half(delta)) * (delta // 2)


def e3(delta: int, nu: int, mode: str = "eq") -> BoundCase:
    """Max edges given the maximum degree and the matching number.

    ``mode`` is the constraint reading for the extremal count: ``"eq"`` for
    Delta(G) = delta and nu(G) = nu, ``"le"`` for the <= reading.  The value is
    the same either way; only the (3, 1) trivial case differs in count.
    """
    _positive(delta=delta, nu=nu)
    if mode not in ("eq", "le"):
        raise DomainError(f"unknown constraint mode {mode!r}")
    value = e3_value(delta, nu)
    if delta == 1 or nu == 1:
        two = mode == "le" and delta == 3 and nu == 1
        return BoundCase(
            Regime.DELTA_NU_TRIVIAL, value, ExtremalCount.TWO if two else ExtremalCount.ONE
        )
    if nu % ceil_half(delta) == 0:
        return BoundCase(Regime.DELTA_NU_DIVIDES, value, ExtremalCount.ONE)
    return BoundCase(Regime.DELTA_NU_NONDIVIDES, value, ExtremalCount.MANY)


def eq9_upper(delta: int, nu: int) -> Fraction:
    """(delta + floor(delta/2) / ceil(delta/2)) * nu, an upper bound on e3 that is
    tight exactly when ceil(delta/2) divides nu."""
    _positive(delta=delta, nu=nu)
    return (delta + Fraction(delta // 2, ceil_half(delta))) * nu


def j_edge_count(delta: int) -> Fraction:
    """Closed-form |E(J_delta)|; always an integer, returned as a Fraction for audit."""
    return (delta + Fraction(delta // 2, ceil_half(delta))) * ceil_half(delta)


def erdos_gallai_bound(n: int, nu: int) -> int:
    return max(comb(2 * nu + 1, 2), (n - nu) * nu + comb(nu, 2))


# -- constructions ----------------------------------------------------------------


def build_G(alpha: int, nu: int) -> Graph:
    """K_{2nu+1} on vertices 0..2nu, then alpha-1 isolated vertices."""
    _positive(alpha=alpha, nu=nu)
    return disjoint_union([Graph.complete(2 * nu + 1), Graph.empty(alpha - 1)])


def build_H(alpha: int, nu: int) -> Graph:
    """Clique on vertices 0..nu-1, each joined to all of the independent vertices nu..nu+alpha-1."""
    _positive(alpha=alpha, nu=nu)
    if alpha < nu:
        raise DomainError(f"H needs alpha >= nu (got alpha={alpha}, nu={nu})")
    edges = [(i, j) for j in range(nu) for i in range(j)]
    edges += [(i, nu + k) for i in range(nu) for k in range(alpha)]
    return Graph.from_edges(alpha + nu, edges)


def build_F(alpha: int, delta: int) -> Graph:
    _positive(alpha=alpha, delta=delta)
    return disjoint_union([Graph.complete(delta + 1)] * alpha)


def build_J(delta: int) -> Graph:
    """The one-component building block for the degree/matching bound.

    Even delta: K_{delta+1}.  Odd delta = 2j-1: K_{2j} on 0..2j-1 minus the
    perfect matching {2i, 2i+1}, plus an apex 2j joined to 0..2j-2.
    """
    if not isinstance(delta, int) or delta < 2:
        raise DomainError(f"J needs delta >= 2, got {delta!r}")
    if delta % 2 == 0:
        return Graph.complete(delta + 1)
    j = (delta + 1) // 2
    edges = [(a, b) for b in range(2 * j) for a in range(b) if not (a % 2 == 0 and b == a + 1)]
    edges += [(a, 2 * j) for a in range(2 * j - 1)]
    return Graph.from_edges(2 * j + 1, edges)


def build_merged_component(delta: int) -> Graph:
    """Factor-critical graph on 2(ceil(delta/2)+1)+1 vertices with |E(J_delta)| + delta
    edges and maximum degree delta.

    Built as a circulant with an odd Hamiltonian cycle: for even delta = 2c the
    circulant C_m(1..c); for odd delta = 2j-1 the circulant C_m(1..j-1) plus the
    chords {k, k+j+1} for k = 1..j+1, leaving vertex 0 one short of delta.
    """
    if not isinstance(delta, int) or delta < 2:
        raise DomainError(f"merged component needs delta >= 2, got {delta!r}")
    c = ceil_half(delta)
    m = 2 * (c + 1) + 1
    if delta % 2 == 0:
        dists = range(1, c + 1)
        chords: list[tuple[int, int]] = []
    else:
        dists = range(1, c)
        chords = [(k, k + c + 1) for k in range(1, c + 2)]
    edges = {tuple(sorted((i, (i + d) % m))) for i in range(m) for d in dists}
    edges.update(chords)
    return Graph.from_edges(m, sorted(edges))


def canonical_witness(delta: int, nu: int) -> Graph:
    """s copies of J_delta and t stars K_{1,delta}, with s = floor(nu/ceil(delta/2))
    and t = nu - ceil(delta/2)*s; for delta = 1, nu disjoint edges."""
    _positive(delta=delta, nu=nu)
    if delta == 1:
        return disjoint_union([Graph.complete(2)] * nu)
    c = ceil_half(delta)
    s, t = divmod(nu, c)
    return disjoint_union([build_J(delta)] * s + [Graph.star(delta)] * t)


def build_second_extremal(delta: int, nu: int) -> tuple[Graph, Graph]:
    """Two non-isomorphic extremal graphs for (delta, nu) when ceil(delta/2) does not divide nu.

    The first is ``canonical_witness``.  The second replaces two stars by one
    K_{2,delta} when there are at least two stars, and otherwise merges one J_delta
    and the single star into ``build_merged_component(delta)``.
    """
    if not (isinstance(delta, int) and isinstance(nu, int)) or delta < 2 or nu < 2:
        raise DomainError("second extremal graph needs delta >= 2 and nu >= 2")
    c = ceil_half(delta)
    s, t = divmod(nu, c)
    if t == 0:
        raise DomainError(f"ceil({delta}/2) divides {nu}: the extremal graph is unique")
    first = canonical_witness(delta, nu)
    j = build_J(delta)
    star = Graph.star(delta)
    if t >= 2:
        parts = [j] * s + [star] * (t - 2) + [Graph.complete_bipartite(2, delta)]
    else:
        parts = [j] * (s - 1) + [build_merged_component(delta)]
    return first, disjoint_union(parts)


def predicted_alpha_nu_extremal(alpha: int, nu: int) -> list[Graph]:
    """The extremal graphs for exact (alpha, nu) according to the case analysis."""
    case = e1(alpha, nu)
    if case.regime is Regime.ALPHA_NU_LT:
        return [build_G(alpha, nu)]
    if case.regime is Regime.ALPHA_NU_GT:
        return [build_H(alpha, nu)]
    return [build_G(alpha, nu), build_H(alpha, nu)]
