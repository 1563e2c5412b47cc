"""Canonical labelling and isomorphism testing for small graphs.

The canonical form of a graph is the lexicographically least graph6 string
among the relabellings reached by an individualisation-refinement search
(equitable colour refinement, then branching on the first non-singleton cell,
with automorphism pruning).  Two graphs are isomorphic iff their forms agree.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .errors import CapacityError
from .graph import Graph, _encode_n, g6_decode

CANON_MAX_N = 16


@dataclass(frozen=True, order=True)
class CanonicalForm:
    g6: bytes

    def __str__(self) -> str:
        return self.g6.decode("ascii")

    def graph(self) -> Graph:
        return g6_decode(self.g6)


def code_to_graph6(n: int, code: int) -> bytes:
    """graph6 bytes for an upper-triangle bit string given as an integer (first pair = MSB)."""
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    code <<= 6 * nbytes - nbits
    body = bytes(((code >> (6 * (nbytes - 1 - i))) & 63) + 63 for i in range(nbytes))
    return _encode_n(n) + body


def _check(g: Graph) -> None:
    if g.n > CANON_MAX_N:
        raise CapacityError(f"canonical labelling is capped at n <= {CANON_MAX_N}")


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, list[int], list[tuple[int, ...]]]:
    """Return ``(form, lab, generators)``.

    ``lab[i]`` is the vertex of ``g`` that sits at position ``i`` in the
    canonical graph; ``generators`` generate Aut(g).
    """
    _check(g)
    code, lab, gens = _kernels.canon_search(g.n, g.adj)
    return CanonicalForm(code_to_graph6(g.n, code)), list(lab), [tuple(p) for p in gens]


def canonical_form(g: Graph) -> CanonicalForm:
    _check(g)
    return CanonicalForm(code_to_graph6(g.n, _kernels.canon_search(g.n, g.adj)[0]))


def canonical_graph(g: Graph) -> Graph:
    return canonical_form(g).graph()


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    return canonical_labeling(g)[2]


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    _check(g1)
    _check(g2)
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return canonical_form(g1) == canonical_form(g2)
