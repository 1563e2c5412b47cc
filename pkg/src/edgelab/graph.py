"""Immutable simple graphs on at most 64 vertices, stored as neighbour bitsets.

Vertex ``v``'s neighbourhood is the integer ``adj[v]`` whose bit ``u`` is set
iff ``{u, v}`` is an edge.  All operations return new graphs; nothing mutates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, DomainError, ParseError

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A set of vertex indices backed by a bitmask."""

    mask: int = 0

    @classmethod
    def of(cls, vertices: Iterable[int]) -> VertexSet:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.mask >> v & 1)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: VertexSet) -> VertexSet:
        return VertexSet(self.mask & ~other.mask)

    def issubset(self, other: VertexSet) -> bool:
        return self.mask & ~other.mask == 0

    def min(self) -> int:
        if not self.mask:
            raise ValueError("min() of an empty VertexSet")
        return (self.mask & -self.mask).bit_length() - 1

    def to_list(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return "{" + ", ".join(map(str, self)) + "}"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with ``n <= 64`` vertices labelled ``0..n-1``."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise DomainError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise DomainError(f"vertex {v} has a neighbour index >= n")
            if row >> v & 1:
                raise DomainError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise DomainError(f"asymmetric adjacency between {u} and {v}")

    # -- construction ---------------------------------------------------------

    @classmethod
    def _unchecked(cls, n: int, adj: tuple[int, ...]) -> Graph:
        """Skip validation; for adjacency produced by trusted internal code."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g


    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """K_{1,leaves} with the centre at vertex 0."""
        return cls.complete_bipartite(1, leaves)

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # -- queries --------------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise DomainError(f"vertex {v} out of range for n={self.n}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        return [(u, v) for v in range(self.n) for u in iter_bits(self.adj[v] & ((1 << v) - 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.adj[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def max_degree(self) -> int:
        if self.n == 0:
            raise DomainError("maximum degree of the empty graph is undefined")
        return max(row.bit_count() for row in self.adj)

    def isolated_vertices(self) -> VertexSet:
        return VertexSet.of(v for v in range(self.n) if not self.adj[v])

    # -- derived graphs -------------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int] | VertexSet) -> Graph:
        """Induced subgraph; vertex ``vertices[i]`` (sorted) becomes ``i``."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        rows = []
        for v in keep:
            row = 0
            for u in iter_bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(keep), tuple(rows))

    def delete_vertex(self, v: int) -> Graph:
        self._check_vertex(v)
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adj):
            if u != v:
                rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph(self.n - 1, tuple(rows))

    def delete_vertices(self, vertices: Iterable[int] | VertexSet) -> Graph:
        drop = set(vertices)
        return self.induced_subgraph(v for v in range(self.n) if v not in drop)

    def add_edge(self, u: int, v: int) -> Graph:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise DomainError("self-loops are not allowed")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph in which old vertex ``v`` is renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise DomainError("relabelling is not a permutation of the vertex set")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            new = 0
            for u in iter_bits(row):
                new |= 1 << perm[u]
            rows[perm[v]] = new
        return Graph(self.n, tuple(rows))

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(self.adj)))

    def components(self) -> list[VertexSet]:
        """Connected components, ordered by smallest member."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = frontier = 1 << v
            while frontier:
                grow = 0
                for u in iter_bits(frontier):
                    grow |= self.adj[u]
                frontier = grow & ~comp
                comp |= frontier
            seen |= comp
            out.append(VertexSet(comp))
        return out

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def is_complete(self) -> bool:
        return self.num_edges == self.n * (self.n - 1) // 2

    def is_odd_cycle(self) -> bool:
        return (
            self.n >= 3
            and self.n % 2 == 1
            and all(row.bit_count() == 2 for row in self.adj)
            and self.is_connected()
        )

    # -- serialisation --------------------------------------------------------

    def to_graph6(self) -> bytes:
        return g6_encode(self)

    @classmethod
    def from_graph6(cls, data: bytes | str) -> Graph:
        return g6_decode(data)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges}, g6={g6_encode(self).decode()!r})"


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Block-diagonal union; the i-th graph's vertices follow those of its predecessors."""
    rows: list[int] = []
    offset = 0
    for g in graphs:
        if offset + g.n > MAX_VERTICES:
            raise CapacityError(f"disjoint union exceeds {MAX_VERTICES} vertices")
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


degree = Graph.degree
max_degree = Graph.max_degree
delete_vertex = Graph.delete_vertex
components = Graph.components


# -- graph6 ---------------------------------------------------------------------


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def g6_encode(g: Graph) -> bytes:
    """graph6 bytes of ``g`` (no header, no trailing newline)."""
    out = bytearray(_encode_n(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def g6_decode(data: bytes | str) -> Graph:
    """Parse one graph6 string.  Trailing whitespace is ignored; headers are rejected."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("graph6 data must be ASCII") from exc
    data = data.rstrip(b"\r\n \t")
    if not data:
        raise ParseError("empty graph6 string")
    for b in data:
        if not 63 <= b <= 126:
            raise ParseError(f"invalid graph6 byte {b!r}")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise ParseError(f"graphs beyond {MAX_VERTICES} vertices are not supported")
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        if n < 63:
            raise ParseError("non-canonical graph6 size field")
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise ParseError(f"graph6 vertex count {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    acc = 0
    for b in body:
        acc = acc << 6 | (b - 63)
    pad = 6 * len(body) - nbits
    if acc & ((1 << pad) - 1):
        raise ParseError("nonzero graph6 padding bits")
    acc >>= pad
    rows = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if acc >> pos & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[bytes | str]) -> Iterator[Graph]:
    """Decode a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield g6_decode(line)
