"""Simple undirected graphs stored as bitset adjacency rows.

Vertices are the integers 0..n-1 and each row is a Python int whose bit v
marks adjacency to vertex v.  Graphs are immutable after construction and
every operation here returns a fresh value, so instances can be shared
freely across workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import CapacityError, FormatError

CAPACITY = 128


class Graph:
    """Immutable simple undirected graph on at most CAPACITY vertices."""

    __slots__ = ("n", "rows", "label")

    def __init__(self, n: int, rows: Iterable[int], label: Optional[str] = None):
        if n < 0 or n > CAPACITY:
            raise CapacityError(f"vertex count {n} outside 0..{CAPACITY}")
        rows = tuple(rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {v} has bits beyond vertex {n - 1}")
            if (row >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
        self.n = n
        self.rows = rows
        self.label = label

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]],
                   label: Optional[str] = None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, label)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min((r.bit_count() for r in self.rows), default=0)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> Iterator[int]:
        return iter_bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            upper = self.rows[u] >> (u + 1)
            for off in iter_bits(upper):
                yield (u, u + 1 + off)

    def with_label(self, label: str) -> "Graph":
        return Graph(self.n, self.rows, label)

    def validate(self) -> None:
        """Full symmetry check, used after decoding and in tests."""
        for u in range(self.n):
            for v in iter_bits(self.rows[u]):
                if not (self.rows[v] >> u) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        tag = f", label={self.label!r}" if self.label else ""
        return f"Graph(n={self.n}, e={self.edge_count()}{tag})"


@dataclass(frozen=True)
class Bipartition:
    """Two vertex bitsets covering V(G) with no edge inside either side."""

    left: int
    right: int

    def left_vertices(self) -> list[int]:
        return list(iter_bits(self.left))

    def right_vertices(self) -> list[int]:
        return list(iter_bits(self.right))

    def sizes(self) -> tuple[int, int]:
        return (self.left.bit_count(), self.right.bit_count())

    def side_of(self, v: int) -> int:
        """0 for left, 1 for right."""
        return 0 if (self.left >> v) & 1 else 1


@dataclass(frozen=True)
class GraphStats:
    n: int
    edge_count: int
    min_degree: int
    max_degree: int
    is_connected: bool
    bipartition: Optional[Bipartition]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def complete(n: int, label: Optional[str] = None) -> Graph:
    """K_n."""
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)],
                 label or f"K{n}")


def empty(n: int, label: Optional[str] = None) -> Graph:
    """n isolated vertices."""
    return Graph(n, [0] * n, label or f"{n}K1")


def complete_bipartite(a: int, b: int,
                       label: Optional[str] = None) -> tuple[Graph, Bipartition]:
    """K_{a,b} with left side 0..a-1 and right side a..a+b-1."""
    n = a + b
    left = (1 << a) - 1
    right = ((1 << n) - 1) ^ left
    rows = [right] * a + [left] * b
    g = Graph(n, rows, label or f"K{{{a},{b}}}")
    return g, Bipartition(left, right)


def disjoint_union(g: Graph, h: Graph, label: Optional[str] = None) -> Graph:
    """G + H, vertices of H shifted past those of G."""
    n = g.n + h.n
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(n, rows, label)


def join(g: Graph, h: Graph, label: Optional[str] = None) -> Graph:
    """G v H: disjoint union plus all |G|*|H| cross edges."""
    n = g.n + h.n
    gmask = (1 << g.n) - 1
    hmask = ((1 << n) - 1) ^ gmask
    rows = [r | hmask for r in g.rows] + [(r << g.n) | gmask for r in h.rows]
    return Graph(n, rows, label)


def complement(g: Graph, label: Optional[str] = None) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [(full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)],
                 label)


def delete_vertex(g: Graph, v: int, label: Optional[str] = None) -> Graph:
    """Remove v; remaining vertices keep their relative order."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph of order {g.n}")
    low = (1 << v) - 1
    rows = []
    for u, row in enumerate(g.rows):
        if u == v:
            continue
        rows.append((row & low) | ((row >> (v + 1)) << v))
    return Graph(g.n - 1, rows, label)


def reachable_from(rows: tuple[int, ...], start: int) -> int:
    """Bitset of vertices reachable from start."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return reachable_from(g.rows, 0) == (1 << g.n) - 1


def two_coloring(g: Graph) -> Optional[Bipartition]:
    """Proper 2-coloring across all components, or None.

    Each component's lowest vertex is colored into the left side, so the
    returned sides are deterministic.
    """
    left = 0
    right = 0
    seen = 0
    full = (1 << g.n) - 1
    for root in range(g.n):
        if (seen >> root) & 1:
            continue
        level = 1 << root
        side = 0
        while level:
            if side == 0:
                left |= level
            else:
                right |= level
            seen |= level
            nxt = 0
            for v in iter_bits(level):
                nxt |= g.rows[v]
            level = nxt & ~seen
            side ^= 1
    if seen != full:
        raise AssertionError("coloring missed vertices")
    for v in iter_bits(left):
        if g.rows[v] & left:
            return None
    for v in iter_bits(right):
        if g.rows[v] & right:
            return None
    return Bipartition(left, right)


def basic_stats(g: Graph) -> GraphStats:
    degs = g.degrees()
    return GraphStats(
        n=g.n,
        edge_count=sum(degs) // 2,
        min_degree=min(degs, default=0),
        max_degree=max(degs, default=0),
        is_connected=is_connected(g),
        bipartition=two_coloring(g),
    )


def relabel(g: Graph, perm: list[int]) -> Graph:
    """Image of g under the permutation mapping old vertex v to perm[v]."""
    rows = [0] * g.n
    for u in range(g.n):
        r = 0
        for v in iter_bits(g.rows[u]):
            r |= 1 << perm[v]
        rows[perm[u]] = r
    return Graph(g.n, rows, g.label)


# graph6 encoding: colex upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3),
# ... packed into 6-bit groups, each offset by 63.

def _g6_header(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    # three 6-bit groups after a 126 marker cover n up to 258047
    return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63,
                  (n & 63) + 63])


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            bits.append((col >> i) & 1)
    out = bytearray(_g6_header(g.n))
    for pos in range(0, len(bits), 6):
        group = 0
        for b in range(6):
            group <<= 1
            if pos + b < len(bits):
                group |= bits[pos + b]
        out.append(group + 63)
    return out.decode("ascii")


def graph6_decode(text: str, label: Optional[str] = None) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = s.encode("ascii")
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] == 126:
        if len(data) < 4:
            raise FormatError("truncated graph6 header")
        if data[1] == 126:
            raise FormatError("graph6 orders beyond 258047 not supported")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n < 0 or n > CAPACITY:
        raise CapacityError(f"graph6 order {n} outside capacity {CAPACITY}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    bits = []
    for byte in body:
        if not 63 <= byte <= 126:
            raise FormatError(f"invalid graph6 byte {byte}")
        group = byte - 63
        for shift in range(5, -1, -1):
            bits.append((group >> shift) & 1)
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, rows, label)


def edge_list_encode(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count()}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def edge_list_decode(text: str, label: Optional[str] = None) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"bad edge-list header: {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError(f"bad edge-list header: {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"bad edge line: {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"bad edge line: {ln!r}") from exc
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"edge ({u}, {v}) invalid for n={n}")
        edges.append((u, v))
    return Graph.from_edges(n, edges, label)
