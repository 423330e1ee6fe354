"""Exact distance-based invariants: distances, Wiener and Harary indices.

Harary values are exact fractions throughout; floats are never compared,
because the verification harness depends on equality at extremal graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from . import families
from .errors import (DisconnectedGraphError, NotBalancedBipartiteError,
                     UnsupportedFamilyError)
from .graphs import Bipartition, Graph, iter_bits

UNREACHABLE = -1


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return self.dist[pair[0]][pair[1]]

    def is_connected(self) -> bool:
        return all(d != UNREACHABLE for row in self.dist for d in row)

    def diameter(self) -> Optional[int]:
        """Largest finite distance, or None when some pair is unreachable."""
        if self.n == 0:
            return 0
        diam = 0
        for row in self.dist:
            for d in row:
                if d == UNREACHABLE:
                    return None
                if d > diam:
                    diam = d
        return diam


def _bfs_row(rows: tuple[int, ...], src: int, n: int) -> list[int]:
    dist = [UNREACHABLE] * n
    dist[src] = 0
    seen = 1 << src
    frontier = seen
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = d
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS-exact hop distances with unreachable pairs marked."""
    return DistanceMatrix(g.n, tuple(
        tuple(_bfs_row(g.rows, src, g.n)) for src in range(g.n)))


def distance_histogram(g: Graph) -> Optional[list[int]]:
    """hist[d] = number of unordered pairs at distance d, or None if
    the graph is disconnected.  hist[0] is always 0."""
    n = g.n
    full = (1 << n) - 1
    hist = [0] * (n + 1)
    rows = g.rows
    for src in range(n):
        seen = 1 << src
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            hist[d] += frontier.bit_count()
        if seen != full:
            return None
    for d in range(len(hist)):
        hist[d] //= 2
    return hist


def wiener_index(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs of a connected graph."""
    hist = distance_histogram(g)
    if hist is None:
        raise DisconnectedGraphError("Wiener index needs a connected graph")
    return sum(d * c for d, c in enumerate(hist))


def harary_index(g: Graph) -> Fraction:
    """Sum of reciprocal distances, exact and in lowest terms."""
    hist = distance_histogram(g)
    if hist is None:
        raise DisconnectedGraphError("Harary index needs a connected graph")
    return sum((Fraction(c, d) for d, c in enumerate(hist) if d and c),
               Fraction(0))


def wiener_and_harary(g: Graph) -> tuple[int, Fraction]:
    hist = distance_histogram(g)
    if hist is None:
        raise DisconnectedGraphError("indices need a connected graph")
    w = sum(d * c for d, c in enumerate(hist))
    h = sum((Fraction(c, d) for d, c in enumerate(hist) if d and c),
            Fraction(0))
    return w, h


def frac_str(x: Fraction) -> str:
    """Render p/q in lowest terms; integers keep an explicit /1."""
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Fact31Result:
    """Slack of the two diameter-2 identities; both are 0 iff diam <= 2."""

    slack_w: int
    slack_h: Fraction
    diam: int


def check_fact_3_1(g: Graph) -> Fact31Result:
    """Slack of W(G)+e(G) >= n(n-1) and e(G) >= 2H(G) - C(n,2)."""
    hist = distance_histogram(g)
    if hist is None:
        raise DisconnectedGraphError("fact check needs a connected graph")
    n = g.n
    e = g.edge_count()
    w = sum(d * c for d, c in enumerate(hist))
    h = sum((Fraction(c, d) for d, c in enumerate(hist) if d and c),
            Fraction(0))
    diam = max((d for d, c in enumerate(hist) if c), default=0)
    return Fact31Result(slack_w=w + e - n * (n - 1),
                        slack_h=Fraction(e) - (2 * h - comb(n, 2)),
                        diam=diam)


@dataclass(frozen=True)
class Fact51Result:
    """Balanced-bipartite analogue; slacks are 0 iff the distance condition
    holds (cross pairs within distance 3, same-side pairs at distance 2)."""

    slack_w: int
    slack_h: Fraction
    equality_condition: bool


def check_fact_5_1(g: Graph, parts: Bipartition) -> Fact51Result:
    left, right = parts.left, parts.right
    if left | right != (1 << g.n) - 1 or left & right:
        raise NotBalancedBipartiteError("bipartition does not cover V(G)")
    if left.bit_count() != right.bit_count():
        raise NotBalancedBipartiteError("partition sets differ in size")
    for v in iter_bits(left):
        if g.rows[v] & left:
            raise NotBalancedBipartiteError("edge inside left side")
    for v in iter_bits(right):
        if g.rows[v] & right:
            raise NotBalancedBipartiteError("edge inside right side")
    dm = all_pairs_distances(g)
    if not dm.is_connected():
        raise DisconnectedGraphError("fact check needs a connected graph")
    n = left.bit_count()
    e = g.edge_count()
    w = 0
    h = Fraction(0)
    condition = True
    verts = list(range(g.n))
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            d = dm.dist[u][v]
            w += d
            h += Fraction(1, d)
            same_side = parts.side_of(u) == parts.side_of(v)
            if same_side and d != 2:
                condition = False
            if not same_side and d > 3:
                condition = False
    w_bound = e + 3 * (n * n - e) + 4 * comb(n, 2)
    h_bound = Fraction(e) + Fraction(n * n - e, 3) + comb(n, 2)
    return Fact51Result(slack_w=w - w_bound,
                        slack_h=h_bound - h,
                        equality_condition=condition)


@dataclass(frozen=True)
class ClosedForm:
    e: int
    wiener: int
    harary: Fraction


def closed_form_wh(spec: families.FamilySpec) -> ClosedForm:
    """Edge count plus Wiener/Harary values from the diameter-2 identity
    (tags L, N, Nbar) or the balanced-bipartite identity (tag B)."""
    tag, n, k = spec.tag, spec.n, spec.k
    if tag in ("L", "N", "Nbar"):
        if tag == "Nbar" and k == 0:
            raise UnsupportedFamilyError(
                "Nbar with k=0 is disconnected; no closed form")
        e = families.edge_count(spec)
        return ClosedForm(e=e, wiener=n * (n - 1) - e,
                          harary=Fraction(e + comb(n, 2), 2))
    if tag == "B":
        e = families.edge_count(spec)
        return ClosedForm(e=e, wiener=5 * n * n - 2 * n - 2 * e,
                          harary=Fraction(e) + Fraction(n * n - e, 3)
                          + comb(n, 2))
    raise UnsupportedFamilyError(
        f"no closed Wiener/Harary form for tag {tag!r}; compute directly")
