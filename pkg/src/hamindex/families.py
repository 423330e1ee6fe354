"""Constructors for the named extremal families and exceptional sets.

Tags: L, N (minimum-degree non-Hamiltonian families), Lbar, Nbar (their
non-traceable analogues obtained by deleting a dominating vertex), B
(balanced bipartite non-Hamiltonian family), and G1/G2 (the nine-graph
exceptional sets for the Hamiltonicity and traceability edge bounds).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Optional

from .errors import ParameterOutOfRangeError, UnsupportedFamilyError
from .graphs import (Bipartition, Graph, complete, complete_bipartite,
                     disjoint_union, empty, join)

TAGS = ("L", "N", "Lbar", "Nbar", "B", "G1", "G2")


@dataclass(frozen=True)
class FamilySpec:
    """Identifies one family member.

    For tag B the order parameter n is the half-order (the graph has 2n
    vertices).  For G1/G2, item_index selects one of the nine members;
    index 0 is the parametric member and needs n, the rest have fixed
    orders that n must match.
    """

    tag: str
    n: int
    k: int = 0
    item_index: Optional[int] = None

    def __str__(self) -> str:
        if self.tag in ("G1", "G2"):
            return f"{self.tag}:n={self.n},i={self.item_index}"
        return f"{self.tag}:n={self.n},k={self.k}"


def parse_spec(text: str) -> FamilySpec:
    """Parse the CLI syntax, e.g. "N:n=9,k=2" or "G1:n=7,i=1"."""
    try:
        tag, rest = text.split(":", 1)
    except ValueError:
        raise ParameterOutOfRangeError(f"bad family spec {text!r}") from None
    tag = tag.strip()
    if tag not in TAGS:
        raise ParameterOutOfRangeError(f"unknown family tag {tag!r}")
    params = {}
    for part in rest.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            key, value = part.split("=", 1)
            params[key.strip()] = int(value)
        except ValueError:
            raise ParameterOutOfRangeError(
                f"bad parameter {part!r} in {text!r}") from None
    if "n" not in params:
        raise ParameterOutOfRangeError(f"family spec {text!r} needs n")
    if tag in ("G1", "G2"):
        return FamilySpec(tag, params["n"], item_index=params.get("i", 0))
    return FamilySpec(tag, params["n"], k=params.get("k", 0))


def _check(cond: bool, spec: FamilySpec, why: str) -> None:
    if not cond:
        raise ParameterOutOfRangeError(f"{spec}: {why}")


def build(spec: FamilySpec) -> Graph:
    """Construct the family member from the join/union algebra."""
    tag, n, k = spec.tag, spec.n, spec.k
    if tag == "L":
        _check(1 <= k <= (n - 1) / 2, spec, "needs 1 <= k <= (n-1)/2")
        g = join(complete(1), disjoint_union(complete(k), complete(n - k - 1)))
        return g.with_label(f"L({n},{k})")
    if tag == "N":
        _check(1 <= k <= (n - 1) / 2, spec, "needs 1 <= k <= (n-1)/2")
        g = join(complete(k), disjoint_union(complete(n - 2 * k), empty(k)))
        return g.with_label(f"N({n},{k})")
    if tag == "Lbar":
        _check(0 <= k <= n / 2 - 1, spec, "needs 0 <= k <= n/2-1")
        g = disjoint_union(complete(k + 1), complete(n - k - 1))
        return g.with_label(f"Lbar({n},{k})")
    if tag == "Nbar":
        _check(0 <= k <= n / 2 - 1, spec, "needs 0 <= k <= n/2-1")
        g = join(complete(k),
                 disjoint_union(complete(n - 2 * k - 1), empty(k + 1)))
        return g.with_label(f"Nbar({n},{k})")
    if tag == "B":
        return build_bipartite(spec)[0]
    if tag in ("G1", "G2"):
        items = G1_ITEMS if tag == "G1" else G2_ITEMS
        idx = spec.item_index
        if idx is None or not 0 <= idx < len(items):
            raise ParameterOutOfRangeError(f"{spec}: item index out of range")
        order, builder = items[idx]
        if order is not None and order != n:
            raise ParameterOutOfRangeError(
                f"{spec}: item {idx} has fixed order {order}")
        if order is None and tag == "G1":
            _check(n >= 5, spec, "parametric member needs n >= 5")
        if order is None and tag == "G2":
            _check(n >= 4, spec, "parametric member needs n >= 4")
        return builder(n).with_label(f"{tag}[{idx}] n={n}")
    raise ParameterOutOfRangeError(f"unknown family tag {tag!r}")


def build_bipartite(spec: FamilySpec) -> tuple[Graph, Bipartition]:
    """B family member together with its bipartition."""
    n, k = spec.n, spec.k
    _check(spec.tag == "B", spec, "not a bipartite family tag")
    _check(1 <= k <= n / 2, spec, "needs 1 <= k <= n/2")
    g, parts = complete_bipartite(n, n)
    # delete all edges between the first n-k left and first k right vertices
    rows = list(g.rows)
    left_block = (1 << (n - k)) - 1
    right_block = ((1 << k) - 1) << n
    for x in range(n - k):
        rows[x] &= ~right_block
    for y in range(n, n + k):
        rows[y] &= ~left_block
    out = Graph(2 * n, rows, f"B({n},{k})")
    return out, parts


def edge_count(spec: FamilySpec) -> int:
    """Closed-form edge count for tags L, N, Lbar, Nbar, B."""
    tag, n, k = spec.tag, spec.n, spec.k
    if tag == "L":
        _check(1 <= k <= (n - 1) / 2, spec, "needs 1 <= k <= (n-1)/2")
        return comb(n - k, 2) + k * (k + 1) // 2
    if tag == "N":
        _check(1 <= k <= (n - 1) / 2, spec, "needs 1 <= k <= (n-1)/2")
        return comb(n - k, 2) + k * k
    if tag == "Lbar":
        _check(0 <= k <= n / 2 - 1, spec, "needs 0 <= k <= n/2-1")
        return comb(k + 1, 2) + comb(n - k - 1, 2)
    if tag == "Nbar":
        _check(0 <= k <= n / 2 - 1, spec, "needs 0 <= k <= n/2-1")
        return comb(n - k - 1, 2) + k * (k + 1)
    if tag == "B":
        _check(1 <= k <= n / 2, spec, "needs 1 <= k <= n/2")
        return n * (n - k) + k * k
    raise UnsupportedFamilyError(f"no closed edge count for tag {tag!r}")


def _star_plus_isolated(leaves: int) -> Graph:
    """K_{1,leaves} + K_1 block used by several exceptional members."""
    star, _ = complete_bipartite(1, leaves)
    return disjoint_union(star, empty(1))


# (fixed order or None for parametric, builder taking the order)
G1_ITEMS: tuple[tuple[Optional[int], Callable[[int], Graph]], ...] = (
    (None, lambda n: join(complete(2),
                          disjoint_union(complete(n - 4), empty(2)))),
    (7, lambda n: join(complete(3), empty(4))),
    (7, lambda n: join(complete(2), _star_plus_isolated(3))),
    (7, lambda n: join(complete(1), complete_bipartite(2, 4)[0])),
    (8, lambda n: join(complete(3), disjoint_union(complete(2), empty(3)))),
    (9, lambda n: join(complete(4), empty(5))),
    (9, lambda n: join(complete(3), _star_plus_isolated(4))),
    (9, lambda n: join(complete(2), complete_bipartite(2, 5)[0])),
    (11, lambda n: join(complete(5), empty(6))),
)

G2_ITEMS: tuple[tuple[Optional[int], Callable[[int], Graph]], ...] = (
    (None, lambda n: join(complete(1),
                          disjoint_union(complete(n - 3), empty(2)))),
    (6, lambda n: join(complete(2), empty(4))),
    (6, lambda n: join(complete(1), _star_plus_isolated(3))),
    (6, lambda n: complete_bipartite(2, 4)[0]),
    (7, lambda n: join(complete(2), disjoint_union(empty(3), complete(2)))),
    (8, lambda n: join(complete(3), empty(5))),
    (8, lambda n: join(complete(2), _star_plus_isolated(4))),
    (8, lambda n: join(complete(1), complete_bipartite(2, 5)[0])),
    (10, lambda n: join(complete(4), empty(6))),
)

# indices of the three members that made up the originally published
# traceability exception list (the other six were added later)
G2_SHORT_INDICES = (0, 4, 8)

G1_DESCRIPTIONS = (
    "K2 v (K(n-4) + 2K1)",
    "K3 v 4K1",
    "K2 v (K{1,3} + K1)",
    "K1 v K{2,4}",
    "K3 v (K2 + 3K1)",
    "K4 v 5K1",
    "K3 v (K{1,4} + K1)",
    "K2 v K{2,5}",
    "K5 v 6K1",
)

G2_DESCRIPTIONS = (
    "K1 v (K(n-3) + 2K1)",
    "K2 v 4K1",
    "K1 v (K{1,3} + K1)",
    "K{2,4}",
    "K2 v (3K1 + K2)",
    "K3 v 5K1",
    "K2 v (K{1,4} + K1)",
    "K1 v K{2,5}",
    "K4 v 6K1",
)


def g1_members(n: int) -> list[Graph]:
    """All members of the Hamiltonicity exceptional set with order n."""
    if n < 5:
        raise ParameterOutOfRangeError(f"G1 members need n >= 5, got {n}")
    out = [build(FamilySpec("G1", n, item_index=0))]
    for idx, (order, _) in enumerate(G1_ITEMS):
        if order == n:
            out.append(build(FamilySpec("G1", n, item_index=idx)))
    return out


def g2_members(n: int) -> list[Graph]:
    """All members of the traceability exceptional set with order n."""
    if n < 4:
        raise ParameterOutOfRangeError(f"G2 members need n >= 4, got {n}")
    out = [build(FamilySpec("G2", n, item_index=0))]
    for idx, (order, _) in enumerate(G2_ITEMS):
        if order == n:
            out.append(build(FamilySpec("G2", n, item_index=idx)))
    return out


def g2_short_members(n: int) -> list[Graph]:
    """The three-member exception list used by the older traceability bounds."""
    if n < 4:
        raise ParameterOutOfRangeError(f"need n >= 4, got {n}")
    out = [build(FamilySpec("G2", n, item_index=0))]
    for idx in G2_SHORT_INDICES[1:]:
        order, _ = G2_ITEMS[idx]
        if order == n:
            out.append(build(FamilySpec("G2", n, item_index=idx)))
    return out
