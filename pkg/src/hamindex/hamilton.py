"""Exact Hamiltonicity and traceability with verifiable certificates.

Positive answers carry a spanning cycle or path; negative answers carry a
separating-set witness when one exists within the search cap, otherwise an
exhausted-search marker.  Answers are always exact; when the node budget
runs out the solver raises instead of guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BudgetExceededError
from .graphs import Graph, complete, iter_bits, join, two_coloring

DEFAULT_NODE_BUDGET = 10 ** 8

CYCLE = "cycle"
PATH = "path"


@dataclass(frozen=True)
class HamCertificate:
    kind: str  # cycle | path | cut_witness | exhausted
    sequence: Optional[tuple[int, ...]] = None
    cut_set: Optional[tuple[int, ...]] = None
    component_count: Optional[int] = None

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.sequence is not None:
            out["sequence"] = list(self.sequence)
        if self.cut_set is not None:
            out["cut_set"] = list(self.cut_set)
            out["component_count"] = self.component_count
        return out


@dataclass(frozen=True)
class HamResult:
    answer: bool
    certificate: HamCertificate
    nodes: int


def count_components(g: Graph, removed_mask: int = 0) -> int:
    remaining = ((1 << g.n) - 1) & ~removed_mask
    count = 0
    while remaining:
        count += 1
        root = (remaining & -remaining).bit_length() - 1
        seen = 1 << root
        frontier = seen
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & remaining & ~seen
            seen |= frontier
        remaining &= ~seen
    return count


def certificate_is_valid(g: Graph, mode: str, answer: bool,
                         cert: HamCertificate) -> bool:
    """Re-validate a certificate against the adjacency structure."""
    if answer:
        seq = cert.sequence
        if seq is None or cert.kind not in (CYCLE, PATH):
            return False
        if sorted(seq) != list(range(g.n)):
            return False
        for a, b in zip(seq, seq[1:]):
            if not g.has_edge(a, b):
                return False
        if cert.kind == CYCLE and g.n >= 2 and not g.has_edge(seq[-1], seq[0]):
            return False
        return True
    if cert.kind == "exhausted":
        return True
    if cert.kind != "cut_witness" or cert.cut_set is None:
        return False
    mask = 0
    for v in cert.cut_set:
        if not 0 <= v < g.n:
            return False
        mask |= 1 << v
    comps = count_components(g, mask)
    if comps != cert.component_count:
        return False
    # for cycles an empty cut set only witnesses disconnection
    if mode == CYCLE:
        bound = max(len(cert.cut_set), 1)
    else:
        bound = len(cert.cut_set) + 1
    return comps > bound


def find_cut_witness(g: Graph, mode: str, max_size: int = 6,
                     max_checks: int = 500_000) -> Optional[tuple[int, ...]]:
    """Separating set S with more components than the mode allows.

    Tries the empty set, the dominating core and small neighborhoods first,
    then subsets up to max_size (capped at max_checks component counts).
    Absence of a witness proves nothing.
    """
    from itertools import combinations

    def is_witness(vertices: tuple[int, ...]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        if mask.bit_count() >= g.n:
            return False
        if mode == CYCLE:
            bound = max(len(vertices), 1)
        else:
            bound = len(vertices) + 1
        return count_components(g, mask) > bound

    if g.n and is_witness(()):
        return ()
    # structured candidates: dominating core, then small neighborhoods
    dom = tuple(v for v in range(g.n) if g.degree(v) == g.n - 1)
    if 0 < len(dom) <= max_size and is_witness(dom):
        return dom
    for v in sorted(range(g.n), key=g.degree):
        if g.degree(v) <= max_size:
            cand = tuple(iter_bits(g.rows[v]))
            if cand and is_witness(cand):
                return cand
    checks = 0
    for size in range(1, min(max_size, g.n - 1) + 1):
        for cand in combinations(range(g.n), size):
            checks += 1
            if checks > max_checks:
                return None
            if is_witness(cand):
                return cand
    return None


class _Budget:
    __slots__ = ("nodes", "limit")

    def __init__(self, limit: int):
        self.nodes = 0
        self.limit = limit

    def spend(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError(
                f"search exceeded node budget {self.limit}")


def _quick_witness(g: Graph, mode: str) -> Optional[tuple[int, ...]]:
    """Cheap structured separating sets checked before any search: the
    empty set, the smaller side of an unbalanced bipartition, the
    dominating core, and low-degree neighborhoods."""
    bound_extra = 0 if mode == CYCLE else 1

    def check(vertices: tuple[int, ...]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        if mask.bit_count() >= g.n:
            return False
        bound = max(len(vertices), 1) if mode == CYCLE \
            else len(vertices) + 1
        return count_components(g, mask) > bound

    if g.n == 0:
        return None
    if check(()):
        return ()
    parts = two_coloring(g)
    if parts is not None:
        a, b = parts.sizes()
        small, big = ((parts.left, parts.right) if a <= b
                      else (parts.right, parts.left))
        if big.bit_count() - small.bit_count() > bound_extra:
            cand = tuple(iter_bits(small))
            if check(cand):
                return cand
    dom = tuple(v for v in range(g.n) if g.degree(v) == g.n - 1)
    if 0 < len(dom) < g.n and check(dom):
        return dom
    for v in sorted(range(g.n), key=g.degree)[:4]:
        cand = tuple(iter_bits(g.rows[v]))
        if cand and check(cand):
            return cand
    return None


def _hamilton_cycle_search(g: Graph, budget: _Budget) -> Optional[list[int]]:
    """Backtracking search for a spanning cycle; None means proven absent."""
    n = g.n
    rows = g.rows
    full = (1 << n) - 1
    degs = [r.bit_count() for r in rows]
    if min(degs) < 2:
        return None
    start = min(range(n), key=lambda v: (degs[v], v))
    start_bit = 1 << start
    # neighbors in ascending degree, ties by index
    nbr_order = [sorted(iter_bits(rows[v]), key=lambda u: (degs[u], u))
                 for v in range(n)]
    path = [start]

    def extend(v: int, visited: int) -> bool:
        budget.spend()
        remaining = full & ~visited
        if not remaining:
            return bool((rows[v] >> start) & 1)
        avail = remaining | (1 << v) | start_bit
        # every unvisited vertex still needs two usable cycle neighbors
        for u in iter_bits(remaining):
            if (rows[u] & avail).bit_count() < 2:
                return False
        # the unvisited region plus both endpoints must stay connected
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for w in iter_bits(frontier):
                nxt |= rows[w]
            frontier = nxt & avail & ~seen
            seen |= frontier
        if (remaining | start_bit) & ~seen:
            return False
        for u in nbr_order[v]:
            ubit = 1 << u
            if ubit & visited:
                continue
            path.append(u)
            if extend(u, visited | ubit):
                return True
            path.pop()
        return False

    if extend(start, start_bit):
        return path
    return None


def is_hamiltonian(g: Graph,
                   node_budget: int = DEFAULT_NODE_BUDGET) -> HamResult:
    """Exact Hamiltonicity decision with a verified certificate."""
    budget = _Budget(node_budget)
    if g.n < 3:
        return _negative(g, CYCLE, budget)
    quick = _quick_witness(g, CYCLE)
    if quick is not None:
        return _negative(g, CYCLE, budget, witness=quick)
    parts = two_coloring(g)
    if parts is not None and parts.left.bit_count() != parts.right.bit_count():
        return _negative(g, CYCLE, budget)
    cycle = _hamilton_cycle_search(g, budget)
    if cycle is not None:
        cert = HamCertificate(kind=CYCLE, sequence=tuple(cycle))
        assert certificate_is_valid(g, CYCLE, True, cert)
        return HamResult(True, cert, budget.nodes)
    return _negative(g, CYCLE, budget)


def is_traceable(g: Graph,
                 node_budget: int = DEFAULT_NODE_BUDGET) -> HamResult:
    """Exact traceability via a spanning cycle in G joined with one vertex."""
    if g.n <= 1:
        seq = tuple(range(g.n))
        cert = HamCertificate(kind=PATH, sequence=seq)
        return HamResult(True, cert, 0)
    budget = _Budget(node_budget)
    quick = _quick_witness(g, PATH)
    if quick is not None:
        return _negative(g, PATH, budget, witness=quick)
    if not _path_feasible_quick(g):
        return _negative(g, PATH, budget)
    aug = join(g, complete(1))
    cycle = _hamilton_cycle_search(aug, budget)
    if cycle is not None:
        cut = cycle.index(g.n)
        seq = tuple(cycle[cut + 1:] + cycle[:cut])
        cert = HamCertificate(kind=PATH, sequence=seq)
        assert certificate_is_valid(g, PATH, True, cert)
        return HamResult(True, cert, budget.nodes)
    return _negative(g, PATH, budget)


def _path_feasible_quick(g: Graph) -> bool:
    """Cheap necessary conditions for a spanning path."""
    if count_components(g) > 1:
        return False
    parts = two_coloring(g)
    if parts is not None:
        a, b = parts.sizes()
        if abs(a - b) > 1:
            return False
    return True


def _negative(g: Graph, mode: str, budget: _Budget,
              witness: Optional[tuple[int, ...]] = None) -> HamResult:
    if witness is None:
        witness = find_cut_witness(g, mode)
    if witness is not None:
        mask = 0
        for v in witness:
            mask |= 1 << v
        cert = HamCertificate(kind="cut_witness", cut_set=witness,
                              component_count=count_components(g, mask))
    else:
        cert = HamCertificate(kind="exhausted")
    assert certificate_is_valid(g, mode, False, cert)
    return HamResult(False, cert, budget.nodes)
