"""Isomorphism tests, canonical forms and isomorph-free enumeration.

Enumeration uses edge-augmentation orderly generation: a labeled graph is
kept iff its colex upper-triangle bitstring is maximal over all vertex
relabelings, and children extend a parent only at pair positions after the
parent's last edge.  Deleting the last edge of a maximal graph leaves a
maximal graph, so every isomorphism class is produced exactly once, with
no global seen-set.

The maximality test is the hot kernel; a numba version is used when
available (set HAMINDEX_PURE=1 to force the pure-Python reference).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from math import comb, factorial
from typing import Callable, Iterator, Optional

from .errors import (InfeasibleScopeError, OrderMismatchError,
                     OrderTooLargeError)
from .graphs import (Bipartition, Graph, complement, graph6_encode,
                     graph6_decode, is_connected, iter_bits, relabel,
                     two_coloring)

MAX_FULL_ENUM_N = 10
MAX_CANONICAL_N = 16
MAX_ENUM_N = 32
_CACHE_CLASS_LIMIT = 700_000

# colex pair order shared by graph6, canonical codes and enumeration
_PAIRS: tuple[tuple[int, int], ...] = tuple(
    (i, j) for j in range(1, MAX_ENUM_N) for i in range(j))


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical labeling fingerprint; equal codes iff isomorphic."""

    n: int
    code: bytes

    def graph(self) -> Graph:
        return graph6_decode(self.code.decode("ascii"))

    def hex(self) -> str:
        return self.code.hex()


@dataclass(frozen=True)
class EnumFilter:
    min_degree: int = 0
    min_edges: int = 0
    max_edges: Optional[int] = None
    require_connected: bool = False
    bipartite_balanced: Optional[int] = None

    def matches(self, g: Graph) -> bool:
        e = g.edge_count()
        if e < self.min_edges:
            return False
        if self.max_edges is not None and e > self.max_edges:
            return False
        if self.min_degree and g.min_degree() < self.min_degree:
            return False
        if self.require_connected and not is_connected(g):
            return False
        if self.bipartite_balanced is not None:
            if not _is_balanced_bipartite(g, self.bipartite_balanced):
                return False
        return True


def _is_balanced_bipartite(g: Graph, half: int) -> bool:
    """True when some proper 2-coloring has both sides of size half."""
    if g.n != 2 * half:
        return False
    parts = two_coloring(g)
    if parts is None:
        return False
    # per component the side split is fixed up to a flip; subset-sum the
    # flips to reach an exactly balanced assignment
    comp_sizes = []
    seen = 0
    for root in range(g.n):
        if (seen >> root) & 1:
            continue
        comp = 1 << root
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comp_sizes.append(((comp & parts.left).bit_count(),
                           (comp & parts.right).bit_count()))
    reachable = {0}
    for a, b in comp_sizes:
        reachable = {r + pick for r in reachable for pick in (a, b)}
    return half in reachable


# ---------------------------------------------------------------------------
# colex-maximality test (pure reference implementation)

def _identity_cols(rows, n: int) -> list[int]:
    """Column values of the upper triangle in colex order; within column j
    the bit toward vertex 0 is most significant."""
    cols = [0] * n
    for j in range(1, n):
        c = 0
        for i in range(j):
            c = (c << 1) | ((rows[i] >> j) & 1)
        cols[j] = c
    return cols


def _is_colex_max_py(rows, n: int) -> bool:
    """Is the identity labeling's colex bitstring maximal over relabelings?

    Explores only labelings whose column prefix ties the identity; any
    strictly larger column aborts immediately.  Completed tying labelings
    are automorphisms and feed a union-find used to skip equivalent root
    choices.
    """
    if n <= 1:
        return True
    cols = _identity_cols(rows, n)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    placed = [0] * n

    def dfs(depth: int, used: int) -> bool:
        target = cols[depth]
        ties = []
        for u in range(n):
            if (used >> u) & 1:
                continue
            c = 0
            for i in range(depth):
                c = (c << 1) | ((rows[placed[i]] >> u) & 1)
            if c > target:
                return False
            if c == target:
                ties.append(u)
        for u in ties:
            placed[depth] = u
            if depth == n - 1:
                for i in range(n):
                    ra, rb = find(placed[i]), find(i)
                    if ra != rb:
                        parent[ra] = rb
            elif not dfs(depth + 1, used | (1 << u)):
                return False
        return True

    tried: list[int] = []
    for root in range(n):
        r = find(root)
        if any(find(t) == r for t in tried):
            continue
        tried.append(root)
        placed[0] = root
        if not dfs(1, 1 << root):
            return False
    return True


def _accepted_children_py(rows: list[int], n: int, last: int,
                          max_degree: int) -> list[int]:
    """Positions after `last` whose addition leaves a colex-maximal graph."""
    total = n * (n - 1) // 2
    out = []
    degs = [r.bit_count() for r in rows]
    for q in range(last + 1, total):
        i, j = _PAIRS[q]
        if degs[i] >= max_degree or degs[j] >= max_degree:
            continue
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        if _is_colex_max_py(rows, n):
            out.append(q)
        rows[i] &= ~(1 << j)
        rows[j] &= ~(1 << i)
    return out


_children_backend: Optional[Callable[[list[int], int, int, int], list[int]]] = None


def _load_backend() -> Callable[[list[int], int, int, int], list[int]]:
    if os.environ.get("HAMINDEX_PURE"):
        return _accepted_children_py
    try:
        from . import _fast
        return _fast.accepted_children
    except Exception:
        return _accepted_children_py


def _children(rows: list[int], n: int, last: int, max_degree: int) -> list[int]:
    global _children_backend
    if _children_backend is None:
        _children_backend = _load_backend()
    return _children_backend(rows, n, last, max_degree)


def backend_name() -> str:
    global _children_backend
    if _children_backend is None:
        _children_backend = _load_backend()
    return ("pure" if _children_backend is _accepted_children_py
            else "numba")


# ---------------------------------------------------------------------------
# enumeration

def _orderly_stream(n: int, max_edges: int,
                    max_degree: int) -> Iterator[tuple[int, ...]]:
    """All colex-maximal labeled graphs, one per isomorphism class, in a
    deterministic DFS preorder."""
    rows = [0] * n

    def rec(last: int, m: int) -> Iterator[tuple[int, ...]]:
        yield tuple(rows)
        if m == max_edges:
            return
        for q in _children(rows, n, last, max_degree):
            i, j = _PAIRS[q]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
            yield from rec(q, m + 1)
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)

    yield from rec(-1, 0)


_ENUM_CACHE: dict[tuple[int, int, int], tuple[str, ...]] = {}


def _class_stream(n: int, max_edges: int, max_degree: int) -> Iterator[Graph]:
    """Enumerated representatives as graphs, cached (as graph6) when the
    class count is small enough to keep."""
    total = n * (n - 1) // 2
    max_edges = min(max_edges, total)
    max_degree = min(max_degree, n - 1) if n else 0
    key = (n, max_edges, max_degree)
    cached = _ENUM_CACHE.get(key)
    if cached is not None:
        for code in cached:
            yield graph6_decode(code)
        return
    # a full unfiltered run can serve any narrower query by post-filtering
    full = _ENUM_CACHE.get((n, total, n - 1 if n else 0))
    if full is not None:
        out = []
        for code in full:
            g = graph6_decode(code)
            if g.edge_count() > max_edges:
                continue
            if max_degree < n - 1 and max(g.degrees(), default=0) > max_degree:
                continue
            out.append(code)
            yield g
        _ENUM_CACHE[key] = tuple(out)
        return
    expected = predicted_class_count(n, max_edges)
    if expected <= _CACHE_CLASS_LIMIT:
        out = []
        for rows in _orderly_stream(n, max_edges, max_degree):
            g = Graph(n, rows)
            out.append(graph6_encode(g))
            yield g
        _ENUM_CACHE[key] = tuple(out)
    else:
        for rows in _orderly_stream(n, max_edges, max_degree):
            yield Graph(n, rows)


def predicted_class_count(n: int, max_edges: Optional[int] = None) -> int:
    """Exact number of isomorphism classes with at most max_edges edges.

    Computed from the cycle index of the pair action, independently of the
    generator, so it doubles as an enumeration oracle.
    """
    counts = count_graphs_by_edges(n)
    if max_edges is None:
        return sum(counts)
    return sum(counts[:max_edges + 1])


def enumerate_graphs(n: int, filt: Optional[EnumFilter] = None,
                     max_degree: Optional[int] = None) -> Iterator[Graph]:
    """One representative per isomorphism class passing the filter."""
    filt = filt or EnumFilter()
    if n < 0 or n > MAX_ENUM_N:
        raise OrderTooLargeError(f"enumeration supports 0 <= n <= {MAX_ENUM_N}")
    total = n * (n - 1) // 2
    eff_max_edges = total if filt.max_edges is None else min(filt.max_edges,
                                                             total)
    if eff_max_edges >= total and n > MAX_FULL_ENUM_N:
        raise OrderTooLargeError(
            f"full enumeration limited to n <= {MAX_FULL_ENUM_N}; "
            "bound max_edges for larger orders")
    cap = n - 1 if max_degree is None else min(max_degree, n - 1)
    if n == 0:
        if filt.matches(Graph(0, [])):
            yield Graph(0, [])
        return
    for g in _class_stream(n, eff_max_edges, cap):
        if filt.matches(g):
            yield g


def enumerate_dense_via_complement(n: int, complement_edge_budget: int,
                                   filt: Optional[EnumFilter] = None
                                   ) -> Iterator[Graph]:
    """Classes whose complement has at most the budgeted number of edges,
    realized by enumerating the sparse complements; the filter applies to
    the dense graphs."""
    filt = filt or EnumFilter()
    if n < 0 or n > MAX_ENUM_N:
        raise OrderTooLargeError(f"enumeration supports 0 <= n <= {MAX_ENUM_N}")
    total = n * (n - 1) // 2
    budget = min(complement_edge_budget, total)
    if filt.min_edges:
        budget = min(budget, total - filt.min_edges)
    cap = n - 1
    if filt.min_degree:
        # dense minimum degree k caps complement degrees at n-1-k
        cap = n - 1 - filt.min_degree
    if n == 0:
        if filt.matches(Graph(0, [])):
            yield Graph(0, [])
        return
    for sparse in _class_stream(n, budget, cap):
        g = complement(sparse)
        if filt.matches(g):
            yield g


# ---------------------------------------------------------------------------
# balanced bipartite enumeration (part-swap counted as isomorphism)

@lru_cache(maxsize=32)
def _colperm_tables(h: int) -> tuple[tuple[tuple[int, ...], ...], int]:
    """For each permutation of the h columns, a lookup from row value to
    permuted row value."""
    perms = list(permutations(range(h)))
    tables = []
    for perm in perms:
        table = []
        for value in range(1 << h):
            out = 0
            for c in range(h):
                if (value >> c) & 1:
                    out |= 1 << perm[c]
            table.append(out)
        tables.append(tuple(table))
    return tuple(tables), len(perms)


def bipartite_canonical_code(matrix_rows: tuple[int, ...],
                             h: int) -> tuple[int, ...]:
    """Canonical form of an h x h biadjacency matrix under row and column
    permutations plus transposition."""
    tables, _ = _colperm_tables(h)

    def transpose(rows_: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * h
        for r in range(h):
            v = rows_[r]
            for c in iter_bits(v):
                out[c] |= 1 << r
        return tuple(out)

    best: Optional[tuple[int, ...]] = None
    for mat in (matrix_rows, transpose(matrix_rows)):
        for table in tables:
            cand = tuple(sorted((table[r] for r in mat), reverse=True))
            if best is None or cand > best:
                best = cand
    assert best is not None
    return (h,) + best


def bipartite_code_of(g: Graph, parts: Bipartition) -> tuple[int, ...]:
    """Canonical code of (G, bipartition) with part swap allowed."""
    left = parts.left_vertices()
    right = parts.right_vertices()
    if len(left) != len(right):
        raise OrderMismatchError("bipartition is not balanced")
    h = len(left)
    rows = []
    for u in left:
        v = 0
        for idx, w in enumerate(right):
            if g.has_edge(u, w):
                v |= 1 << idx
        rows.append(v)
    return bipartite_canonical_code(tuple(rows), h)


def enumerate_balanced_bipartite(half: int, missing_edge_budget: int,
                                 min_degree: int = 0
                                 ) -> Iterator[tuple[Graph, Bipartition]]:
    """Subgraphs of K_{half,half} missing at most the budgeted edges, one
    per class under row/column permutation and part swap."""
    h = half
    cells = h * h
    budget = min(missing_edge_budget, cells)
    masks = sum(comb(cells, s) for s in range(budget + 1))
    if masks > 4_000_000:
        raise InfeasibleScopeError(
            f"{masks} labeled missing-edge patterns exceed the cap")
    full_right = (1 << h) - 1
    left_mask = (1 << h) - 1
    right_mask = ((1 << (2 * h)) - 1) ^ left_mask
    parts = Bipartition(left_mask, right_mask)
    max_missing_per_line = h - min_degree
    seen: set[tuple[int, ...]] = set()
    cell_list = [(r, c) for r in range(h) for c in range(h)]
    for s in range(budget + 1):
        for chosen in combinations(cell_list, s):
            mrows = [0] * h
            mcols = [0] * h
            ok = True
            for r, c in chosen:
                mrows[r] |= 1 << c
                mcols[c] |= 1 << r
            for r in range(h):
                if mrows[r].bit_count() > max_missing_per_line:
                    ok = False
                    break
                if mcols[r].bit_count() > max_missing_per_line:
                    ok = False
                    break
            if not ok:
                continue
            code = bipartite_canonical_code(tuple(mrows), h)
            if code in seen:
                continue
            seen.add(code)
            canon_missing = code[1:]
            rows = [0] * (2 * h)
            for r in range(h):
                present = full_right ^ canon_missing[r]
                rows[r] = present << h
                for c in iter_bits(present):
                    rows[h + c] |= 1 << r
            yield Graph(2 * h, rows), parts


# ---------------------------------------------------------------------------
# exact class counts from the cycle index of the pair action

def _partitions(n: int, largest: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


@lru_cache(maxsize=64)
def count_graphs_by_edges(n: int) -> tuple[int, ...]:
    """counts[m] = number of isomorphism classes with exactly m edges."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = comb(n, 2)
    acc = [0] * (total + 1)
    nfact = factorial(n)
    for lam in _partitions(n):
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        z = 1
        for a, m in mult.items():
            z *= (a ** m) * factorial(m)
        weight = nfact // z
        # cycle lengths of the induced action on unordered pairs
        cycle_lengths: list[int] = []
        parts_list = list(lam)
        for idx, a in enumerate(parts_list):
            if a % 2 == 1:
                cycle_lengths.extend([a] * ((a - 1) // 2))
            else:
                cycle_lengths.append(a // 2)
                cycle_lengths.extend([a] * (a // 2 - 1))
            for b in parts_list[idx + 1:]:
                from math import gcd
                g = gcd(a, b)
                cycle_lengths.extend([a * b // g] * g)
        poly = [0] * (total + 1)
        poly[0] = 1
        degree = 0
        for length in cycle_lengths:
            degree = min(degree + length, total)
            for pos in range(degree, length - 1, -1):
                poly[pos] += poly[pos - length]
        for m in range(total + 1):
            acc[m] += weight * poly[m]
    out = []
    for m in range(total + 1):
        q, r = divmod(acc[m], nfact)
        if r:
            raise AssertionError("cycle index sum not divisible by n!")
        out.append(q)
    return tuple(out)


# ---------------------------------------------------------------------------
# canonical forms via refinement and individualization

def _equitable_refine(rows, n: int,
                      cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement; split order depends only on cell
    positions and neighbor counts, never on vertex identity, so the final
    cell order is an isomorphism invariant."""
    cells = [list(c) for c in cells]
    stable = False
    while not stable:
        stable = True
        for si in range(len(cells)):
            w_mask = 0
            for v in cells[si]:
                w_mask |= 1 << v
            out: list[list[int]] = []
            split_any = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                by_count: dict[int, list[int]] = {}
                for v in cell:
                    by_count.setdefault((rows[v] & w_mask).bit_count(),
                                        []).append(v)
                if len(by_count) == 1:
                    out.append(cell)
                else:
                    split_any = True
                    for count in sorted(by_count, reverse=True):
                        out.append(by_count[count])
            if split_any:
                cells = out
                stable = False
                break
    return cells


def _leaf_cols(rows, n: int, perm: list[int]) -> tuple[int, ...]:
    cols = []
    for j in range(1, n):
        c = 0
        rj = rows[perm[j]]
        for i in range(j):
            c = (c << 1) | ((rj >> perm[i]) & 1)
        cols.append(c)
    return tuple(cols)


def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form for n <= 16, exact for every input."""
    n = g.n
    if n > MAX_CANONICAL_N:
        raise OrderTooLargeError(
            f"canonical_form is guaranteed only for n <= {MAX_CANONICAL_N}")
    if n <= 1:
        return CanonicalForm(n, graph6_encode(g).encode("ascii"))
    rows = g.rows
    degs = g.degrees()
    by_deg: dict[int, list[int]] = {}
    for v in range(n):
        by_deg.setdefault(degs[v], []).append(v)
    initial = [by_deg[d] for d in sorted(by_deg, reverse=True)]
    best: dict[str, Optional[tuple]] = {"cols": None, "perm": None}
    nodes = {"count": 0}

    def rec(cells: list[list[int]]) -> None:
        nodes["count"] += 1
        if nodes["count"] > 500_000:
            raise OrderTooLargeError("canonical labeling search exploded")
        cells = _equitable_refine(rows, n, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = [c[0] for c in cells]
            cols = _leaf_cols(rows, n, perm)
            if best["cols"] is None or cols > best["cols"]:
                best["cols"] = cols
                best["perm"] = tuple(perm)
            return
        cell = cells[target]
        reps: list[int] = []
        for v in cell:
            is_twin = False
            for u in reps:
                if (rows[u] & ~(1 << v)) == (rows[v] & ~(1 << u)):
                    is_twin = True
                    break
            if not is_twin:
                reps.append(v)
        for v in reps:
            rest = [u for u in cell if u != v]
            nxt = cells[:target] + [[v], rest] + cells[target + 1:]
            rec(nxt)

    rec(initial)
    perm = best["perm"]
    assert perm is not None
    placement = [0] * n
    for pos, v in enumerate(perm):
        placement[v] = pos
    canon = relabel(Graph(n, rows), placement)
    return CanonicalForm(n, graph6_encode(canon).encode("ascii"))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    if g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    if g.n <= MAX_CANONICAL_N:
        return canonical_form(g).code == canonical_form(h).code
    return (g.edge_count() == h.edge_count()
            and is_spanning_subgraph_of(g, h))


def is_spanning_subgraph_of(g: Graph, h: Graph) -> bool:
    """Some vertex bijection maps every edge of g onto an edge of h."""
    if g.n != h.n:
        raise OrderMismatchError(
            f"orders differ: {g.n} vs {h.n}")
    n = g.n
    if g.edge_count() > h.edge_count():
        return False
    gdeg = g.degrees()
    hdeg = h.degrees()
    if any(a > b for a, b in zip(sorted(gdeg, reverse=True),
                                 sorted(hdeg, reverse=True))):
        return False
    order = sorted(range(n), key=lambda v: -gdeg[v])
    image = [-1] * n
    used = [False] * n

    def place(idx: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used[w] or hdeg[w] < gdeg[v]:
                continue
            ok = True
            for u in iter_bits(g.rows[v]):
                if image[u] >= 0 and not (h.rows[w] >> image[u]) & 1:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(idx + 1):
                    return True
                image[v] = -1
                used[w] = False
        return False

    return place(0)
