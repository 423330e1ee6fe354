"""Numba kernels for the enumeration hot path.

Mirrors the pure-Python maximality test in isoenum exactly; the test suite
checks that both backends accept identical child sets.  Rows are int64
bitsets, which limits this path to n <= 32 (the package caps enumeration
there anyway).
"""

from __future__ import annotations

import numpy as np
from numba import int64, njit

_POS_I = np.array([i for j in range(1, 33) for i in range(j)], dtype=np.int64)
_POS_J = np.array([j for j in range(1, 33) for i in range(j)], dtype=np.int64)


@njit(int64(int64), cache=True, inline="always")
def _popcount(x):
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56


@njit(cache=True)
def _is_colex_max(rows, n):
    # identity column values, most significant bit toward vertex 0
    cols = np.zeros(n, dtype=np.int64)
    for j in range(1, n):
        c = 0
        for i in range(j):
            c = (c << 1) | ((rows[i] >> j) & 1)
        cols[j] = c

    parent = np.arange(n, dtype=np.int64)

    placed = np.zeros(n, dtype=np.int64)
    ties = np.zeros((n, n), dtype=np.int64)
    tie_cnt = np.zeros(n, dtype=np.int64)
    tie_idx = np.zeros(n, dtype=np.int64)
    tried = np.zeros(n, dtype=np.int64)
    ntried = 0

    for root in range(n):
        rr = root
        while parent[rr] != rr:
            parent[rr] = parent[parent[rr]]
            rr = parent[rr]
        skip = False
        for t in range(ntried):
            tt = tried[t]
            while parent[tt] != tt:
                parent[tt] = parent[parent[tt]]
                tt = parent[tt]
            if tt == rr:
                skip = True
                break
        if skip:
            continue
        tried[ntried] = root
        ntried += 1

        placed[0] = root
        used = int64(1) << root
        d = 1
        tie_cnt[d] = -1
        while d >= 1:
            if tie_cnt[d] == -1:
                cnt = 0
                target = cols[d]
                for u in range(n):
                    if (used >> u) & 1:
                        continue
                    c = 0
                    for i in range(d):
                        c = (c << 1) | ((rows[placed[i]] >> u) & 1)
                    if c > target:
                        return False
                    if c == target:
                        ties[d, cnt] = u
                        cnt += 1
                tie_cnt[d] = cnt
                tie_idx[d] = 0
            advanced = False
            while tie_idx[d] < tie_cnt[d]:
                u = ties[d, tie_idx[d]]
                tie_idx[d] += 1
                placed[d] = u
                if d == n - 1:
                    # completed tying labeling: an automorphism
                    for i in range(n):
                        ra = placed[i]
                        while parent[ra] != ra:
                            parent[ra] = parent[parent[ra]]
                            ra = parent[ra]
                        rb = i
                        while parent[rb] != rb:
                            parent[rb] = parent[parent[rb]]
                            rb = parent[rb]
                        if ra != rb:
                            parent[ra] = rb
                else:
                    used |= int64(1) << u
                    d += 1
                    tie_cnt[d] = -1
                    advanced = True
                    break
            if advanced:
                continue
            tie_cnt[d] = -1
            d -= 1
            if d >= 1:
                used ^= int64(1) << placed[d]
    return True


@njit(cache=True)
def _accepted_children(rows, n, last, max_degree, pos_i, pos_j):
    total = n * (n - 1) // 2
    out = np.empty(total, dtype=np.int64)
    nout = 0
    degs = np.empty(n, dtype=np.int64)
    for v in range(n):
        degs[v] = _popcount(rows[v])
    for q in range(last + 1, total):
        i = pos_i[q]
        j = pos_j[q]
        if degs[i] >= max_degree or degs[j] >= max_degree:
            continue
        rows[i] |= int64(1) << j
        rows[j] |= int64(1) << i
        if _is_colex_max(rows, n):
            out[nout] = q
            nout += 1
        rows[i] ^= int64(1) << j
        rows[j] ^= int64(1) << i
    return out[:nout]


def accepted_children(rows: list[int], n: int, last: int,
                      max_degree: int) -> list[int]:
    arr = np.array(rows, dtype=np.int64)
    res = _accepted_children(arr, n, last, max_degree, _POS_I, _POS_J)
    return [int(q) for q in res]


def is_colex_max(rows: list[int], n: int) -> bool:
    if n <= 1:
        return True
    return bool(_is_colex_max(np.array(rows, dtype=np.int64), n))
