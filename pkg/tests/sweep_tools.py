"""Exhaustive generation of connected weighted graphs up to isomorphism.

Used by the acceptance sweep. Graphs on k vertices with edge multiplicities
0..3 are encoded as the upper-triangle multiplicity vector (row-major,
C(k,2) slots). Classes are generated levelwise: every connected graph on k
vertices arises from a connected graph on k-1 vertices by adding one
attached vertex (remove any non-cutvertex), so extending all classes at
k-1 by all nonzero attachment vectors and deduplicating canonically is
exhaustive.

The canonical key is the packed upper triangle, minimized over all vertex
orders that sort the weighted-degree sequence (a complete isomorphism
invariant: the minimizing matrix is itself a relabeling of the graph).
The hot loop is jitted with numba.

Generation is verified independently: per-level class counts must equal
the inverse Euler transform of the Burnside orbit counts.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

import numpy as np
from numba import njit

MAX_MULT = 3  # encoding uses 2 bits per edge slot


def burnside_total(n: int, vals: int = MAX_MULT + 1) -> int:
    """Weighted graphs on n unlabeled vertices (disconnected and empty included)."""
    pairs = list(combinations(range(n), 2))
    total = 0
    for perm in permutations(range(n)):
        seen: set = set()
        cycles = 0
        for p in pairs:
            if p in seen:
                continue
            cycles += 1
            cur = p
            while cur not in seen:
                seen.add(cur)
                a, b = perm[cur[0]], perm[cur[1]]
                cur = (a, b) if a < b else (b, a)
        total += vals**cycles
    return total // factorial(n)


def connected_counts_from_totals(totals: list[int]) -> list[int]:
    """Inverse Euler transform: unlabeled connected counts from total counts.

    With T(x) = 1 + sum totals[n-1] x^n = prod_k (1-x^k)^(-C_k), the series
    log T(x) has coefficient sum_{k | n} C_k k / n at x^n.
    """
    n_max = len(totals)
    t = [Fraction(1)] + [Fraction(v) for v in totals]
    # log via formal series: L' = T'/T
    log_coeffs = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        s = n * t[n] - sum(k * log_coeffs[k] * t[n - k] for k in range(1, n))
        log_coeffs[n] = s / n
    out = []
    for n in range(1, n_max + 1):
        acc = log_coeffs[n]
        for k in range(1, n):
            if n % k == 0:
                acc -= Fraction(out[k - 1] * k, n)
        val = acc  # equals C_n * n / n
        assert val.denominator == 1
        out.append(int(val))
    return out


def _block_perm_tables(k: int):
    """Perms of range(k) preserving each tie pattern of a sorted degree vector.

    Pattern bit t set means sorted positions t and t+1 have equal degree.
    Perms for pattern p live at flat[offsets[p]:offsets[p+1]].
    """
    npat = 1 << (k - 1)
    all_perms = list(permutations(range(k)))
    offsets = [0]
    flat: list[int] = []
    for pat in range(npat):
        for perm in all_perms:
            ok = True
            for t in range(k - 1):
                if not (pat >> t) & 1:
                    # hard boundary after position t: {0..t} must map to itself
                    if any(perm[a] > t for a in range(t + 1)):
                        ok = False
                        break
            if ok:
                flat.extend(perm)
        offsets.append(len(flat) // k)
    return (
        np.array(offsets, dtype=np.int64),
        np.array(flat, dtype=np.int64).reshape(-1, k),
    )


@njit(cache=True)
def _canon_children(parents, k, poffs, pflat, out):  # pragma: no cover - jitted
    P = parents.shape[0]
    m = np.zeros((k, k), dtype=np.int64)
    mm = np.zeros((k, k), dtype=np.int64)
    deg = np.zeros(k, dtype=np.int64)
    order = np.zeros(k, dtype=np.int64)
    natt = 1
    for _ in range(k - 1):
        natt *= 4
    cnt = 0
    for pi in range(P):
        s = 0
        for a in range(k - 1):
            for b in range(a + 1, k - 1):
                v = parents[pi, s]
                s += 1
                m[a, b] = v
                m[b, a] = v
        for av in range(1, natt):
            x = av
            for a in range(k - 1):
                v = x & 3
                x >>= 2
                m[a, k - 1] = v
                m[k - 1, a] = v
            for a in range(k):
                d = 0
                for b in range(k):
                    if b != a:
                        d += m[a, b]
                deg[a] = d
            for a in range(k):
                order[a] = a
            for a in range(1, k):
                oa = order[a]
                da = deg[oa]
                b = a - 1
                while b >= 0 and deg[order[b]] > da:
                    order[b + 1] = order[b]
                    b -= 1
                order[b + 1] = oa
            pat = 0
            for t in range(k - 1):
                if deg[order[t]] == deg[order[t + 1]]:
                    pat |= 1 << t
            for a in range(k):
                oa = order[a]
                for b in range(k):
                    mm[a, b] = m[oa, order[b]]
            lo = poffs[pat]
            hi = poffs[pat + 1]
            best = np.uint64(0xFFFFFFFFFFFFFFFF)
            for f in range(lo, hi):
                val = np.uint64(0)
                for a in range(k):
                    pa = pflat[f, a]
                    for b in range(a + 1, k):
                        val = val * np.uint64(4) + np.uint64(mm[pa, pflat[f, b]])
                if val < best:
                    best = val
            out[cnt] = best
            cnt += 1
    return cnt


def warm_up() -> None:
    """Trigger the one-time numba compilation outside any timed region."""
    parents = np.zeros((1, 0), dtype=np.uint8)
    poffs, pflat = _block_perm_tables(2)
    out = np.empty(3, dtype=np.uint64)
    _canon_children(parents, 2, poffs, pflat, out)


def connected_classes(max_n: int) -> dict[int, np.ndarray]:
    """All connected weighted-graph classes with n <= max_n, mult <= 3.

    Returns per n an array (classes, C(n,2)) of upper-triangle multiplicity
    vectors, one row per isomorphism class.
    """
    reps: dict[int, np.ndarray] = {1: np.zeros((1, 0), dtype=np.uint8)}
    for k in range(2, max_n + 1):
        parents = reps[k - 1]
        natt = 4 ** (k - 1) - 1
        out = np.empty(parents.shape[0] * natt, dtype=np.uint64)
        poffs, pflat = _block_perm_tables(k)
        cnt = _canon_children(parents, k, poffs, pflat, out)
        keys = np.unique(out[:cnt])
        ns = k * (k - 1) // 2
        arr = np.empty((keys.shape[0], ns), dtype=np.uint8)
        x = keys.copy()
        for s in range(ns - 1, -1, -1):
            arr[:, s] = (x % 4).astype(np.uint8)
            x //= 4
        reps[k] = arr
    return reps


def verify_generation_counts(reps: dict[int, np.ndarray]) -> list[tuple[int, int, int]]:
    """(n, generated, expected) triples; expected from Burnside + Euler."""
    max_n = max(reps)
    totals = [burnside_total(n) for n in range(1, max_n + 1)]
    expected = connected_counts_from_totals(totals)
    return [(n, reps[n].shape[0], expected[n - 1]) for n in range(1, max_n + 1)]
