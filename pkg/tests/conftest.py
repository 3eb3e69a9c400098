"""Shared builders: catalog diagrams as quivers/graphs and random matrices."""

from __future__ import annotations

import random

from qmut import ExchangeMatrix, WeightedGraph, validate


def from_edges(n: int, arrows: list[tuple[int, int, int]]) -> ExchangeMatrix:
    """arrows: (i, j, mult) meaning mult arrows i -> j."""
    b = [[0] * n for _ in range(n)]
    for i, j, m in arrows:
        b[i][j] += m
        b[j][i] -= m
    return validate(b)


def graph_from_edges(n: int, edges: dict[tuple[int, int], int]) -> WeightedGraph:
    return WeightedGraph(n, {(min(a, b), max(a, b)): m for (a, b), m in edges.items()})


def path_quiver(n: int) -> ExchangeMatrix:
    return from_edges(n, [(i, i + 1, 1) for i in range(n - 1)])


def cycle_quiver_acyclic(n: int) -> ExchangeMatrix:
    """Acyclic orientation of the n-cycle: path plus one chord-closing arrow 0 -> n-1."""
    arrows = [(i, i + 1, 1) for i in range(n - 1)] + [(0, n - 1, 1)]
    return from_edges(n, arrows)


def d_quiver(n: int) -> ExchangeMatrix:
    """Orientation of the D_n tree (n >= 4): fork at vertex n-3."""
    arrows = [(i, i + 1, 1) for i in range(n - 3)]
    arrows += [(n - 3, n - 2, 1), (n - 3, n - 1, 1)]
    return from_edges(n, arrows)


def e_quiver(n: int) -> ExchangeMatrix:
    """Orientation of E6/E7/E8: path 0..n-2 with a leaf at the third vertex."""
    assert n in (6, 7, 8)
    arrows = [(i, i + 1, 1) for i in range(n - 2)]
    arrows.append((2, n - 1, 1))
    return from_edges(n, arrows)


def extended_d_quiver(rank: int) -> ExchangeMatrix:
    """Orientation of the extended D diagram with rank+1 vertices (rank >= 4)."""
    n = rank + 1
    if rank == 4:
        return from_edges(5, [(0, i, 1) for i in range(1, 5)])
    # two forks joined by a path: leaves (0,1) - hub 2 - path - hub n-3 - leaves (n-2, n-1)
    arrows = [(0, 2, 1), (1, 2, 1), (n - 3, n - 2, 1), (n - 3, n - 1, 1)]
    arrows += [(i, i + 1, 1) for i in range(2, n - 3)]
    return from_edges(n, arrows)


def extended_e_quiver(rank: int) -> ExchangeMatrix:
    """Orientation of the extended E diagram (rank in 6,7,8; rank+1 vertices)."""
    assert rank in (6, 7, 8)
    arms = {6: (2, 2, 2), 7: (1, 3, 3), 8: (1, 2, 5)}[rank]
    arrows = []
    v = 1
    for arm in arms:
        prev = 0
        for _ in range(arm):
            arrows.append((prev, v, 1))
            prev = v
            v += 1
    return from_edges(v, arrows)


def kronecker(m: int) -> ExchangeMatrix:
    return validate([[0, m], [-m, 0]])


def markov_quiver() -> ExchangeMatrix:
    return validate([[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def random_skew(rng: random.Random, n: int, max_entry: int) -> ExchangeMatrix:
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = rng.randint(-max_entry, max_entry)
            b[i][j] = e
            b[j][i] = -e
    return validate(b)


def random_acyclic(rng: random.Random, n: int, max_entry: int) -> ExchangeMatrix:
    """Random upper-triangular-positive orientation: always acyclic."""
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = rng.randint(0, max_entry)
            b[i][j] = e
            b[j][i] = -e
    return validate(b)
