"""Exchange matrices (quivers) and the mutation rule.

A quiver with no loops and no 2-cycles is encoded as a skew-symmetric
integer matrix B: ``b[i][j] > 0`` means ``b[i][j]`` arrows from i to j.
Entries are plain Python ints, so they never overflow — mutation of wild
quivers grows entries without bound and that growth must stay exact.

All values here are immutable; every operation returns a new matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotSkewSymmetricError, NotSquareError, VertexOutOfRangeError

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ExchangeMatrix:
    """Validated skew-symmetric integer matrix. Construct via :func:`validate`."""

    rows: Rows

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]

    def max_multiplicity(self) -> int:
        if self.n <= 1:
            return 0
        return max(abs(e) for row in self.rows for e in row)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows) + "]"


@dataclass(frozen=True)
class WeightedGraph:
    """Undirected multigraph: edge (i, j) with i < j carries multiplicity >= 1."""

    n: int
    edges: dict[tuple[int, int], int] = field(hash=False)

    def degree(self, v: int) -> int:
        """Weighted degree: sum of incident edge multiplicities."""
        return sum(m for (a, b), m in self.edges.items() if a == v or b == v)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out


def validate(b: Sequence[Sequence[int]]) -> ExchangeMatrix:
    """Check squareness and skew-symmetry; return the immutable matrix.

    The offending cell reported for a skew-symmetry violation is the first
    one in a row-major scan of the lower triangle (diagonal included).
    """
    n = len(b)
    rows = []
    for row in b:
        if len(row) != n:
            raise NotSquareError(n, len(row))
        rows.append(tuple(int(e) for e in row))
    for i in range(n):
        for j in range(i + 1):
            if rows[i][j] != -rows[j][i]:
                raise NotSkewSymmetricError(i, j)
    return ExchangeMatrix(tuple(rows))


def _check_vertex(q: ExchangeMatrix, k: int, position: int | None = None) -> None:
    if not 0 <= k < q.n:
        raise VertexOutOfRangeError(k, q.n, position)


def mutate(q: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Fomin-Zelevinsky mutation at vertex k.

    b'_ij = -b_ij when i = k or j = k, otherwise
    b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2; the two summands are
    equal in absolute value, so the halving is always exact (asserted).
    """
    _check_vertex(q, k)
    b = q.rows
    n = q.n
    out = []
    for i in range(n):
        if i == k:
            out.append(tuple(-e for e in b[i]))
            continue
        bik = b[i][k]
        row = list(b[i])
        row[k] = -row[k]
        if bik != 0:
            for j in range(n):
                if j == k:
                    continue
                bkj = b[k][j]
                if bkj != 0:
                    s = abs(bik) * bkj + bik * abs(bkj)
                    assert s % 2 == 0, "mutation increment must be even"
                    row[j] += s // 2
        out.append(tuple(row))
    return ExchangeMatrix(tuple(out))


def mutate_sequence(q: ExchangeMatrix, seq: Iterable[int]) -> ExchangeMatrix:
    """Left-to-right composition of single mutations."""
    cur = q
    for pos, k in enumerate(seq):
        if not 0 <= k < cur.n:
            raise VertexOutOfRangeError(k, cur.n, pos)
        cur = mutate(cur, k)
    return cur


def is_acyclic(q: ExchangeMatrix) -> bool:
    """True iff the directed graph (i -> j when b_ij > 0) has no directed cycle."""
    n = q.n
    indeg = [0] * n
    for i in range(n):
        for j in range(n):
            if q.rows[i][j] > 0:
                indeg[j] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for j in range(n):
            if q.rows[v][j] > 0:
                indeg[j] -= 1
                if indeg[j] == 0:
                    stack.append(j)
    return seen == n


def components(q: ExchangeMatrix) -> list[list[int]]:
    """Connected components of the underlying undirected graph, each sorted."""
    n = q.n
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for j in range(n):
                if not seen[j] and q.rows[v][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def is_connected(q: ExchangeMatrix) -> bool:
    return len(components(q)) <= 1


def underlying_graph(q: ExchangeMatrix) -> WeightedGraph:
    """Forget orientation: edge {i, j} with multiplicity |b_ij|."""
    edges = {}
    for i in range(q.n):
        for j in range(i + 1, q.n):
            m = abs(q.rows[i][j])
            if m:
                edges[(i, j)] = m
    return WeightedGraph(q.n, edges)


def is_sink(q: ExchangeMatrix, k: int) -> bool:
    """No arrows leave k."""
    _check_vertex(q, k)
    return all(e <= 0 for e in q.rows[k])


def is_source(q: ExchangeMatrix, k: int) -> bool:
    _check_vertex(q, k)
    return all(e >= 0 for e in q.rows[k])
