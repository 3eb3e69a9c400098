"""Exact canonical labeling for directed integer-weighted graphs.

The canonical key of an exchange matrix is the row-major serialization of
the lexicographically minimal matrix over all vertex relabelings. Keys are
the dedup token for mutation-class enumeration, so this must be exact:
equal keys iff some permutation P gives B' = P B P^T.

The search assigns positions one at a time while maintaining an ordered
partition of the unassigned vertices. Placing vertex v at position d fixes
row d completely: entries at assigned positions are read off directly, and
entries inside each block are sorted ascending (always optimal, and still
free, because every block is constant in all previously fixed rows).
Candidates at each level are explored in ascending row order, branches
whose fixed rows exceed the best known matrix are pruned, and candidates
that are twins of an already-kept sibling (identical rows and columns,
zero mutual entries) are skipped since swapping twins is an automorphism.
"""

from __future__ import annotations

from .quiver import ExchangeMatrix

CanonicalKey = bytes


class _Search:
    def __init__(self, b: tuple[tuple[int, ...], ...], n: int):
        self.b = b
        self.n = n
        self.best_rows: list[tuple[int, ...]] | None = None
        self.best_perm: list[int] | None = None
        self.version = 0

    def run(self):
        self._recurse([], [list(range(self.n))], [], False)
        assert self.best_rows is not None and self.best_perm is not None
        return self.best_rows, self.best_perm

    def _candidates(self, block: list[int], order: list[int], blocks: list[list[int]]):
        b = self.b
        n = self.n
        d = len(order)
        out = []
        kept: list[int] = []
        for idx, v in enumerate(block):
            twin = False
            for w in kept:
                if (
                    b[v][w] == 0
                    and b[w][v] == 0
                    and all(
                        b[v][x] == b[w][x] and b[x][v] == b[x][w]
                        for x in range(n)
                        if x != v and x != w
                    )
                ):
                    twin = True
                    break
            if twin:
                continue
            kept.append(v)

            row_v = b[v]
            new_row: list[int] = [row_v[order[p]] for p in range(d)]
            new_row.append(row_v[v])
            new_blocks: list[list[int]] = []
            rest = [u for u in block if u != v]
            for blk in ([rest] if rest else []) + blocks[1:]:
                buckets: dict[int, list[int]] = {}
                for u in blk:
                    buckets.setdefault(row_v[u], []).append(u)
                for val in sorted(buckets):
                    sub = buckets[val]
                    new_blocks.append(sub)
                    new_row.extend(val for _ in sub)
            out.append((tuple(new_row), v, new_blocks))
        out.sort(key=lambda c: c[0])
        return out

    def _recurse(
        self,
        order: list[int],
        blocks: list[list[int]],
        rows: list[tuple[int, ...]],
        tied: bool,
    ) -> None:
        d = len(order)
        if d == self.n:
            if self.best_rows is None or rows < self.best_rows:
                self.best_rows = list(rows)
                self.best_perm = list(order)
                self.version += 1
            return
        entry_version = self.version
        for row_t, v, new_blocks in self._candidates(blocks[0], order, blocks):
            # The prefix rows match the current best either because this
            # branch has been tied all along, or because the best was set
            # by a descendant of this very node.
            prefix_ok = self.best_rows is not None and (tied or self.version > entry_version)
            if prefix_ok:
                ref = self.best_rows[d]
                if row_t > ref:
                    break  # candidates are sorted; the rest are no better
                next_tied = row_t == ref
            else:
                next_tied = False
            order.append(v)
            rows.append(row_t)
            self._recurse(order, new_blocks, rows, next_tied)
            order.pop()
            rows.pop()


def serialize_rows(rows) -> CanonicalKey:
    n = len(rows)
    body = ";".join(",".join(str(e) for e in row) for row in rows)
    return f"{n}:{body}".encode()


def canonical_form(q: ExchangeMatrix) -> tuple[CanonicalKey, tuple[int, ...]]:
    """Canonical key plus one permutation achieving it.

    The returned permutation maps new position -> original vertex: the
    minimal matrix M satisfies M[i][j] = B[perm[i]][perm[j]].
    """
    n = q.n
    if n == 0:
        return serialize_rows(()), ()
    if n == 1:
        return serialize_rows(q.rows), (0,)
    rows, perm = _Search(q.rows, n).run()
    return serialize_rows(rows), tuple(perm)


def canonical_matrix(q: ExchangeMatrix) -> ExchangeMatrix:
    """The lexicographically minimal relabeling of q (same mutation behavior)."""
    if q.n <= 1:
        return q
    rows, _ = _Search(q.rows, q.n).run()
    return ExchangeMatrix(tuple(rows))


def permute(q: ExchangeMatrix, perm) -> ExchangeMatrix:
    """Relabel: result[i][j] = q[perm[i]][perm[j]]."""
    return ExchangeMatrix(tuple(tuple(q.rows[a][b] for b in perm) for a in perm))
