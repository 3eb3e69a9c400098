"""Seeds: clusters of Laurent-polynomial variables paired with a matrix.

Seed mutation at k replaces the k-th cluster variable through the exchange
relation

    x_k' * x_k = prod_{b_ik > 0} x_i^{b_ik} + prod_{b_ik < 0} x_i^{-b_ik}

(empty products are 1) and mutates the matrix. The division by x_k is
performed exactly in the Laurent ring; failure would falsify the Laurent
phenomenon and is therefore raised as an internal error, never swallowed.

Seed enumeration deduplicates up to simultaneous permutation of cluster
positions and matrix indices, matching the use of clusters as unordered
transcendence bases. Ordered seeds are counted as well, for transparency.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import Literal

from .enumeration import Budget, BudgetLimit
from .errors import NonLaurentDivisionError, VertexOutOfRangeError
from .laurent import LaurentPolynomial, divide_exact
from .quiver import ExchangeMatrix, mutate

SeedKey = tuple


@dataclass(frozen=True)
class Seed:
    cluster: tuple[LaurentPolynomial, ...]
    matrix: ExchangeMatrix

    @property
    def n(self) -> int:
        return self.matrix.n


def initial_seed(q: ExchangeMatrix) -> Seed:
    """The seed (x0, ..., x{n-1}) with matrix q."""
    n = q.n
    return Seed(tuple(LaurentPolynomial.variable(n, i) for i in range(n)), q)


def exchange_binomial(s: Seed, k: int) -> LaurentPolynomial:
    """Right-hand side of the exchange relation at k, evaluated in the cluster."""
    n = s.n
    pos = LaurentPolynomial.one(n)
    neg = LaurentPolynomial.one(n)
    for i in range(n):
        bik = s.matrix.rows[i][k]
        if bik > 0:
            pos = pos * s.cluster[i] ** bik
        elif bik < 0:
            neg = neg * s.cluster[i] ** (-bik)
    return pos + neg


def mutate_seed(s: Seed, k: int) -> tuple[Seed, tuple[LaurentPolynomial, LaurentPolynomial]]:
    """Mutated seed plus the exchange pair (x_k, x_k')."""
    if not 0 <= k < s.n:
        raise VertexOutOfRangeError(k, s.n)
    binomial = exchange_binomial(s, k)
    new_var = divide_exact(binomial, s.cluster[k])
    if new_var is None:
        raise NonLaurentDivisionError(
            f"exchange relation at vertex {k} did not divide exactly; "
            "this is a bug in the Laurent arithmetic, not bad input"
        )
    cluster = tuple(new_var if i == k else v for i, v in enumerate(s.cluster))
    return Seed(cluster, mutate(s.matrix, k)), (s.cluster[k], new_var)


def mutate_seed_sequence(s: Seed, seq) -> Seed:
    for pos, k in enumerate(seq):
        if not 0 <= k < s.n:
            raise VertexOutOfRangeError(k, s.n, pos)
        s, _ = mutate_seed(s, k)
    return s


def seed_key(s: Seed) -> SeedKey:
    """Canonical identity up to simultaneous permutation of positions.

    The cluster is sorted by the variables' canonical term serialization;
    among orderings tied on equal variables, the one with the minimal
    permuted matrix wins.
    """
    n = s.n
    var_keys = [v.key() for v in s.cluster]
    order = sorted(range(n), key=lambda i: var_keys[i])

    groups: list[list[int]] = []
    for i in order:
        if groups and var_keys[groups[-1][-1]] == var_keys[i]:
            groups[-1].append(i)
        else:
            groups.append([i])

    best: tuple | None = None
    def walk(prefix: list[int], gi: int):
        nonlocal best
        if gi == len(groups):
            mat = tuple(tuple(s.matrix.rows[a][b] for b in prefix) for a in prefix)
            cand = mat
            if best is None or cand < best:
                best = cand
            return
        for p in permutations(groups[gi]):
            walk(prefix + list(p), gi + 1)

    if all(len(g) == 1 for g in groups):
        perm = [g[0] for g in groups]
        best = tuple(tuple(s.matrix.rows[a][b] for b in perm) for a in perm)
    else:
        walk([], 0)
    return (tuple(var_keys[i] for i in order), best)


@dataclass
class SeedClassReport:
    """Seed census for one starting matrix.

    ``seed_count`` counts seeds up to simultaneous permutation (the
    enumeration's dedup unit); ``ordered_seed_count`` counts raw
    (cluster tuple, matrix) states reached; clusters are unordered variable
    sets; variables are distinct cluster variables across all seeds.
    """

    seeds: list[Seed]
    seed_count: int
    ordered_seed_count: int
    cluster_count: int
    variable_count: int
    status: Literal["complete", "budget_exhausted"]
    exhausted: BudgetLimit | None = None
    offending: Seed | None = None

    @property
    def complete(self) -> bool:
        return self.status == "complete"


def _expand_seed(item: tuple[Seed, int, int]):
    s, k, cap = item
    child, _ = mutate_seed(s, k)
    if child.matrix.max_multiplicity() > cap:
        return child, None
    return child, seed_key(child)


def enumerate_seeds(
    q: ExchangeMatrix, budget: Budget | None = None, workers: int = 1
) -> SeedClassReport:
    """BFS over seeds from the initial seed, deduplicated by seed key.

    ``budget.max_quivers`` caps the number of distinct seeds here; the
    multiplicity cap applies to the seed matrices.
    """
    budget = budget or Budget()
    budget.check()
    n = q.n
    cap = budget.max_arrow_multiplicity

    start = initial_seed(q)
    seen: dict[SeedKey, Seed] = {seed_key(start): start}
    ordered: set = {(tuple(v.key() for v in start.cluster), start.matrix.rows)}
    order: list[Seed] = [start]
    frontier: list[Seed] = [start]
    mutations_done = 0
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None

    def report(status, *, exhausted=None, offending=None):
        clusters = {frozenset(v.key() for v in s.cluster) for s in order}
        variables = {v.key() for s in order for v in s.cluster}
        return SeedClassReport(
            seeds=list(order),
            seed_count=len(order),
            ordered_seed_count=len(ordered),
            cluster_count=len(clusters),
            variable_count=len(variables),
            status=status,
            exhausted=exhausted,
            offending=offending,
        )

    try:
        if start.matrix.max_multiplicity() > cap:
            return report("budget_exhausted", exhausted="max_arrow_multiplicity", offending=start)
        while frontier:
            tasks = [(s, k, cap) for s in frontier for k in range(n)]
            hit_mutation_cap = False
            if budget.max_mutations is not None:
                room = budget.max_mutations - mutations_done
                if room < len(tasks):
                    tasks = tasks[:room]
                    hit_mutation_cap = True
            results = list(map(_expand_seed, tasks)) if pool is None else list(pool.map(_expand_seed, tasks))
            mutations_done += len(tasks)

            next_frontier: list[Seed] = []
            for child, key in results:
                if key is None:
                    return report("budget_exhausted", exhausted="max_arrow_multiplicity",
                                  offending=child)
                ordered.add((tuple(v.key() for v in child.cluster), child.matrix.rows))
                if key not in seen:
                    if len(seen) >= budget.max_quivers:
                        return report("budget_exhausted", exhausted="max_quivers",
                                      offending=child)
                    seen[key] = child
                    order.append(child)
                    next_frontier.append(child)
            if hit_mutation_cap:
                return report("budget_exhausted", exhausted="max_mutations")
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.shutdown(wait=False)

    return report("complete")
