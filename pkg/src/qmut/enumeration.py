"""Mutation-class enumeration up to isomorphism, with budgets.

BFS over canonical representatives: pop a quiver, apply all n mutations,
canonicalize, insert unseen keys. The frontier is expanded one generation
at a time and the results are merged sequentially in a fixed order, so the
discovered set, the report status and the tripping budget are identical
whether children are computed by one worker or many.

A search can certify finiteness (status complete) but never infiniteness:
running out of budget is reported as exhaustion, and only the classifier
may say "infinite" (via the finiteness theorem).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

from .canonical import CanonicalKey, canonical_matrix, serialize_rows
from .errors import InvalidBudgetError
from .quiver import ExchangeMatrix, mutate

BudgetLimit = Literal["max_quivers", "max_arrow_multiplicity", "max_mutations"]


@dataclass(frozen=True)
class Budget:
    """Cutoffs for class enumeration; infinite classes need them.

    ``max_quivers`` caps the number of distinct representatives (for seed
    enumeration it caps seeds), ``max_arrow_multiplicity`` caps |b_ij| of
    any quiver the search is allowed to record, and ``max_mutations``, when
    set, caps the total number of mutation applications.
    """

    max_quivers: int = 100_000
    max_arrow_multiplicity: int = 64
    max_mutations: int | None = None

    def check(self) -> None:
        if self.max_quivers <= 0:
            raise InvalidBudgetError("max_quivers must be positive")
        if self.max_arrow_multiplicity <= 0:
            raise InvalidBudgetError("max_arrow_multiplicity must be positive")
        if self.max_mutations is not None and self.max_mutations <= 0:
            raise InvalidBudgetError("max_mutations must be positive")


@dataclass
class MutationClassReport:
    """Result of one enumeration.

    ``representatives`` holds every discovered canonical matrix, keyed by
    its canonical serialization in ``keys`` (same order). ``edges`` are
    exchange-graph edges (source key, target key, mutated vertex) between
    discovered representatives; self-loops and parallel edges are kept.
    When the search stops early, ``frontier`` lists the keys that were
    discovered but never fully expanded, and ``offending`` holds the quiver
    that tripped the limit.
    """

    representatives: list[ExchangeMatrix]
    keys: list[CanonicalKey]
    edges: list[tuple[CanonicalKey, CanonicalKey, int]]
    status: Literal["complete", "budget_exhausted"]
    exhausted: BudgetLimit | None = None
    offending: ExchangeMatrix | None = None
    frontier: list[CanonicalKey] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def count(self) -> int:
        return len(self.representatives)


def _expand(item: tuple[CanonicalKey, ExchangeMatrix, int, int]):
    key, rep, k, cap = item
    child = mutate(rep, k)
    if child.max_multiplicity() > cap:
        return key, k, child, None
    canon = canonical_matrix(child)
    return key, k, canon, serialize_rows(canon.rows)


def enumerate_class(
    q: ExchangeMatrix, budget: Budget | None = None, workers: int = 1
) -> MutationClassReport:
    """Enumerate the mutation class of q up to isomorphism under a budget."""
    budget = budget or Budget()
    budget.check()
    n = q.n
    cap = budget.max_arrow_multiplicity

    start = canonical_matrix(q)
    if start.max_multiplicity() > cap:
        return MutationClassReport([], [], [], "budget_exhausted",
                                   exhausted="max_arrow_multiplicity", offending=start)
    start_key = serialize_rows(start.rows)
    seen: dict[CanonicalKey, ExchangeMatrix] = {start_key: start}
    order: list[CanonicalKey] = [start_key]
    edges: list[tuple[CanonicalKey, CanonicalKey, int]] = []
    frontier: list[CanonicalKey] = [start_key]
    mutations_done = 0
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None

    def report(status, *, exhausted=None, offending=None, open_keys=()):
        return MutationClassReport(
            [seen[c] for c in order], list(order), edges, status,
            exhausted=exhausted, offending=offending, frontier=list(open_keys))

    try:
        while frontier:
            tasks = [(key, seen[key], k, cap) for key in frontier for k in range(n)]
            hit_mutation_cap = False
            if budget.max_mutations is not None:
                room = budget.max_mutations - mutations_done
                if room < len(tasks):
                    tasks = tasks[:room]
                    hit_mutation_cap = True
            results = list(map(_expand, tasks)) if pool is None else list(pool.map(_expand, tasks))
            mutations_done += len(tasks)

            next_frontier: list[CanonicalKey] = []
            for idx, (key, k, child, child_key) in enumerate(results):
                # On any trip, the unexpanded part of this generation plus the
                # newly discovered keys stay open as the frontier.
                if child_key is None:
                    open_keys = frontier[idx // n:] + next_frontier
                    return report("budget_exhausted", exhausted="max_arrow_multiplicity",
                                  offending=child, open_keys=open_keys)
                if child_key not in seen:
                    if len(seen) >= budget.max_quivers:
                        open_keys = frontier[idx // n:] + next_frontier
                        return report("budget_exhausted", exhausted="max_quivers",
                                      offending=child, open_keys=open_keys)
                    seen[child_key] = child
                    order.append(child_key)
                    next_frontier.append(child_key)
                edges.append((key, child_key, k))
            if hit_mutation_cap:
                open_keys = frontier[len(tasks) // n:] + next_frontier
                return report("budget_exhausted", exhausted="max_mutations",
                              offending=seen[open_keys[0]] if open_keys else None,
                              open_keys=open_keys)
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.shutdown(wait=False)

    return report("complete")


def class_size(q: ExchangeMatrix, budget: Budget | None = None) -> int | None:
    """Number of quivers in the mutation class, or None when the budget ran out."""
    report = enumerate_class(q, budget)
    return report.count if report.complete else None
