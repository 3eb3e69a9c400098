"""Diagram recognition, quadratic-form signatures and mutation-finiteness.

Two independent backends decide representation type:

* :func:`recognize_diagram` pattern-matches connected components against the
  ADE / extended-ADE catalogs (simple edges only, except the rank-1 extended
  A diagram, which is the double edge on two vertices);
* :func:`form_signature` decides definiteness of the associated quadratic
  form exactly, by fraction-free (Bareiss) leading-principal-minor analysis
  with symmetric pivoting. No floating point anywhere: the semidefinite
  boundary cases are precisely the extended diagrams and must not be
  misclassified.

:func:`classify_representation_type` runs both and cross-checks them;
:func:`decide_mutation_finiteness` turns the classification into the
finite / infinite verdict for acyclic quivers (componentwise: a component
is finite iff it has at most two vertices, or is Dynkin, or is extended
Dynkin).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Literal, NamedTuple, Sequence

from .errors import CrossCheckMismatchError, NotSquareError, NotSymmetricError
from .quiver import ExchangeMatrix, WeightedGraph, components, is_acyclic, underlying_graph

DiagramKind = Literal["dynkin", "extended_dynkin", "other"]
SignatureKind = Literal["positive_definite", "positive_semidefinite_degenerate", "indefinite"]
FiniteReason = Literal["dynkin", "extended_dynkin", "rank_at_most_two"]


class DiagramType(NamedTuple):
    """Shape verdict for one connected graph.

    For Dynkin, ``rank`` equals the vertex count; for extended diagrams the
    vertex count is ``rank + 1`` (so the double edge on 2 vertices is the
    rank-1 extended A diagram).
    """

    kind: DiagramKind
    family: str | None = None  # "A" | "D" | "E" (None for kind="other")
    rank: int | None = None

    @property
    def display(self) -> str:
        if self.kind == "dynkin":
            return f"{self.family}{self.rank}"
        if self.kind == "extended_dynkin":
            return f"{self.family}~{self.rank}"
        return "other"


class FormSignature(NamedTuple):
    """Definiteness of a symmetric integer matrix M, with an integer certificate.

    * indefinite: ``witness`` satisfies witness' M witness < 0;
    * positive semidefinite degenerate: ``witness`` is a radical vector,
      M witness = 0;
    * positive definite: no witness.
    """

    kind: SignatureKind
    witness: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple[int, ...]
    finite: bool
    reason: FiniteReason | None  # None when the component is infinite


@dataclass(frozen=True)
class FinitenessVerdict:
    kind: Literal["finite", "infinite", "inapplicable"]
    components: tuple[ComponentVerdict, ...] = ()
    cause: str | None = None  # set for kind="inapplicable"


def tits_form(q: ExchangeMatrix) -> tuple[tuple[int, ...], ...]:
    """Symmetric matrix of the quadratic form, doubled to stay integral.

    Diagonal 2, off-diagonal -|b_ij|; depends only on the underlying graph.
    """
    n = q.n
    return tuple(
        tuple(2 if i == j else -abs(q.rows[i][j]) for j in range(n)) for i in range(n)
    )


def _reduce_vector(v: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for e in v:
        g = gcd(g, e)
        if g == 1:
            return tuple(v)
    if g > 1:
        return tuple(e // g for e in v)
    return tuple(v)


def _basis_vector(n: int, idx: int, hist) -> list[int]:
    """Reconstruct the (integer-scaled) congruence basis vector for ``idx``.

    ``hist`` records each pivot step as (t, pivot, {i: a_it}); the basis
    evolves as u_i <- p*u_i - a_it*u_t, so replaying the steps that touched
    ``idx`` (and, recursively, the pivot vectors) rebuilds it. Scales are
    positive, so signs of evaluated forms are preserved.
    """
    pivot_vecs: dict[int, list[int]] = {}

    def build(target: int, upto: int) -> list[int]:
        v = [0] * n
        v[target] = 1
        for step in range(upto):
            t, p, col = hist[step]
            if t == target:
                break
            # The p-scaling applies even when this row's coefficient is zero,
            # so that all reconstructed vectors share one consistent scale.
            c = col.get(target, 0)
            if c:
                u_t = pivot_vecs[t]
                for x in range(n):
                    v[x] = p * v[x] - c * u_t[x]
            else:
                for x in range(n):
                    v[x] = p * v[x]
        return v

    for step, (t, _p, _col) in enumerate(hist):
        pivot_vecs[t] = build(t, step)
    return build(idx, len(hist))


def form_signature(m: Sequence[Sequence[int]]) -> FormSignature:
    """Exact signature of a symmetric integer matrix.

    Symmetric integer congruence in the style of Bareiss: each step pivots
    on a positive diagonal entry and rewrites the remaining block as
    ``(p*a_ij - a_it*a_tj) // prev`` (an exact division onto bordered
    minors). Diagonal entries keep the sign of the quadratic form on the
    corresponding congruence basis vector, so a negative diagonal entry
    yields an indefinite witness, a row that dies to zero is a radical
    direction, and a block with zero diagonal but some nonzero a_ij gives
    the hyperbolic witness u_i - sign(a_ij) u_j. Witness vectors are
    reconstructed from the recorded pivot history only when needed.
    """
    n = len(m)
    a: list[list[int]] = []
    for row in m:
        if len(row) != n:
            raise NotSquareError(n, len(row))
        a.append(list(row))
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise NotSymmetricError(i, j)

    if n == 0:
        return FormSignature("positive_definite")

    active = list(range(n))
    prev = 1
    hist: list = []
    radical: tuple[int, int] | None = None  # (index, history length at retirement)

    def witness_for(idx: int) -> tuple[int, ...]:
        if not hist:
            v = [0] * n
            v[idx] = 1
            return tuple(v)
        if len(hist) == 1:
            t, p, col = hist[0]
            v = [0] * n
            v[idx] = p
            v[t] = -col.get(idx, 0)
            return _reduce_vector(v)
        if len(hist) == 2:
            # v = p1*(p0*e_idx - c0*e_t0) - c1*(p0*e_t1 - c01*e_t0)
            t0, p0, col0 = hist[0]
            t1, p1, col1 = hist[1]
            c0 = col0.get(idx, 0)
            c1 = col1.get(idx, 0)
            v = [0] * n
            v[idx] = p1 * p0
            v[t0] = c1 * col0.get(t1, 0) - p1 * c0
            v[t1] = -c1 * p0
            return _reduce_vector(v)
        return _reduce_vector(_basis_vector(n, idx, hist))

    while active:
        pivot_at = -1
        zeros = None
        for i in active:
            d = a[i][i]
            if d < 0:
                return FormSignature("indefinite", witness_for(i))
            if d > 0:
                if pivot_at < 0:
                    pivot_at = i
            else:
                if zeros is None:
                    zeros = [i]
                else:
                    zeros.append(i)
        if zeros:
            # Retire zero rows (radical directions); re-scan until stable.
            changed = True
            while changed:
                changed = False
                for i in zeros:
                    row_i = a[i]
                    if all(row_i[j] == 0 for j in active):
                        if radical is None:
                            radical = (i, len(hist))
                        active.remove(i)
                        zeros.remove(i)
                        changed = True
                        break
            if zeros and pivot_at < 0:
                # Zero diagonal with a nonzero off-diagonal entry: hyperbolic.
                for ii, i in enumerate(active):
                    row_i = a[i]
                    for j in active[ii + 1:]:
                        c = row_i[j]
                        if c:
                            s = 1 if c > 0 else -1
                            ui = _basis_vector(n, i, hist)
                            uj = _basis_vector(n, j, hist)
                            w = [ui[x] - s * uj[x] for x in range(n)]
                            return FormSignature("indefinite", _reduce_vector(w))
                raise AssertionError("unreachable: zero block with no zero rows")
            if not active or pivot_at < 0:
                break

        t = pivot_at
        p = a[t][t]
        active.remove(t)
        row_t = a[t]
        col = {}
        for i in active:
            c = row_t[i]
            if c:
                col[i] = c
        hist.append((t, p, col))
        # The block stays symmetric: update the upper half and mirror.
        if prev == 1:
            for ii, i in enumerate(active):
                ait = row_t[i]
                row_i = a[i]
                for j in active[ii:]:
                    val = p * row_i[j] - ait * row_t[j]
                    row_i[j] = val
                    if j != i:
                        a[j][i] = val
        else:
            for ii, i in enumerate(active):
                ait = row_t[i]
                row_i = a[i]
                for j in active[ii:]:
                    num = p * row_i[j] - ait * row_t[j]
                    val = num // prev
                    if val * prev != num:
                        raise AssertionError("Bareiss division not exact")
                    row_i[j] = val
                    if j != i:
                        a[j][i] = val
        prev = p

    if radical is not None:
        idx, upto = radical
        vec = _basis_vector(n, idx, hist[:upto])
        return FormSignature("positive_semidefinite_degenerate", _reduce_vector(vec))
    return FormSignature("positive_definite")


def evaluate_form(m: Sequence[Sequence[int]], v: Sequence[int]) -> int:
    """v^T M v, the direct check used to verify witnesses."""
    n = len(m)
    return sum(m[i][j] * v[i] * v[j] for i in range(n) for j in range(n))


def _branch_length(adj: list[list[int]], start: int, first: int) -> int:
    """Length of the path hanging off `start` through `first`; -1 if it rejoins a branch vertex."""
    length = 1
    prev, cur = start, first
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            return -1
        prev, cur = cur, nxt[0]
        length += 1


_OTHER = DiagramType("other")


def _recognize_component(comp: list[int], adj: list[list[int]], max_mult: int,
                         edge_count: int) -> DiagramType:
    n = len(comp)
    if max_mult > 1:
        if n == 2 and edge_count == 1 and max_mult == 2:
            return DiagramType("extended_dynkin", "A", 1)
        return _OTHER
    if n == 1:
        return DiagramType("dynkin", "A", 1)
    if edge_count >= n + 1:
        return _OTHER

    max_deg = 0
    branch_vertices = []
    for v in comp:
        d = len(adj[v])
        if d > max_deg:
            max_deg = d
        if d == 3:
            branch_vertices.append(v)

    if edge_count == n:
        # The only unicyclic catalog entry is the full cycle.
        if max_deg == 2 and n >= 3:
            return DiagramType("extended_dynkin", "A", n - 1)
        return _OTHER

    # edge_count == n - 1: trees from here on.
    if max_deg <= 2:
        return DiagramType("dynkin", "A", n)
    if max_deg == 4:
        # Star with four unit leaves is the 5-vertex extended D diagram.
        if n == 5 and all(len(adj[v]) in (1, 4) for v in comp):
            return DiagramType("extended_dynkin", "D", 4)
        return _OTHER
    if max_deg > 4:
        return _OTHER

    if len(branch_vertices) == 1:
        c = branch_vertices[0]
        lengths = sorted(_branch_length(adj, c, w) for w in adj[c])
        if -1 in lengths:
            return _OTHER
        a1, a2, a3 = lengths
        if a1 == 1 and a2 == 1:
            return DiagramType("dynkin", "D", n)
        if (a1, a2, a3) == (1, 2, 2):
            return DiagramType("dynkin", "E", 6)
        if (a1, a2, a3) == (1, 2, 3):
            return DiagramType("dynkin", "E", 7)
        if (a1, a2, a3) == (1, 2, 4):
            return DiagramType("dynkin", "E", 8)
        if (a1, a2, a3) == (2, 2, 2):
            return DiagramType("extended_dynkin", "E", 6)
        if (a1, a2, a3) == (1, 3, 3):
            return DiagramType("extended_dynkin", "E", 7)
        if (a1, a2, a3) == (1, 2, 5):
            return DiagramType("extended_dynkin", "E", 8)
        return _OTHER
    if len(branch_vertices) == 2:
        # Extended D: two degree-3 vertices, each carrying two unit leaves,
        # joined by a path through everything else.
        for c in branch_vertices:
            leaf_arms = 0
            for w in adj[c]:
                if len(adj[w]) == 1:
                    leaf_arms += 1
            if leaf_arms < 2:
                return _OTHER
        return DiagramType("extended_dynkin", "D", n - 1)
    return _OTHER


def recognize_diagram(g: WeightedGraph) -> list[tuple[tuple[int, ...], DiagramType]]:
    """Per connected component: (sorted vertices, shape verdict)."""
    n = g.n
    adj: list[list[int]] = [[] for _ in range(n)]
    edge_count = 0
    max_mult = 1
    for (a, b), m in g.edges.items():
        adj[a].append(b)
        adj[b].append(a)
        edge_count += 1
        if m > max_mult:
            max_mult = m
    seen = bytearray(n)
    comp = [0] if n else []
    if n:
        seen[0] = 1
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
    if len(comp) == n:
        # connected: the whole-graph edge stats are the component's
        comp.sort()
        return [(tuple(comp), _recognize_component(comp, adj, max_mult, edge_count))]

    out = [comp]
    for s in range(1, n):
        if seen[s]:
            continue
        comp = [s]
        stack = [s]
        seen[s] = 1
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        out.append(comp)
    result = []
    for comp in out:
        comp_set = set(comp)
        c_edges = 0
        c_mult = 1
        for (a, b), m in g.edges.items():
            if a in comp_set:
                c_edges += 1
                if m > c_mult:
                    c_mult = m
        comp.sort()
        result.append((tuple(comp), _recognize_component(comp, adj, c_mult, c_edges)))
    return result


def _component_signature_kind(q: ExchangeMatrix, verts: tuple[int, ...]) -> FormSignature:
    sub = tuple(
        tuple(2 if i == j else -abs(q.rows[vi][vj]) for j, vj in enumerate(verts))
        for i, vi in enumerate(verts)
    )
    return form_signature(sub)


_EXPECTED_SIGNATURE = {
    "dynkin": "positive_definite",
    "extended_dynkin": "positive_semidefinite_degenerate",
    "other": "indefinite",
}


def classify_representation_type(
    q: ExchangeMatrix,
) -> tuple[list[tuple[tuple[int, ...], DiagramType]], FormSignature]:
    """Both classifications, cross-checked componentwise.

    Raises CrossCheckMismatchError if the shape catalog and the quadratic
    form ever disagree; that signals an implementation bug, never bad input.
    """
    diagrams = recognize_diagram(underlying_graph(q))
    for verts, diag in diagrams:
        sig = _component_signature_kind(q, verts)
        if sig.kind != _EXPECTED_SIGNATURE[diag.kind]:
            raise CrossCheckMismatchError(
                f"component {verts}: diagram {diag.display} vs form {sig.kind}"
            )
    return diagrams, form_signature(tits_form(q))


def decide_mutation_finiteness(q: ExchangeMatrix) -> FinitenessVerdict:
    """Finite / infinite mutation class for acyclic quivers.

    Cyclic input gets an explicit "inapplicable" verdict: the theorem this
    implements only covers quivers with no oriented cycles, and we do not
    search the mutation class for an acyclic representative.

    Disconnected input is decided componentwise (mutation never connects
    components): finite iff every component is finite.
    """
    if not is_acyclic(q):
        return FinitenessVerdict("inapplicable", cause="not_acyclic")

    diagrams = dict(recognize_diagram(underlying_graph(q)))
    verdicts = []
    all_finite = True
    for comp in components(q):
        verts = tuple(comp)
        diag = diagrams[verts]
        reason: FiniteReason | None
        if diag.kind == "dynkin":
            reason = "dynkin"
        elif diag.kind == "extended_dynkin":
            reason = "extended_dynkin"
        elif len(verts) <= 2:
            reason = "rank_at_most_two"
        else:
            reason = None
            all_finite = False
        verdicts.append(ComponentVerdict(verts, reason is not None, reason))
    return FinitenessVerdict("finite" if all_finite else "infinite", tuple(verdicts))
