"""File formats and shared JSON rendering.

The quiver document is JSON with the dense matrix ``b`` as the source of
truth; an ``arrows`` edge list [{"from": i, "to": j, "count": m}] is
accepted on input and normalized to ``b``. Vertex indices are 0-based on
the wire and everywhere else.

Every machine-readable payload that both the CLI (``--json``) and the HTTP
API can emit is built here, and both surfaces serialize through
:func:`canonical_dumps`, so they are byte-identical for the same inputs.
"""

from __future__ import annotations

import json
from typing import Any

from .classify import (
    FinitenessVerdict,
    classify_representation_type,
    decide_mutation_finiteness,
)
from .enumeration import MutationClassReport
from .errors import InvalidDocumentError, QuiverError
from .laurent import LaurentPolynomial
from .quiver import ExchangeMatrix, validate
from .seeds import Seed, SeedClassReport


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- quiver documents ---------------------------------------------------------


def parse_document(obj: Any) -> tuple[ExchangeMatrix, list[str] | None]:
    """Parse a quiver document (dict) into a validated matrix plus labels."""
    if not isinstance(obj, dict):
        raise InvalidDocumentError("document must be a JSON object")
    if "b" in obj:
        b = obj["b"]
        if not isinstance(b, list) or not all(isinstance(r, list) for r in b):
            raise InvalidDocumentError("'b' must be a list of rows")
        for row in b:
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise InvalidDocumentError("matrix entries must be integers")
    elif "arrows" in obj:
        n = obj.get("n")
        if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
            raise InvalidDocumentError("'arrows' form requires a positive integer 'n'")
        rows = [[0] * n for _ in range(n)]
        arrows = obj["arrows"]
        if not isinstance(arrows, list):
            raise InvalidDocumentError("'arrows' must be a list")
        for a in arrows:
            if not isinstance(a, dict) or not {"from", "to"} <= set(a):
                raise InvalidDocumentError("each arrow needs 'from' and 'to'")
            i, j = a["from"], a["to"]
            count = a.get("count", 1)
            for v in (i, j, count):
                if not isinstance(v, int) or isinstance(v, bool):
                    raise InvalidDocumentError("arrow fields must be integers")
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidDocumentError(f"arrow endpoint out of range: {i}->{j}")
            if count <= 0:
                raise InvalidDocumentError("arrow 'count' must be positive")
            rows[i][j] += count
            rows[j][i] -= count
        b = rows
    else:
        raise InvalidDocumentError("document needs a matrix 'b' or an 'arrows' list")

    q = validate(b)
    if "n" in obj and not ("arrows" in obj and "b" not in obj):
        if obj["n"] != q.n:
            raise InvalidDocumentError(f"'n'={obj['n']} does not match matrix size {q.n}")
    labels = obj.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != q.n:
            raise InvalidDocumentError("'labels' must list one string per vertex")
        labels = [str(x) for x in labels]
    return q, labels


def parse_document_text(text: str) -> tuple[ExchangeMatrix, list[str] | None]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocumentError(f"invalid JSON: {exc}") from exc
    return parse_document(obj)


def render_document(q: ExchangeMatrix, labels: list[str] | None = None) -> dict:
    doc: dict[str, Any] = {"n": q.n, "b": q.to_lists()}
    if labels is not None:
        doc["labels"] = labels
    return doc


# -- laurent / seed documents -------------------------------------------------


def render_laurent(p: LaurentPolynomial) -> dict:
    return {
        "terms": [[c, list(e)] for e, c in p.sorted_terms()],
        "text": p.to_text(),
    }


def parse_laurent(obj: Any, nvars: int) -> LaurentPolynomial:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise InvalidDocumentError("laurent polynomial needs a 'terms' list")
    terms = []
    for item in obj["terms"]:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not isinstance(item[0], int)
            or isinstance(item[0], bool)
            or not isinstance(item[1], list)
            or len(item[1]) != nvars
        ):
            raise InvalidDocumentError("each term must be [coefficient, [exponents]]")
        for e in item[1]:
            if not isinstance(e, int) or isinstance(e, bool):
                raise InvalidDocumentError("exponents must be integers")
        terms.append((tuple(item[1]), item[0]))
    return LaurentPolynomial.from_terms(nvars, terms)


def render_seed(s: Seed) -> dict:
    return {
        "matrix": s.matrix.to_lists(),
        "cluster": [render_laurent(v) for v in s.cluster],
    }


def parse_seed(obj: Any) -> Seed:
    if not isinstance(obj, dict) or "matrix" not in obj or "cluster" not in obj:
        raise InvalidDocumentError("seed needs 'matrix' and 'cluster'")
    q = validate(obj["matrix"])
    cluster = obj["cluster"]
    if not isinstance(cluster, list) or len(cluster) != q.n:
        raise InvalidDocumentError("cluster must list one variable per vertex")
    return Seed(tuple(parse_laurent(v, q.n) for v in cluster), q)


# -- payloads -----------------------------------------------------------------


def verdict_display(verdict: FinitenessVerdict) -> str:
    if verdict.kind == "inapplicable":
        return "THEOREM INAPPLICABLE (not acyclic)"
    if verdict.kind == "infinite":
        return "INFINITE"
    reasons = sorted({c.reason for c in verdict.components if c.reason})
    pretty = {"dynkin": "Dynkin", "extended_dynkin": "extended Dynkin",
              "rank_at_most_two": "rank <= 2"}
    return "FINITE (" + ", ".join(pretty[r] for r in reasons) + ")" if reasons else "FINITE"


def classify_payload(q: ExchangeMatrix) -> dict:
    diagrams, signature = classify_representation_type(q)
    verdict = decide_mutation_finiteness(q)
    sig_doc: dict[str, Any] = {"kind": signature.kind}
    witnesses: dict[str, Any] = {}
    if signature.kind == "indefinite":
        witnesses["negative_vector"] = list(signature.witness)
    elif signature.kind == "positive_semidefinite_degenerate":
        witnesses["radical_vector"] = list(signature.witness)
    sig_doc["witness"] = list(signature.witness) if signature.witness else None
    verdict_doc: dict[str, Any] = {
        "kind": verdict.kind,
        "cause": verdict.cause,
        "display": verdict_display(verdict),
        "components": [
            {"vertices": list(c.vertices), "finite": c.finite, "reason": c.reason}
            for c in verdict.components
        ],
    }
    return {
        "diagram": [
            {
                "vertices": list(verts),
                "kind": d.kind,
                "family": d.family,
                "rank": d.rank,
                "display": d.display,
            }
            for verts, d in diagrams
        ],
        "signature": sig_doc,
        "verdict": verdict_doc,
        "witnesses": witnesses,
    }


def enumerate_payload(
    report: MutationClassReport, emit_class: bool = False, emit_edges: bool = False
) -> dict:
    out: dict[str, Any] = {
        "count": report.count,
        "status": report.status,
        "exhausted": report.exhausted,
        "offending": report.offending.to_lists() if report.offending is not None else None,
    }
    if emit_class:
        out["representatives"] = [m.to_lists() for m in report.representatives]
    if emit_edges:
        key_index = {k: i for i, k in enumerate(report.keys)}
        out["edges"] = [
            [key_index[a], key_index[b], k] for a, b, k in report.edges
        ]
    return out


def seeds_payload(report: SeedClassReport) -> dict:
    return {
        "seed_count": report.seed_count,
        "ordered_seed_count": report.ordered_seed_count,
        "cluster_count": report.cluster_count,
        "variable_count": report.variable_count,
        "status": report.status,
        "exhausted": report.exhausted,
    }


def error_payload(exc: QuiverError) -> dict:
    out: dict[str, Any] = {"code": exc.code, "message": str(exc)}
    detail = exc.detail()
    if detail is not None:
        out["detail"] = detail
    return out
