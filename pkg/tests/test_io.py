"""Document parsing/rendering and payload construction."""

import json
import random

import pytest

from qmut import InvalidDocumentError, validate
from qmut.io import (
    canonical_dumps,
    classify_payload,
    enumerate_payload,
    parse_document,
    parse_document_text,
    parse_laurent,
    parse_seed,
    render_document,
    render_laurent,
    render_seed,
)
from qmut.enumeration import enumerate_class
from qmut.seeds import initial_seed, mutate_seed

from conftest import path_quiver, random_skew


class TestDocuments:
    def test_roundtrip_random(self):
        rng = random.Random(71)
        for _ in range(100):
            q = random_skew(rng, rng.randint(1, 6), 4)
            labels = None
            if rng.random() < 0.5:
                labels = [f"v{i}" for i in range(q.n)]
            doc = render_document(q, labels)
            q2, labels2 = parse_document(json.loads(json.dumps(doc)))
            assert q2.rows == q.rows
            assert labels2 == labels
            assert render_document(q2, labels2) == doc

    def test_arrows_form(self):
        q, _ = parse_document(
            {"n": 3, "arrows": [{"from": 0, "to": 1}, {"from": 1, "to": 2, "count": 2}]}
        )
        assert q.rows == ((0, 1, 0), (-1, 0, 2), (0, -2, 0))

    def test_arrows_require_n(self):
        with pytest.raises(InvalidDocumentError):
            parse_document({"arrows": [{"from": 0, "to": 1}]})

    def test_mismatched_n(self):
        with pytest.raises(InvalidDocumentError):
            parse_document({"n": 3, "b": [[0, 1], [-1, 0]]})

    def test_bad_entries(self):
        with pytest.raises(InvalidDocumentError):
            parse_document({"b": [[0, 1.5], [-1.5, 0]]})

    def test_bad_json_text(self):
        with pytest.raises(InvalidDocumentError):
            parse_document_text("{nope")

    def test_labels_length_checked(self):
        with pytest.raises(InvalidDocumentError):
            parse_document({"b": [[0, 1], [-1, 0]], "labels": ["a"]})


class TestLaurentDocuments:
    def test_roundtrip(self):
        s = initial_seed(path_quiver(3))
        s, _ = mutate_seed(s, 1)
        s, _ = mutate_seed(s, 0)
        doc = render_seed(s)
        s2 = parse_seed(json.loads(json.dumps(doc)))
        assert s2 == s

    def test_text_matches(self):
        s, (_, added) = mutate_seed(initial_seed(validate([[0, 1], [-1, 0]])), 0)
        doc = render_laurent(added)
        assert doc["text"] == "x0^-1 + x0^-1 x1"
        assert parse_laurent(doc, 2) == added

    def test_bad_terms(self):
        with pytest.raises(InvalidDocumentError):
            parse_laurent({"terms": [[1, [0]]]}, 2)


class TestPayloads:
    def test_canonical_dumps_deterministic(self):
        payload = classify_payload(path_quiver(3))
        assert canonical_dumps(payload) == canonical_dumps(
            json.loads(canonical_dumps(payload))
        )

    def test_enumerate_payload_edges_as_indices(self):
        report = enumerate_class(path_quiver(3))
        payload = enumerate_payload(report, emit_class=True, emit_edges=True)
        assert payload["count"] == 4
        assert len(payload["representatives"]) == 4
        for a, b, k in payload["edges"]:
            assert 0 <= a < 4 and 0 <= b < 4 and 0 <= k < 3
