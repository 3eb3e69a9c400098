"""qmut: quiver mutation, classification and cluster-seed enumeration."""

from .canonical import CanonicalKey, canonical_form, canonical_matrix, permute
from .classify import (
    ComponentVerdict,
    DiagramType,
    FinitenessVerdict,
    FormSignature,
    classify_representation_type,
    decide_mutation_finiteness,
    evaluate_form,
    form_signature,
    recognize_diagram,
    tits_form,
)
from .enumeration import Budget, MutationClassReport, class_size, enumerate_class
from .errors import (
    CrossCheckMismatchError,
    InvalidBudgetError,
    InvalidDocumentError,
    NonLaurentDivisionError,
    NotSkewSymmetricError,
    NotSquareError,
    NotSymmetricError,
    QuiverError,
    VertexOutOfRangeError,
)
from .laurent import LaurentPolynomial, divide_exact, is_laurent
from .quiver import (
    ExchangeMatrix,
    WeightedGraph,
    components,
    is_acyclic,
    is_connected,
    is_sink,
    is_source,
    mutate,
    mutate_sequence,
    underlying_graph,
    validate,
)
from .seeds import (
    Seed,
    SeedClassReport,
    enumerate_seeds,
    exchange_binomial,
    initial_seed,
    mutate_seed,
    mutate_seed_sequence,
    seed_key,
)

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "CanonicalKey",
    "ComponentVerdict",
    "CrossCheckMismatchError",
    "DiagramType",
    "ExchangeMatrix",
    "FinitenessVerdict",
    "FormSignature",
    "InvalidBudgetError",
    "InvalidDocumentError",
    "LaurentPolynomial",
    "MutationClassReport",
    "NonLaurentDivisionError",
    "NotSkewSymmetricError",
    "NotSquareError",
    "NotSymmetricError",
    "QuiverError",
    "Seed",
    "SeedClassReport",
    "VertexOutOfRangeError",
    "WeightedGraph",
    "canonical_form",
    "canonical_matrix",
    "class_size",
    "classify_representation_type",
    "components",
    "decide_mutation_finiteness",
    "divide_exact",
    "enumerate_class",
    "enumerate_seeds",
    "evaluate_form",
    "exchange_binomial",
    "form_signature",
    "initial_seed",
    "is_acyclic",
    "is_connected",
    "is_laurent",
    "is_sink",
    "is_source",
    "mutate",
    "mutate_seed",
    "mutate_seed_sequence",
    "mutate_sequence",
    "permute",
    "recognize_diagram",
    "seed_key",
    "tits_form",
    "underlying_graph",
    "validate",
]
