"""Exception types shared across the package.

Every error carries a stable machine-readable ``code`` so the CLI and the
HTTP API can render the same ApiError payloads.
"""

from __future__ import annotations


class QuiverError(Exception):
    """Base class for all qmut errors."""

    code = "error"

    def detail(self) -> dict | None:
        return None


class NotSquareError(QuiverError):
    code = "not_square"

    def __init__(self, rows: int, cols: int):
        super().__init__(f"matrix is not square: {rows} rows, row of length {cols}")
        self.rows = rows
        self.cols = cols

    def detail(self) -> dict:
        return {"rows": self.rows, "cols": self.cols}


class NotSkewSymmetricError(QuiverError):
    """Raised with the first offending cell, scanning the lower triangle row by row."""

    code = "not_skew_symmetric"

    def __init__(self, i: int, j: int):
        super().__init__(f"matrix is not skew-symmetric at ({i}, {j})")
        self.i = i
        self.j = j

    def detail(self) -> dict:
        return {"i": self.i, "j": self.j}


class VertexOutOfRangeError(QuiverError):
    code = "vertex_out_of_range"

    def __init__(self, vertex: int, n: int, position: int | None = None):
        at = f" (sequence position {position})" if position is not None else ""
        super().__init__(f"vertex {vertex} out of range for {n} vertices{at}")
        self.vertex = vertex
        self.n = n
        self.position = position

    def detail(self) -> dict:
        d = {"vertex": self.vertex, "n": self.n}
        if self.position is not None:
            d["position"] = self.position
        return d


class NotSymmetricError(QuiverError):
    code = "not_symmetric"

    def __init__(self, i: int, j: int):
        super().__init__(f"matrix is not symmetric at ({i}, {j})")
        self.i = i
        self.j = j

    def detail(self) -> dict:
        return {"i": self.i, "j": self.j}


class InvalidBudgetError(QuiverError):
    code = "invalid_budget"


class InvalidDocumentError(QuiverError):
    code = "invalid_document"


class NonLaurentDivisionError(QuiverError):
    """Exact division failed in the Laurent ring.

    Seed mutation can never legitimately raise this: if it surfaces, the
    arithmetic is broken, not the input.
    """

    code = "non_laurent_division"


class CrossCheckMismatchError(QuiverError):
    """Diagram recognizer and quadratic-form signature disagree (a bug, never expected)."""

    code = "cross_check_mismatch"
