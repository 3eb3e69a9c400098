"""Sparse multivariate Laurent polynomials over the integers.

Terms map integer exponent vectors (negative exponents allowed) to nonzero
integer coefficients. This is exactly what cluster variables need: the
Laurent phenomenon keeps every variable in this ring, and a failed exact
division is a built-in correctness alarm rather than a representational
limit.

Canonical term order is lexicographic on exponent vectors; serialization
follows it, so rendered polynomials are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class LaurentPolynomial:
    """Immutable Laurent polynomial in ``nvars`` variables x0..x{nvars-1}."""

    nvars: int
    terms: Mapping[Exponents, int]

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_terms(nvars: int, terms: Mapping[Exponents, int] | Iterable[tuple[Exponents, int]]) -> "LaurentPolynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for exps, c in items:
            if c:
                exps = tuple(exps)
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        return LaurentPolynomial(nvars, clean)

    @staticmethod
    def constant(nvars: int, c: int) -> "LaurentPolynomial":
        zero = (0,) * nvars
        return LaurentPolynomial(nvars, {zero: c} if c else {})

    @staticmethod
    def one(nvars: int) -> "LaurentPolynomial":
        return LaurentPolynomial.constant(nvars, 1)

    @staticmethod
    def variable(nvars: int, i: int) -> "LaurentPolynomial":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return LaurentPolynomial(nvars, {exps: 1})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        return sorted(self.terms.items())

    def key(self) -> tuple:
        """Hashable canonical identity (used for dedup and ordering)."""
        return (self.nvars, tuple(self.sorted_terms()))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentPolynomial)
            and self.nvars == other.nvars
            and dict(self.terms) == dict(other.terms)
        )

    def __hash__(self) -> int:
        return hash(self.key())

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return LaurentPolynomial(self.nvars, out)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        return self + (-other)

    def __mul__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPolynomial(self.nvars, out)

    def __pow__(self, k: int) -> "LaurentPolynomial":
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPolynomial.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, exps: Exponents) -> "LaurentPolynomial":
        """Multiply by the monomial x^exps."""
        return LaurentPolynomial(
            self.nvars,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def min_exponents(self) -> Exponents:
        """Per-variable minimum exponent over all terms (the denominator profile)."""
        if not self.terms:
            return (0,) * self.nvars
        mins = [min(e[i] for e in self.terms) for i in range(self.nvars)]
        return tuple(mins)

    # -- rendering -----------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: terms sorted by exponent vector, joined by ' + '.

        A term renders as ``c * x0^a0 x1^a1 ...`` with zero exponents
        omitted, ``^1`` shortened to the bare variable, and a unit
        coefficient dropped when variables are present.
        """
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, a in enumerate(exps):
                if a == 0:
                    continue
                factors.append(f"x{i}" if a == 1 else f"x{i}^{a}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append(" ".join(factors))
            else:
                parts.append(f"{c} * " + " ".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()


def divide_exact(num: LaurentPolynomial, den: LaurentPolynomial) -> LaurentPolynomial | None:
    """Exact division in the Laurent ring; None when the quotient does not exist.

    Both operands are shifted to ordinary polynomials with per-variable
    minimum exponent zero; an exact Laurent quotient of the normalized pair
    is then an ordinary polynomial, so plain multivariate lead-term division
    (lex order) either succeeds completely or proves inexactness at the
    first non-divisible lead term.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return LaurentPolynomial(num.nvars, {})

    nshift = num.min_exponents()
    dshift = den.min_exponents()
    f = dict(num.shift(tuple(-e for e in nshift)).terms)
    g = den.shift(tuple(-e for e in dshift)).terms

    g_lead = max(g)
    g_lead_c = g[g_lead]
    g_rest = [(e, c) for e, c in g.items() if e != g_lead]

    quot: dict[Exponents, int] = {}
    while f:
        f_lead = max(f)
        c = f[f_lead]
        q, r = divmod(c, g_lead_c)
        if r:
            return None
        t = tuple(a - b for a, b in zip(f_lead, g_lead))
        if any(e < 0 for e in t):
            return None
        quot[t] = q
        del f[f_lead]
        for e, gc in g_rest:
            key = tuple(a + b for a, b in zip(t, e))
            s = f.get(key, 0) - q * gc
            if s:
                f[key] = s
            else:
                f.pop(key, None)

    shift_back = tuple(a - b for a, b in zip(nshift, dshift))
    return LaurentPolynomial(num.nvars, quot).shift(shift_back)


def is_laurent(num: LaurentPolynomial, den: LaurentPolynomial) -> bool:
    """True iff num/den divides exactly in the Laurent ring."""
    return divide_exact(num, den) is not None
