"""Exact sparse polynomial and truncated power-series arithmetic.

Four value types, all immutable, all over arbitrary-precision integers:

* ``Poly2``      -- Z[u,v], sparse; holds Hodge polynomials, with the
                    virtual (p,q)-number as the coefficient of u^p v^q.
* ``Laurent1``   -- Z[u, 1/u]; the image of Z[u,v] modulo (uv - 1).
* ``LPoly``      -- Z[L], dense, L the class of the affine line; counting
                    polynomials, evaluated at L = q^m for point counts.
* ``MultiSeries``-- Z[[x_1..x_r]] truncated at a total degree; holds the
                    coefficients of infinite-product generating series.

Everything is computed exactly; equality is equality of canonical forms.
"""

from __future__ import annotations

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, ParseError

# ---------------------------------------------------------------------------
# Poly2: sparse polynomials in u, v


class Poly2:
    """Sparse element of Z[u,v], keyed by exponent pairs (p, q).

    Zero coefficients are never stored and exponents are non-negative, so
    two values are equal iff their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (p, q), c in terms.items():
                if p < 0 or q < 0:
                    raise DomainError(f"negative exponent in Poly2 term u^{p} v^{q}")
                if c:
                    clean[(int(p), int(q))] = clean.get((p, q), 0) + int(c)
                    if not clean[(p, q)]:
                        del clean[(p, q)]
        self._terms = clean

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        return MappingProxyType(self._terms)

    @classmethod
    def zero(cls) -> "Poly2":
        return cls()

    @classmethod
    def one(cls) -> "Poly2":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "Poly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, p: int, q: int, c: int = 1) -> "Poly2":
        return cls({(p, q): c})

    @classmethod
    def uv(cls) -> "Poly2":
        """The class of the affine line: the monomial uv."""
        return cls({(1, 1): 1})

    def coefficient(self, p: int, q: int) -> int:
        return self._terms.get((p, q), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_diagonal(self) -> bool:
        """True when every monomial has equal exponents, i.e. the value is a
        polynomial in the product uv."""
        return all(p == q for p, q in self._terms)

    def total_degree(self) -> int:
        return max((p + q for p, q in self._terms), default=0)

    def __add__(self, other: "Poly2") -> "Poly2":
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly2._raw(out)

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def __neg__(self) -> "Poly2":
        return Poly2._raw({e: -c for e, c in self._terms.items()})

    def __mul__(self, other: "Poly2") -> "Poly2":
        out: dict[tuple[int, int], int] = {}
        for (p1, q1), c1 in self._terms.items():
            for (p2, q2), c2 in other._terms.items():
                e = (p1 + p2, q1 + q2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Poly2._raw(out)

    def __pow__(self, k: int) -> "Poly2":
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result = Poly2.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Poly2) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"Poly2({format_poly2(self)!r})"

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], int]) -> "Poly2":
        # internal: terms already canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj


def poly_add(a: Poly2, b: Poly2) -> Poly2:
    return a + b


def poly_mul(a: Poly2, b: Poly2) -> Poly2:
    return a * b


def specialize(a: Poly2, u0: int, v0: int) -> int:
    """Exact evaluation at integer arguments (u0, v0)."""
    return sum(c * u0**p * v0**q for (p, q), c in a.terms.items())


def antidiagonal_sums(a: Poly2) -> dict[int, int]:
    """Sum of coefficients along each antidiagonal p - q = i.

    Keys with zero sum are omitted, so the empty dict means every
    antidiagonal cancels.
    """
    sums: dict[int, int] = {}
    for (p, q), c in a.terms.items():
        sums[p - q] = sums.get(p - q, 0) + c
    return {i: s for i, s in sums.items() if s}


# ---------------------------------------------------------------------------
# Laurent1: Z[u, 1/u], the quotient Z[u,v]/(uv - 1)


class Laurent1:
    """Sparse Laurent polynomial in one variable u, integer exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[int(e)] = clean.get(int(e), 0) + int(c)
                    if not clean[e]:
                        del clean[e]
        self._terms = clean

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    @classmethod
    def constant(cls, c: int) -> "Laurent1":
        return cls({0: c})

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return set(self._terms) <= {0}

    def coefficient(self, e: int) -> int:
        return self._terms.get(e, 0)

    def evaluate(self, u0: int) -> int | Fraction:
        """Exact value at a nonzero integer; a Fraction when u0 does not
        divide out (only u0 = +-1 arises in the invariants we check)."""
        if u0 == 0:
            raise DomainError("cannot evaluate a Laurent polynomial at 0")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += Fraction(c) * Fraction(u0) ** e
        return int(total) if total.denominator == 1 else total

    def __add__(self, other: "Laurent1") -> "Laurent1":
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Laurent1(out)

    def __neg__(self) -> "Laurent1":
        return Laurent1({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Laurent1") -> "Laurent1":
        return self + (-other)

    def __mul__(self, other: "Laurent1") -> "Laurent1":
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent1(out)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Laurent1) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"Laurent1({format_laurent1(self)!r})"


def quotient_uv_minus1(a: Poly2) -> Laurent1:
    """Image of a under Z[u,v] -> Z[u,v]/(uv-1) = Z[u,1/u].

    The homomorphism substitutes v = 1/u, sending u^p v^q to u^(p-q).
    """
    out: dict[int, int] = {}
    for (p, q), c in a.terms.items():
        out[p - q] = out.get(p - q, 0) + c
    return Laurent1(out)


def quotient_uv(a: Poly2) -> Poly2:
    """Canonical representative of a modulo the ideal (uv).

    Every monomial divisible by uv is deleted; what remains is supported on
    the two coordinate axes, so the coefficients of u^p and v^q can be read
    off directly.
    """
    return Poly2._raw({(p, q): c for (p, q), c in a.terms.items() if p == 0 or q == 0})


# ---------------------------------------------------------------------------
# LPoly: Z[L], dense univariate


class LPoly:
    """Polynomial in the symbol L (the class of the affine line).

    Stored densely as a coefficient tuple with trailing zeros trimmed; the
    zero polynomial is the empty tuple.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @classmethod
    def zero(cls) -> "LPoly":
        return cls()

    @classmethod
    def one(cls) -> "LPoly":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "LPoly":
        return cls((c,))

    @classmethod
    def L(cls) -> "LPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, n: int, c: int = 1) -> "LPoly":
        return cls([0] * n + [c])

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, n: int) -> int:
        return self._coeffs[n] if 0 <= n < len(self._coeffs) else 0

    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def evaluate(self, x: int) -> int:
        total = 0
        for c in reversed(self._coeffs):
            total = total * x + c
        return total

    def __add__(self, other: "LPoly") -> "LPoly":
        n = max(len(self._coeffs), len(other._coeffs))
        return LPoly(
            (self.coefficient(i) + other.coefficient(i) for i in range(n))
        )

    def __neg__(self) -> "LPoly":
        return LPoly(-c for c in self._coeffs)

    def __sub__(self, other: "LPoly") -> "LPoly":
        return self + (-other)

    def __mul__(self, other: "LPoly") -> "LPoly":
        if self.is_zero() or other.is_zero():
            return LPoly()
        out = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return LPoly(out)

    def __pow__(self, k: int) -> "LPoly":
        if k < 0:
            raise DomainError("negative power of a polynomial")
        result = LPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LPoly) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"LPoly({format_lpoly(self)!r})"


def lpoly_from_diagonal(a: Poly2) -> LPoly | None:
    """Rewrite a diagonal Poly2 as a polynomial in L via uv -> L.

    Returns None when some monomial has unequal exponents, i.e. the value
    is not a function of the product uv.
    """
    if not a.is_diagonal():
        return None
    coeffs = [0] * (max((p for p, _ in a.terms), default=0) + 1)
    for (p, _), c in a.terms.items():
        coeffs[p] = c
    return LPoly(coeffs)


def lpoly_to_poly2(a: LPoly) -> Poly2:
    """Substitute L -> uv."""
    return Poly2({(i, i): c for i, c in enumerate(a.coeffs) if c})


# ---------------------------------------------------------------------------
# MultiSeries: truncated multivariate power series


class MultiSeries:
    """Power series in r variables, truncated at a total degree.

    Terms are keyed by length-r exponent tuples; every stored exponent has
    total degree <= order, and arithmetic discards anything beyond the
    truncation order.  Arity 0 is allowed (constants).
    """

    __slots__ = ("arity", "order", "_terms")

    def __init__(
        self,
        arity: int,
        order: int,
        terms: Mapping[tuple[int, ...], int] | None = None,
    ):
        if arity < 0:
            raise DomainError("arity must be non-negative")
        if order < 0:
            raise DomainError("truncation order must be non-negative")
        self.arity = arity
        self.order = order
        clean: dict[tuple[int, ...], int] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(x) for x in e)
                if len(e) != arity:
                    raise DomainError(f"exponent {e} has wrong arity (want {arity})")
                if any(x < 0 for x in e):
                    raise DomainError(f"negative exponent in {e}")
                if sum(e) > order or not c:
                    continue
                clean[e] = clean.get(e, 0) + int(c)
                if not clean[e]:
                    del clean[e]
        self._terms = clean

    @property
    def terms(self) -> Mapping[tuple[int, ...], int]:
        return MappingProxyType(self._terms)

    @classmethod
    def one(cls, arity: int, order: int) -> "MultiSeries":
        return cls(arity, order, {(0,) * arity: 1})

    def coefficient(self, e: Sequence[int]) -> int:
        return self._terms.get(tuple(e), 0)

    def __add__(self, other: "MultiSeries") -> "MultiSeries":
        self._check_compatible(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiSeries(self.arity, self.order, out)

    def __mul__(self, other: "MultiSeries") -> "MultiSeries":
        self._check_compatible(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            d1 = sum(e1)
            for e2, c2 in other._terms.items():
                if d1 + sum(e2) > self.order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiSeries(self.arity, self.order, out)

    def __pow__(self, k: int) -> "MultiSeries":
        if k < 0:
            raise DomainError("negative power of a series")
        result = MultiSeries.one(self.arity, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _check_compatible(self, other: "MultiSeries") -> None:
        if self.arity != other.arity or self.order != other.order:
            raise DomainError(
                f"series mismatch: arity {self.arity}/{other.arity}, "
                f"order {self.order}/{other.order}"
            )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MultiSeries)
            and self.arity == other.arity
            and self.order == other.order
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.order, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"MultiSeries(arity={self.arity}, order={self.order}, {len(self._terms)} terms)"


def expand_inverse_product(
    factors: Sequence[tuple[Sequence[int], int]],
    arity: int,
    order: int,
) -> MultiSeries:
    """Expand prod_i (1 - x^(m_i))^(-c_i) to a given total degree.

    Each factor is a pair (multi-exponent m_i, multiplicity c_i >= 1).  The
    coefficient of x^alpha in the result counts the multisets of factors
    (with repetition, factors of multiplicity c supplying c distinguishable
    copies) whose exponents sum to alpha.

    The expansion is pure series arithmetic: each inverse factor is the
    truncated geometric series 1 + x^m + x^(2m) + ..., raised to its
    multiplicity by repeated squaring.  No binomial shortcut is taken, so
    closed-form coefficient identities remain independent checks.
    """
    result = MultiSeries.one(arity, order)
    for exponent, multiplicity in factors:
        m = tuple(int(x) for x in exponent)
        if len(m) != arity:
            raise DomainError(f"factor exponent {m} has wrong arity (want {arity})")
        if any(x < 0 for x in m):
            raise DomainError(f"negative entry in factor exponent {m}")
        if not any(m):
            raise DomainError("zero exponent factor: the product diverges")
        if multiplicity < 1:
            raise DomainError(f"factor multiplicity must be >= 1, got {multiplicity}")
        step = sum(m)
        geometric = MultiSeries(
            arity,
            order,
            {tuple(j * x for x in m): 1 for j in range(order // step + 1)},
        )
        result = result * geometric**multiplicity
    return result


# ---------------------------------------------------------------------------
# Text form: canonical rendering and a tolerant parser
#
# Monomials are ordered degree-lex with u before v (total degree ascending,
# then higher u-exponent first).  On output a '*' separates the u- and
# v-parts except in the plain product uv; on input '*' is always optional.


def _format_terms(
    ordered: list[tuple[str, int]],
) -> str:
    parts: list[str] = []
    for monomial, c in ordered:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if monomial:
            body = monomial if mag == 1 else f"{mag}{monomial}"
        else:
            body = str(mag)
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign}{body}")
    return "".join(parts) if parts else "0"


def _uv_monomial(p: int, q: int) -> str:
    if p == 0 and q == 0:
        return ""
    upart = "" if p == 0 else ("u" if p == 1 else f"u^{p}")
    vpart = "" if q == 0 else ("v" if q == 1 else f"v^{q}")
    if upart and vpart and (p > 1 or q > 1):
        return f"{upart}*{vpart}"
    return upart + vpart


def format_poly2(a: Poly2) -> str:
    ordered = sorted(a.terms.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0]))
    return _format_terms([(_uv_monomial(p, q), c) for (p, q), c in ordered])


def format_laurent1(a: Laurent1) -> str:
    ordered = sorted(a.terms.items())
    rendered = []
    for e, c in ordered:
        if e == 0:
            rendered.append(("", c))
        elif e == 1:
            rendered.append(("u", c))
        else:
            rendered.append((f"u^{e}", c))
    return _format_terms(rendered)


def format_lpoly(a: LPoly) -> str:
    rendered = []
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        rendered.append(("" if i == 0 else ("L" if i == 1 else f"L^{i}"), c))
    return _format_terms(rendered)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\^)|(\*)|([+-]))")


def _parse_terms(
    text: str, variables: Sequence[str], allow_negative_exponents: bool
) -> dict[tuple[int, ...], int]:
    """Parse a sum of monomials over the given variable names.

    Accepts the canonical output format plus optional '*' and whitespace;
    '^' introduces an exponent, negative only where Laurent input is
    expected.
    """
    tokens: list[tuple[str, str]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at {text[pos:pos + 8]!r}")
        pos = m.end()
        num, var, caret, star, sign = m.groups()
        if num:
            tokens.append(("num", num))
        elif var:
            tokens.append(("var", var))
        elif caret:
            tokens.append(("^", "^"))
        elif star:
            tokens.append(("*", "*"))
        elif sign:
            tokens.append(("sign", sign))
    if not tokens:
        raise ParseError(f"cannot parse {text!r}: no terms")

    terms: dict[tuple[int, ...], int] = {}
    i = 0
    n = len(tokens)
    first = True
    while i < n:
        sign = 1
        while i < n and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if i == n:
            raise ParseError("dangling sign")
        if not first and sign == 1 and tokens[i - 1][0] != "sign":
            raise ParseError("missing '+' or '-' between terms")
        first = False

        coeff = 1
        exps = [0] * len(variables)
        saw_factor = False
        if tokens[i][0] == "num":
            coeff = int(tokens[i][1])
            saw_factor = True
            i += 1
            if i < n and tokens[i][0] == "*":
                i += 1
        while i < n and tokens[i][0] in ("var", "*"):
            if tokens[i][0] == "*":
                i += 1
                continue
            name = tokens[i][1]
            if name not in variables:
                raise ParseError(f"unknown variable {name!r}")
            i += 1
            e = 1
            if i < n and tokens[i][0] == "^":
                i += 1
                esign = 1
                if i < n and tokens[i][0] == "sign" and tokens[i][1] == "-":
                    esign = -1
                    i += 1
                if i >= n or tokens[i][0] != "num":
                    raise ParseError("missing exponent after '^'")
                e = esign * int(tokens[i][1])
                i += 1
                if e < 0 and not allow_negative_exponents:
                    raise ParseError("negative exponent not allowed here")
            exps[variables.index(name)] += e
            saw_factor = True
        if not saw_factor:
            raise ParseError("empty term")
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
    return terms


def parse_poly2(text: str) -> Poly2:
    terms = _parse_terms(text, ("u", "v"), allow_negative_exponents=False)
    return Poly2({(p, q): c for (p, q), c in terms.items()})


def parse_laurent1(text: str) -> Laurent1:
    terms = _parse_terms(text, ("u",), allow_negative_exponents=True)
    return Laurent1({e: c for (e,), c in terms.items()})


def parse_lpoly(text: str) -> LPoly:
    terms = _parse_terms(text, ("L",), allow_negative_exponents=False)
    degree = max((e for (e,) in terms), default=0)
    coeffs = [0] * (degree + 1)
    for (e,), c in terms.items():
        coeffs[e] = c
    return LPoly(coeffs)
