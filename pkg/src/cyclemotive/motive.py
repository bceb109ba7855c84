"""Expression calculus for variety classes and their measure evaluations.

A MotiveExpr is a formal combination of well-understood building blocks:
points, affine spaces, tori, projective spaces, Grassmannians, cellular
classes, toric varieties, and explicitly-given smooth projective classes,
combined by disjoint union, formal difference, product, and cone.  Every
measure here factors through the class of the expression, so evaluation is
a ring homomorphism computed leaf by leaf.

Difference is formal subtraction in the class group; no embedding of the
subtracted piece is demanded or checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from . import toric
from .errors import DomainError, NotCountableError, ParseError, UnsupportedError
from .ffcount import PrimePower, gaussian_binomial_poly
from .ring import (
    Laurent1,
    LPoly,
    Poly2,
    antidiagonal_sums,
    lpoly_from_diagonal,
    lpoly_to_poly2,
    parse_poly2,
    quotient_uv,
    quotient_uv_minus1,
    specialize,
)


class MotiveExpr:
    """Base marker for expression nodes; all subclasses are frozen."""

    __slots__ = ()


@dataclass(frozen=True)
class Point(MotiveExpr):
    pass


@dataclass(frozen=True)
class AffineSpace(MotiveExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"affine space dimension must be >= 0, got {self.n}")


@dataclass(frozen=True)
class Torus(MotiveExpr):
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"torus rank must be >= 1, got {self.n}")


@dataclass(frozen=True)
class ProjSpace(MotiveExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"projective dimension must be >= 0, got {self.n}")


@dataclass(frozen=True)
class Grassmannian(MotiveExpr):
    k: int
    n: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n:
            raise DomainError(f"need 1 <= k <= n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class Cellular(MotiveExpr):
    """A class built from affine cells, one per entry of the dimension list."""

    cells: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(int(c) for c in self.cells))
        if not self.cells:
            raise DomainError("cellular class needs at least one cell")
        if any(c < 0 for c in self.cells):
            raise DomainError("cell dimensions must be >= 0")
        if list(self.cells) != sorted(self.cells):
            raise DomainError("cell dimensions must be listed in ascending order")


@dataclass(frozen=True)
class ToricFan(MotiveExpr):
    fan: toric.Fan

    def __post_init__(self):
        toric.fan_validate(self.fan)


@dataclass(frozen=True)
class SmoothProjectiveLeaf(MotiveExpr):
    name: str
    e_poly: Poly2
    countable: bool


@dataclass(frozen=True)
class DisjointUnion(MotiveExpr):
    a: MotiveExpr
    b: MotiveExpr


@dataclass(frozen=True)
class Difference(MotiveExpr):
    a: MotiveExpr
    b: MotiveExpr


@dataclass(frozen=True)
class Product(MotiveExpr):
    a: MotiveExpr
    b: MotiveExpr


@dataclass(frozen=True)
class Cone(MotiveExpr):
    a: MotiveExpr


# genus-1 curve: the one non-cellular class the worked examples need
ELLIPTIC = SmoothProjectiveLeaf("elliptic", parse_poly2("1-u-v+uv"), countable=False)


def eval_E(e: MotiveExpr) -> Poly2:
    """Hodge polynomial of the class, computed homomorphically."""
    match e:
        case Point():
            return Poly2.one()
        case AffineSpace(n):
            return Poly2.uv() ** n
        case Torus(n):
            return (Poly2.uv() - Poly2.one()) ** n
        case ProjSpace(n):
            return Poly2({(i, i): 1 for i in range(n + 1)})
        case Grassmannian(k, n):
            return lpoly_to_poly2(gaussian_binomial_poly(n, k))
        case Cellular(cells):
            total = Poly2.zero()
            for c in cells:
                total = total + Poly2.monomial(c, c)
            return total
        case ToricFan(fan):
            return toric.toric_E_poly(fan)
        case SmoothProjectiveLeaf(_, e_poly, _):
            return e_poly
        case DisjointUnion(a, b):
            return eval_E(a) + eval_E(b)
        case Difference(a, b):
            return eval_E(a) - eval_E(b)
        case Product(a, b):
            return eval_E(a) * eval_E(b)
        case Cone(a):
            # vertex point plus a line bundle over the base
            return Poly2.one() + Poly2.uv() * eval_E(a)
    raise UnsupportedError(f"unknown expression node {type(e).__name__}")


def eval_count_poly(e: MotiveExpr) -> LPoly:
    """Counting polynomial: the class written in L, the affine-line symbol.

    Computed directly in Z[L] rather than through eval_E, so the identity
    between this route and the Hodge route is a meaningful test.  Raises
    NotCountableError on leaves whose Hodge data is not a polynomial in uv.
    """
    match e:
        case Point():
            return LPoly.one()
        case AffineSpace(n):
            return LPoly.monomial(n)
        case Torus(n):
            return (LPoly.L() - LPoly.one()) ** n
        case ProjSpace(n):
            return LPoly([1] * (n + 1))
        case Grassmannian(k, n):
            return gaussian_binomial_poly(n, k)
        case Cellular(cells):
            total = LPoly.zero()
            for c in cells:
                total = total + LPoly.monomial(c)
            return total
        case ToricFan(fan):
            census = toric.fan_validate(fan)
            torus = LPoly.L() - LPoly.one()
            total = LPoly.zero()
            for k, d_k in enumerate(census):
                total = total + LPoly.constant(d_k) * torus ** (fan.dim - k)
            return total
        case SmoothProjectiveLeaf(name, e_poly, countable):
            converted = lpoly_from_diagonal(e_poly) if countable else None
            if converted is None:
                raise NotCountableError(name)
            return converted
        case DisjointUnion(a, b):
            return eval_count_poly(a) + eval_count_poly(b)
        case Difference(a, b):
            return eval_count_poly(a) - eval_count_poly(b)
        case Product(a, b):
            return eval_count_poly(a) * eval_count_poly(b)
        case Cone(a):
            return LPoly.one() + LPoly.L() * eval_count_poly(a)
    raise UnsupportedError(f"unknown expression node {type(e).__name__}")


# ---------------------------------------------------------------------------
# measures

MEASURE_TAGS = ("e-poly", "euler", "h-tilde", "h-bar", "count-poly", "count")


@dataclass(frozen=True)
class Measure:
    """Which additive invariant to evaluate.

    Tags match the CLI vocabulary: e-poly, euler, h-tilde (image mod uv-1),
    h-bar (image mod uv), count-poly, and count (point count over the field
    with q^m elements; q must be a prime power).
    """

    tag: str
    q: int | None = None
    m: int = 1

    def __post_init__(self):
        if self.tag not in MEASURE_TAGS:
            raise UnsupportedError(f"unknown measure {self.tag!r}")
        if self.tag == "count":
            if self.q is None:
                raise DomainError("count measure needs a field size q")
            PrimePower.from_int(self.q)
            if self.m < 1:
                raise DomainError(f"extension degree must be >= 1, got {self.m}")
        elif self.q is not None:
            raise DomainError(f"measure {self.tag!r} takes no field size")


E_POLY = Measure("e-poly")
EULER = Measure("euler")
H_TILDE = Measure("h-tilde")
H_BAR = Measure("h-bar")
COUNT_POLY = Measure("count-poly")


def count_at(q: int, m: int = 1) -> Measure:
    return Measure("count", q=q, m=m)


def measure_from_string(text: str) -> Measure:
    """Parse the CLI spelling: one of the plain tags or count:q[,m]."""
    if text.startswith("count:"):
        body = text[len("count:"):]
        parts = body.split(",")
        try:
            q = int(parts[0])
            m = int(parts[1]) if len(parts) > 1 else 1
        except (ValueError, IndexError):
            raise ParseError(f"cannot parse count measure {text!r}") from None
        if len(parts) > 2:
            raise ParseError(f"cannot parse count measure {text!r}")
        return count_at(q, m)
    return Measure(text)


def eval_measure(e: MotiveExpr, measure: Measure) -> int | Poly2 | Laurent1 | LPoly:
    if measure.tag == "e-poly":
        return eval_E(e)
    if measure.tag == "euler":
        return specialize(eval_E(e), 1, 1)
    if measure.tag == "h-tilde":
        return quotient_uv_minus1(eval_E(e))
    if measure.tag == "h-bar":
        return quotient_uv(eval_E(e))
    if measure.tag == "count-poly":
        return eval_count_poly(e)
    if measure.tag == "count":
        return eval_count_poly(e).evaluate(measure.q**measure.m)
    raise UnsupportedError(f"unknown measure {measure.tag!r}")


# ---------------------------------------------------------------------------
# virtual Hodge-number constraints


@dataclass(frozen=True)
class HodgeConstraintReport:
    """Three structural checks on a Hodge polynomial claimed to come from a
    class whose torus-fixed locus has dimension <= fixed_dim_bound:

    (a) antidiagonal sums vanish beyond the bound,
    (b) the coefficient total matches the stated Euler number,
    (c) the strictly-positive axis coefficients vanish.
    """

    fixed_dim_bound: int
    antidiagonals_ok: bool
    bad_antidiagonals: tuple[int, ...]
    euler_ok: bool
    euler_expected: int
    euler_actual: int
    axes_ok: bool
    bad_axis_monomials: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.antidiagonals_ok and self.euler_ok and self.axes_ok

    def to_json(self) -> dict:
        return {
            "fixed_dim_bound": self.fixed_dim_bound,
            "antidiagonals_ok": self.antidiagonals_ok,
            "bad_antidiagonals": list(self.bad_antidiagonals),
            "euler_ok": self.euler_ok,
            "euler_expected": self.euler_expected,
            "euler_actual": self.euler_actual,
            "axes_ok": self.axes_ok,
            "bad_axis_monomials": [list(m) for m in self.bad_axis_monomials],
            "ok": self.ok,
        }


def hodge_constraints_check(
    h: Poly2, chi: int, fixed_dim_bound: int
) -> HodgeConstraintReport:
    if fixed_dim_bound < 0:
        raise DomainError("fixed-point dimension bound must be >= 0")
    sums = antidiagonal_sums(h)
    bad_anti = tuple(sorted(i for i in sums if abs(i) > fixed_dim_bound))
    actual_chi = sum(sums.values())
    bad_axes = tuple(
        sorted((p, q) for (p, q) in h.terms if (p == 0) != (q == 0))
    )
    return HodgeConstraintReport(
        fixed_dim_bound=fixed_dim_bound,
        antidiagonals_ok=not bad_anti,
        bad_antidiagonals=bad_anti,
        euler_ok=actual_chi == chi,
        euler_expected=chi,
        euler_actual=actual_chi,
        axes_ok=not bad_axes,
        bad_axis_monomials=bad_axes,
    )


# ---------------------------------------------------------------------------
# JSON expression trees
#
# {"op": "difference", "args": [...]} for nodes;
# {"leaf": "proj_space", "n": 2} and friends for leaves.

_NODE_OPS = {
    "disjoint_union": DisjointUnion,
    "difference": Difference,
    "product": Product,
    "cone": Cone,
}


def expr_from_json(source: str | Mapping) -> MotiveExpr:
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"expression is not valid JSON: {exc}") from None
    else:
        data = source
    return _expr_from_data(data)


def _expr_from_data(data) -> MotiveExpr:
    if not isinstance(data, Mapping):
        raise ParseError(f"expression node must be an object, got {data!r}")
    if "op" in data:
        op = data["op"]
        ctor = _NODE_OPS.get(op)
        if ctor is None:
            raise UnsupportedError(f"unknown expression op {op!r}")
        args = data.get("args")
        want = 1 if ctor is Cone else 2
        if not isinstance(args, list) or len(args) != want:
            raise ParseError(f"op {op!r} needs exactly {want} args")
        return ctor(*[_expr_from_data(a) for a in args])
    if "leaf" not in data:
        raise ParseError(f"expression node needs 'op' or 'leaf': {data!r}")
    kind = data["leaf"]
    try:
        if kind == "point":
            return Point()
        if kind == "affine_space":
            return AffineSpace(int(data["n"]))
        if kind == "torus":
            return Torus(int(data["n"]))
        if kind == "proj_space":
            return ProjSpace(int(data["n"]))
        if kind == "grassmannian":
            return Grassmannian(int(data["k"]), int(data["n"]))
        if kind == "cellular":
            return Cellular(tuple(int(c) for c in data["cells"]))
        if kind == "toric_fan":
            return ToricFan(toric.fan_from_json(data["fan"]))
        if kind == "elliptic":
            return ELLIPTIC
        if kind == "custom":
            terms = {
                (int(p), int(q)): int(c) for p, q, c in data["e_poly"]
            }
            return SmoothProjectiveLeaf(
                str(data.get("name", "custom")),
                Poly2(terms),
                bool(data["countable"]),
            )
    except KeyError as exc:
        raise ParseError(f"leaf {kind!r} is missing field {exc}") from None
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed leaf {kind!r}: {exc}") from None
    raise UnsupportedError(f"unknown leaf kind {kind!r}")


def expr_to_json(e: MotiveExpr) -> dict:
    match e:
        case Point():
            return {"leaf": "point"}
        case AffineSpace(n):
            return {"leaf": "affine_space", "n": n}
        case Torus(n):
            return {"leaf": "torus", "n": n}
        case ProjSpace(n):
            return {"leaf": "proj_space", "n": n}
        case Grassmannian(k, n):
            return {"leaf": "grassmannian", "k": k, "n": n}
        case Cellular(cells):
            return {"leaf": "cellular", "cells": list(cells)}
        case ToricFan(fan):
            return {"leaf": "toric_fan", "fan": toric.fan_to_json(fan)}
        case SmoothProjectiveLeaf(name, e_poly, countable):
            if e is ELLIPTIC or name == "elliptic":
                return {"leaf": "elliptic"}
            return {
                "leaf": "custom",
                "name": name,
                "e_poly": sorted([p, q, c] for (p, q), c in e_poly.terms.items()),
                "countable": countable,
            }
        case DisjointUnion(a, b):
            return {"op": "disjoint_union", "args": [expr_to_json(a), expr_to_json(b)]}
        case Difference(a, b):
            return {"op": "difference", "args": [expr_to_json(a), expr_to_json(b)]}
        case Product(a, b):
            return {"op": "product", "args": [expr_to_json(a), expr_to_json(b)]}
        case Cone(a):
            return {"op": "cone", "args": [expr_to_json(a)]}
    raise UnsupportedError(f"unknown expression node {type(e).__name__}")
