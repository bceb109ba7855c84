"""Fans, orbit censuses, and invariants of the associated torus varieties.

A fan is stored as raw combinatorial data: ray vectors plus the list of
cones that are actually present (the zero cone is implicit, faces are NOT
auto-generated).  The variety decomposes into one torus orbit per cone, a
cone of rank k contributing an (n-k)-torus, which is all the structure the
census-based formulas here need.  Completeness and smoothness are never
assumed or checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence

from .errors import DomainError, FanError, ParseError
from .ring import MultiSeries, Poly2, expand_inverse_product

Ray = tuple[int, ...]
Cone = tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple[Ray, ...]
    cones: tuple[Cone, ...]

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "cones", tuple(tuple(int(i) for i in c) for c in self.cones))


def _gcd_all(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = _gcd(g, abs(x))
    return g


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _int_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix by exact fraction elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    col = 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                factor = m[r][col]
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


def fan_validate(fan: Fan) -> tuple[int, ...]:
    """Check fan invariants and return the census (d_0, ..., d_n).

    d_0 counts the implicit zero cone, so it is always 1; d_k counts the
    listed cones whose ray matrix has rank k.
    """
    n = fan.dim
    if n < 0:
        raise FanError("ambient dimension must be >= 0")
    for ray in fan.rays:
        if len(ray) != n:
            raise FanError(f"ray {ray} has wrong length (ambient dimension {n})")
        g = _gcd_all(ray)
        if g == 0:
            raise FanError(f"zero ray {ray}")
        if g != 1:
            raise FanError(f"ray {ray} is not primitive (gcd {g})")
    seen: set[Cone] = set()
    census = [0] * (n + 1)
    census[0] = 1
    for cone in fan.cones:
        if not cone:
            raise FanError("empty cone listed (the zero cone is implicit)")
        if any(i < 0 or i >= len(fan.rays) for i in cone):
            raise FanError(f"cone {cone} has a ray index out of range")
        if tuple(sorted(set(cone))) != cone:
            raise FanError(f"cone {cone} is not a strictly increasing index list")
        if cone in seen:
            raise FanError(f"duplicate cone {cone}")
        seen.add(cone)
        rank = _int_rank([fan.rays[i] for i in cone])
        census[rank] += 1
    return tuple(census)


def toric_lambda(fan: Fan) -> int:
    """Euler number of the fan's variety: the count of full-rank cones."""
    return fan_validate(fan)[fan.dim]


def toric_E_poly(fan: Fan) -> Poly2:
    """Hodge polynomial from the orbit decomposition.

    Each rank-k cone contributes a torus of dimension n-k, of class
    (uv-1)^(n-k); the sum over the census is the class of the whole variety.
    """
    census = fan_validate(fan)
    torus = Poly2.uv() - Poly2.one()
    total = Poly2.zero()
    for k, d_k in enumerate(census):
        if d_k:
            total = total + Poly2.constant(d_k) * torus ** (fan.dim - k)
    return total


@dataclass(frozen=True)
class OrbitClosure:
    """A p-dimensional invariant subvariety: the closure of the orbit of a
    rank-(n-p) cone, identified by the cone's ray indices."""

    ray_indices: Cone
    dim: int


def invariant_subvarieties(fan: Fan, p: int) -> list[OrbitClosure]:
    """The p-dimensional orbit closures, one per cone of rank n - p.

    For p = n the answer is the single descriptor of the implicit zero cone,
    the variety itself.
    """
    census = fan_validate(fan)
    n = fan.dim
    if not 0 <= p <= n:
        raise DomainError(f"subvariety dimension {p} outside 0..{n}")
    want = n - p
    if want == 0:
        return [OrbitClosure((), n)]
    found = [
        OrbitClosure(cone, p)
        for cone in fan.cones
        if _int_rank([fan.rays[i] for i in cone]) == want
    ]
    assert len(found) == census[want]
    return found


def euler_series(
    fan: Fan,
    p: int,
    order: int,
    grading: Mapping[OrbitClosure, Sequence[int]]
    | Callable[[OrbitClosure], Sequence[int]]
    | None = None,
) -> MultiSeries:
    """Product formula for the series of p-dimensional effective classes.

    Each invariant subvariety V contributes a factor 1/(1 - x^g(V)); the
    grading g picks the monomial recording V's class.  By default every
    descriptor gets its own basis vector (the finest grading); passing a
    map or function identifies classes, e.g. sending all of them to a
    single variable t to grade by degree.
    """
    descriptors = invariant_subvarieties(fan, p)
    if grading is None:
        arity = len(descriptors)
        vectors = []
        for i in range(arity):
            e = [0] * arity
            e[i] = 1
            vectors.append(tuple(e))
    else:
        lookup = grading if callable(grading) else grading.__getitem__
        vectors = [tuple(int(x) for x in lookup(d)) for d in descriptors]
        if not vectors:
            raise DomainError(f"no {p}-dimensional invariant subvarieties to grade")
        arity = len(vectors[0])
        if any(len(v) != arity for v in vectors):
            raise DomainError("grading vectors have inconsistent arity")
    multiplicity: dict[tuple[int, ...], int] = {}
    for v in vectors:
        multiplicity[v] = multiplicity.get(v, 0) + 1
    factors = sorted(multiplicity.items())
    return expand_inverse_product(factors, arity=arity, order=order)


# ---------------------------------------------------------------------------
# stock fans


def projective_fan(n: int) -> Fan:
    """Fan of n-dimensional projective space: the n standard basis rays plus
    their negated sum, with every proper subset of the rays as a cone.
    Dimension 0 is the point fan: no rays, only the implicit zero cone."""
    if n < 0:
        raise DomainError("projective fan needs dimension >= 0")
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    if n:
        rays.append(tuple([-1] * n))
    cones = []
    for size in range(1, n + 1):
        cones.extend(_subsets(n + 1, size))
    return Fan(n, tuple(rays), tuple(cones))


def affine_fan(n: int) -> Fan:
    """Fan of affine n-space: the positive orthant and all its faces."""
    if n < 1:
        raise DomainError("affine fan needs dimension >= 1")
    rays = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    cones = []
    for size in range(1, n + 1):
        cones.extend(_subsets(n, size))
    return Fan(n, tuple(rays), tuple(cones))


def _subsets(n: int, size: int) -> list[Cone]:
    from itertools import combinations

    return [tuple(c) for c in combinations(range(n), size)]


def product_fan(a: Fan, b: Fan) -> Fan:
    """Fan of the product variety: rays embed in the two factors of the sum
    lattice, and the cones are all sums of a cone from each side."""
    fan_validate(a)
    fan_validate(b)
    rays = [r + (0,) * b.dim for r in a.rays]
    rays += [(0,) * a.dim + r for r in b.rays]
    offset = len(a.rays)
    cones = []
    for ca in ((),) + a.cones:
        for cb in ((),) + b.cones:
            merged = ca + tuple(offset + i for i in cb)
            if merged:
                cones.append(merged)
    return Fan(a.dim + b.dim, tuple(rays), tuple(cones))


# ---------------------------------------------------------------------------
# JSON exchange format: {"dim": n, "rays": [[...]], "cones": [[...]]}


def fan_from_json(source: str | Mapping) -> Fan:
    if isinstance(source, str):
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ParseError(f"fan is not valid JSON: {exc}") from None
    else:
        data = source
    if not isinstance(data, Mapping):
        raise ParseError("fan JSON must be an object")
    missing = {"dim", "rays", "cones"} - set(data)
    if missing:
        raise ParseError(f"fan JSON missing keys: {sorted(missing)}")
    try:
        fan = Fan(
            int(data["dim"]),
            tuple(tuple(int(x) for x in ray) for ray in data["rays"]),
            tuple(tuple(int(i) for i in cone) for cone in data["cones"]),
        )
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed fan JSON: {exc}") from None
    fan_validate(fan)
    return fan


def fan_to_json(fan: Fan) -> dict:
    return {
        "dim": fan.dim,
        "rays": [list(r) for r in fan.rays],
        "cones": [list(c) for c in fan.cones],
    }
