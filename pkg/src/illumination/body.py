"""Exact model of 1-unconditional polytopes.

A body is stored by nonnegative generators; the polytope itself is the convex
hull of every coordinate reflection of every generator. Its intersection with
the nonnegative orthant is the downward closure of the generator hull, which
turns membership, gauges and suprema into small linear programs, and gives an
H-form whose rows are all nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import product
from math import lcm
from typing import Iterable, Sequence

from .dd import extreme_rays
from .lp import linprog

Point = tuple[Fraction, ...]


def as_point(coords: Iterable) -> Point:
    return tuple(Fraction(c) for c in coords)


def unit(n: int, i: int) -> Point:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def ones(n: int) -> Point:
    return tuple(Fraction(1) for _ in range(n))


def ones_minus(n: int, *axes: int) -> Point:
    return tuple(Fraction(0 if j in axes else 1) for j in range(n))


def zero_set(x: Sequence[Fraction]) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(x) if v == 0)


def sign(v: Fraction | int) -> int:
    return (v > 0) - (v < 0)


def reflections(x: Sequence[Fraction]) -> list[Point]:
    """All distinct coordinate reflections of x, in a fixed order."""
    support = [i for i, v in enumerate(x) if v != 0]
    out = []
    for signs in product((1, -1), repeat=len(support)):
        y = list(x)
        for i, s in zip(support, signs):
            y[i] = s * abs(x[i])
        out.append(tuple(y))
    return out


class BodyError(ValueError):
    pass


@dataclass(frozen=True)
class FacetSystem:
    """Rows a >= 0 with body = {y : sum_i a_i |y_i| <= 1 for every row}."""

    rows: tuple[Point, ...]

    def value(self, p: Sequence[Fraction]) -> Fraction:
        return max(sum(a * abs(v) for a, v in zip(row, p)) for row in self.rows)

    def active(self, x: Sequence[Fraction]) -> list[int]:
        return [
            k for k, row in enumerate(self.rows)
            if sum(a * abs(v) for a, v in zip(row, x)) == 1
        ]

    def facet_count(self) -> int:
        """Number of facets of the full symmetric polytope."""
        return sum(2 ** sum(1 for a in row if a) for row in self.rows)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(eq=False)
class UnconditionalBody:
    dim: int
    generators: tuple[Point, ...]
    _facets: FacetSystem | None = field(default=None, repr=False)
    _extreme: tuple[Point, ...] | None = field(default=None, repr=False)

    def __init__(self, generators: Iterable[Iterable], dim: int | None = None):
        gens = [as_point(g) for g in generators]
        if not gens and dim is None:
            raise BodyError("a body needs at least one generator")
        n = dim if dim is not None else len(gens[0])
        if n < 2:
            raise BodyError(f"dimension must be at least 2, got {n}")
        for g in gens:
            if len(g) != n:
                raise BodyError(f"generator {g} does not have dimension {n}")
            if any(v < 0 for v in g):
                raise BodyError(f"generator {g} has a negative coordinate")
        seen: set[Point] = set()
        unique = []
        for g in gens:
            if any(g) and g not in seen:
                seen.add(g)
                unique.append(g)
        for i in range(n):
            if not any(g[i] > 0 for g in unique):
                raise BodyError(
                    f"body is not full-dimensional: no generator reaches axis {i + 1}"
                )
        self.dim = n
        self.generators = tuple(unique)
        self._facets = None
        self._extreme = None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, UnconditionalBody)
            and self.dim == other.dim
            and set(self.generators) == set(other.generators)
        )

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self.generators)))

    def permuted(self, perm: Sequence[int]) -> "UnconditionalBody":
        """Body whose coordinate k is coordinate perm[k] of this body."""
        return UnconditionalBody(
            [tuple(g[perm[k]] for k in range(self.dim)) for g in self.generators]
        )

    def scaled(self, factors: Sequence[Fraction]) -> "UnconditionalBody":
        return UnconditionalBody(
            [tuple(v * f for v, f in zip(g, factors)) for g in self.generators]
        )


def _check_dim(body: UnconditionalBody, p: Sequence) -> Point:
    if len(p) != body.dim:
        raise BodyError(f"point has dimension {len(p)}, body has {body.dim}")
    return as_point(p)


def _gauge_over(gens: Sequence[Point], p: Point) -> Fraction | None:
    """min sum(mu) with sum(mu_g g) >= |p|; None when no generator combination dominates p."""
    target = [abs(v) for v in p]
    if not any(target):
        return Fraction(0)
    cols = list(gens)
    A = [[g[i] for g in cols] for i in range(len(p))]
    res = linprog([1] * len(cols), A_ge=A, b_ge=target)
    if not res.optimal:
        return None
    return res.value


def gauge(body: UnconditionalBody, p: Sequence) -> Fraction:
    """Exact Minkowski gauge of p, computed by linear programming over the generators."""
    p = _check_dim(body, p)
    value = _gauge_over(list(body.generators), p)
    assert value is not None  # full-dimensional bodies always dominate
    return value


def locate(body: UnconditionalBody, p: Sequence) -> str:
    g = gauge(body, p)
    if g < 1:
        return "interior"
    if g == 1:
        return "boundary"
    return "exterior"


def _rank(vectors: list[list[Fraction]]) -> int:
    rows = [list(v) for v in vectors if any(v)]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pr = rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / pr[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], pr)]
        rank += 1
    return rank


def _is_facet(row: Point, gens: Sequence[Point], n: int) -> bool:
    tight = [g for g in gens if sum(a * v for a, v in zip(row, g)) == 1]
    if not tight:
        return False
    base = tight[0]
    vectors = [[a - b for a, b in zip(g, base)] for g in tight[1:]]
    for i in range(n):
        if row[i] == 0 and any(g[i] > 0 for g in tight):
            vectors.append([Fraction(1 if j == i else 0) for j in range(n)])
    return _rank(vectors) == n - 1


def facets(body: UnconditionalBody) -> FacetSystem:
    """Irredundant nonnegative H-form, by double description on the orthant part."""
    if body._facets is not None:
        return body._facets
    n = body.dim
    gens = extreme_orbits(body)
    # cone variables (a_1..a_n, s) with a >= 0, s >= 0 and s - a.g >= 0
    rows = []
    for g in gens:
        den = reduce(lcm, (v.denominator for v in g), 1)
        rows.append([-int(v * den) for v in g] + [den])
    candidates: list[Point] = []
    for ray in extreme_rays(rows, n + 1):
        s = ray[-1]
        if s == 0 or not any(ray[:-1]):
            continue
        a = tuple(Fraction(v, s) for v in ray[:-1])
        if _is_facet(a, gens, n):
            candidates.append(a)
    result = FacetSystem(tuple(sorted(set(candidates))))
    body._facets = result
    return result


def extreme_orbits(body: UnconditionalBody) -> list[Point]:
    """One nonnegative representative per reflection orbit of the vertices, sorted."""
    if body._extreme is not None:
        return list(body._extreme)
    gens = list(body.generators)
    keep = []
    for idx, g in enumerate(gens):
        others = gens[:idx] + gens[idx + 1:]
        if others:
            value = _gauge_over(others, g)
            if value is not None and value <= 1:
                continue
        keep.append(g)
    body._extreme = tuple(sorted(keep))
    return list(body._extreme)


def extreme_points(body: UnconditionalBody) -> list[Point]:
    return [x for v in extreme_orbits(body) for x in reflections(v)]


def normalize(body: UnconditionalBody) -> tuple[UnconditionalBody, tuple[Fraction, ...]]:
    """Rescale axes so that every unit vector lies on the boundary.

    The returned factors multiply the coordinates; factor i equals the gauge of
    e_i in the input body.
    """
    n = body.dim
    scale = tuple(gauge(body, unit(n, i)) for i in range(n))
    if all(s == 1 for s in scale):
        return body, scale
    return body.scaled(scale), scale


def is_normalized(body: UnconditionalBody) -> bool:
    return all(gauge(body, unit(body.dim, i)) == 1 for i in range(body.dim))


def project_off_axis(body: UnconditionalBody, i: int) -> UnconditionalBody:
    """Coordinate projection deleting axis i (equal to the section x_i = 0)."""
    if body.dim < 3:
        raise BodyError("projection needs dimension at least 3")
    if not 0 <= i < body.dim:
        raise BodyError(f"axis {i} out of range")
    dropped = [g[:i] + g[i + 1:] for g in body.generators]
    dropped = [g for g in dict.fromkeys(dropped) if any(g)]
    pruned = [
        g for g in dropped
        if not any(h != g and all(a <= b for a, b in zip(g, h)) for h in dropped)
    ]
    return UnconditionalBody(pruned)


def is_parallelepiped(body: UnconditionalBody) -> bool:
    """A symmetric polytope is a parallelepiped exactly when it has 2n facets."""
    return facets(body).facet_count() == 2 * body.dim


def ray_sup(body: UnconditionalBody, base: Sequence, direction: Sequence) -> Fraction:
    """sup{t >= 0 : |base| + t*direction in body} for a nonnegative direction."""
    base = _check_dim(body, base)
    direction = _check_dim(body, direction)
    if any(v < 0 for v in direction) or not any(direction):
        raise BodyError("direction must be nonnegative and nonzero")
    gens = list(body.generators)
    n = body.dim
    # variables: mu_g (one per generator) then t
    A_ge = [[g[i] for g in gens] + [-direction[i]] for i in range(n)]
    b_ge = [abs(v) for v in base]
    A_ub = [[Fraction(1)] * len(gens) + [Fraction(0)]]
    res = linprog(
        [0] * len(gens) + [1], A_ub=A_ub, b_ub=[1], A_ge=A_ge, b_ge=b_ge,
        maximize=True,
    )
    if not res.optimal:
        raise BodyError(f"base point {base} lies outside the body")
    return res.value


def axis_sup(body: UnconditionalBody, base: Sequence, j: int) -> Fraction:
    """sup{t >= 0 : base + t e_j in body}; base must lie in the body with base_j = 0."""
    base = _check_dim(body, base)
    if base[j] != 0:
        raise BodyError("base point must have a zero coordinate on the probed axis")
    return ray_sup(body, base, unit(body.dim, j))
