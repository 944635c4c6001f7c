"""Exact illumination tests, whole-set certificates and a brute-force minimum search."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .body import (
    BodyError,
    Point,
    UnconditionalBody,
    as_point,
    extreme_orbits,
    facets,
    reflections,
    sign,
)


def derivatives(rows: Sequence[Point], x: Sequence[Fraction], d: Sequence[Fraction]) -> list[Fraction]:
    """One-sided derivative along d of each row functional y -> sum a_i |y_i| at x."""
    out = []
    for a in rows:
        total = Fraction(0)
        for ai, xi, di in zip(a, x, d):
            if ai:
                total += ai * (sign(xi) * di if xi else abs(di))
        out.append(total)
    return out


def active_rows(body: UnconditionalBody, x: Sequence[Fraction]) -> list[Point]:
    system = facets(body)
    return [system.rows[k] for k in system.active(x)]


def illuminates(body: UnconditionalBody, x: Sequence, d: Sequence) -> bool:
    """True iff x + eps*d is interior for small eps > 0; x must be a boundary point."""
    x, d = as_point(x), as_point(d)
    if len(x) != body.dim or len(d) != body.dim:
        raise BodyError("dimension mismatch")
    if not any(d):
        raise ValueError("direction must be nonzero")
    active = active_rows(body, x)
    if facets(body).value(x) != 1:
        raise BodyError(f"{x} is not a boundary point")
    return all(v < 0 for v in derivatives(active, x, d))


@dataclass(frozen=True)
class PointCover:
    point: Point
    direction_index: int
    derivatives: tuple[Fraction, ...]

    @property
    def margin(self) -> Fraction:
        return max(self.derivatives)


@dataclass
class IlluminationCertificate:
    ok: bool
    covers: list[PointCover] = field(default_factory=list)
    witness: Point | None = None
    size: int = 0
    pair_count: int = 0

    @property
    def worst_margin(self) -> Fraction | None:
        """The derivative closest to zero over the whole certificate."""
        if not self.covers:
            return None
        return max(c.margin for c in self.covers)

    def __bool__(self) -> bool:
        return self.ok


def count_pairs(directions: Sequence[Point]) -> int:
    present = set(directions)
    return sum(1 for d in present if tuple(-v for v in d) in present) // 2


def verify_set(body: UnconditionalBody, directions: Sequence[Sequence]) -> IlluminationCertificate:
    """Check every reflection of every extreme orbit; stop at the first uncovered point."""
    dirs = [as_point(d) for d in directions]
    if not dirs:
        raise ValueError("direction set is empty")
    system = facets(body)
    covers = []
    for v in extreme_orbits(body):
        for x in reflections(v):
            active = [system.rows[k] for k in system.active(x)]
            found = None
            for idx, d in enumerate(dirs):
                vals = derivatives(active, x, d)
                if all(t < 0 for t in vals):
                    found = PointCover(x, idx, tuple(vals))
                    break
            if found is None:
                return IlluminationCertificate(
                    False, covers, witness=x, size=len(dirs), pair_count=count_pairs(dirs)
                )
            covers.append(found)
    return IlluminationCertificate(True, covers, size=len(dirs), pair_count=count_pairs(dirs))


def coverage_masks(body: UnconditionalBody, grid: Sequence[Point]) -> tuple[list[Point], list[int]]:
    """For each extreme point, the bitmask of grid directions illuminating it."""
    system = facets(body)
    points = [x for v in extreme_orbits(body) for x in reflections(v)]
    masks = []
    for x in points:
        active = [system.rows[k] for k in system.active(x)]
        m = 0
        for idx, d in enumerate(grid):
            if all(t < 0 for t in derivatives(active, x, d)):
                m |= 1 << idx
        masks.append(m)
    return points, masks


def _search(masks: list[int], k: int, chosen: int, covered: int, full: int) -> int | None:
    if covered == full:
        return chosen
    if k == 0:
        return None
    # branch on the uncovered point with the fewest options
    best = None
    for i, m in enumerate(masks):
        if not covered >> i & 1:
            if best is None or bin(m).count("1") < bin(masks[best]).count("1"):
                best = i
    options = masks[best]
    idx = 0
    while options:
        if options & 1:
            new_cov = covered
            for i, m in enumerate(masks):
                if m >> idx & 1:
                    new_cov |= 1 << i
            found = _search(masks, k - 1, chosen | 1 << idx, new_cov, full)
            if found is not None:
                return found
        options >>= 1
        idx += 1
    return None


def brute_min_illumination(
    body: UnconditionalBody, grid: Sequence[Sequence], cap: int
) -> tuple[int | None, list[Point] | None]:
    """Smallest k <= cap such that some k directions from grid illuminate every extreme point."""
    grid = [as_point(d) for d in grid]
    points, masks = coverage_masks(body, grid)
    for x, m in zip(points, masks):
        if m == 0:
            raise ValueError(f"grid does not illuminate the extreme point {x}")
    full = (1 << len(points)) - 1
    for k in range(1, cap + 1):
        chosen = _search(masks, k, 0, 0, full)
        if chosen is not None:
            return k, [d for i, d in enumerate(grid) if chosen >> i & 1]
    return None, None
