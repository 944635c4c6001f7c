"""Combinatorial direction families built from sign patterns.

Directions are tuples of Fractions. The recursive family I^n(delta) lists one
direction per sign pattern, with a single coordinate of magnitude 1 and all
other coordinates of magnitude delta.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Sequence

from .body import Point, sign

SignPattern = tuple[int, ...]


def _check_delta(delta) -> Fraction:
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie strictly between 0 and 1, got {delta}")
    return delta


def _check_n(n: int, low: int) -> None:
    if n < low:
        raise ValueError(f"n must be at least {low}, got {n}")


def signs_of(x: Sequence) -> SignPattern:
    return tuple(sign(v) for v in x)


def build_Gn(n: int, delta) -> list[Point]:
    """Every direction with one coordinate +-1 and the others +-delta."""
    _check_n(n, 2)
    delta = _check_delta(delta)
    one = Fraction(1)
    out = []
    for i in range(n):
        for signs in product((1, -1), repeat=n):
            out.append(tuple(s * (one if j == i else delta) for j, s in enumerate(signs)))
    return out


@lru_cache(maxsize=None)
def _in_structure(n: int) -> tuple[tuple[SignPattern, int], ...]:
    """(sign pattern, index of the unit coordinate) for I^n, in recursion order."""
    level = ((( 1,  1), 0), ((-1, -1), 0), (( 1, -1), 1), ((-1,  1), 1))
    for m in range(2, n):
        first = tuple((s + (s[-1],), k) for s, k in level)
        second = tuple((s + (-s[-1],), m) for s, _ in level)
        level = first + second
    return level


def build_In(n: int, delta) -> list[Point]:
    """I^n(delta): 2^n directions, one per sign pattern, closed under negation."""
    _check_n(n, 2)
    delta = Fraction(delta)
    if not 0 < delta <= 1:
        raise ValueError(f"delta must lie in (0, 1], got {delta}")
    one = Fraction(1)
    return [
        tuple(s * (one if j == k else delta) for j, s in enumerate(signs))
        for signs, k in _in_structure(n)
    ]


def _mc_table(n: int) -> dict[SignPattern, int]:
    return {signs: k for signs, k in _in_structure(n)}


def mc(d: Sequence) -> int:
    """Index of the unique largest-magnitude coordinate.

    On a pure sign vector every coordinate ties; the index is then read off the
    direction of I^n with the same sign pattern.
    """
    mags = [abs(Fraction(v)) for v in d]
    top = max(mags)
    where = [i for i, v in enumerate(mags) if v == top]
    if len(where) == 1:
        return where[0]
    if all(v == top for v in mags) and top != 0 and len(d) >= 2:
        return _mc_table(len(d))[signs_of(d)]
    raise ValueError(f"largest coordinate of {tuple(d)} is not unique")


def special_pair(n: int, delta) -> tuple[Point, Point]:
    """The directions +-(delta, ..., delta, -delta, 1)."""
    delta = Fraction(delta)
    d = tuple([delta] * (n - 2) + [-delta, Fraction(1)])
    return d, tuple(-v for v in d)


def build_In_minus2(n: int, delta) -> list[Point]:
    _check_n(n, 3)
    drop = set(special_pair(n, delta))
    return [d for d in build_In(n, delta) if d not in drop]


def build_hatI(n: int, anchors: Iterable[int], delta) -> list[Point]:
    """I^n(delta) with every unit coordinate outside the anchor block moved to its first axis.

    Anchors are 0-based axis indices and must be the last two or last three axes.
    """
    anchors = tuple(sorted(anchors))
    if anchors not in (tuple(range(n - 2, n)), tuple(range(n - 3, n))) or anchors[0] < 0:
        raise ValueError(f"invalid anchor set {anchors} for n={n}")
    low = anchors[0]
    delta = Fraction(delta)
    one = Fraction(1)
    out = []
    for signs, k in _in_structure(n):
        if k < low:
            k = low
        out.append(tuple(s * (one if j == k else delta) for j, s in enumerate(signs)))
    return out


def _with_plus_count(n: int, counts: Iterable[int]) -> list[SignPattern]:
    out = []
    for c in counts:
        for plus in combinations(range(n), c):
            out.append(tuple(1 if i in plus else -1 for i in range(n)))
    return out


@lru_cache(maxsize=None)
def _jn(n: int) -> tuple[SignPattern, ...]:
    if n % 2 == 0:
        return tuple(_with_plus_count(n, range(2, n - 1, 2)))
    if n == 3:
        return ((1, 1, 1), (-1, -1, -1))
    half = (n - 1) // 2
    start = 2 if half % 2 == 1 else 1
    first = _with_plus_count(n, range(start, half, 2))
    return tuple(first + [tuple(-v for v in s) for s in first])


def build_Jn(n: int) -> list[SignPattern]:
    _check_n(n, 3)
    return list(_jn(n))


def in_Jn(pattern: Sequence[int]) -> bool:
    return tuple(pattern) in set(_jn(len(pattern)))


def complete_two_zeros(n: int, p: Sequence[int]) -> SignPattern:
    """Fill the two zero slots of p so the result lies in J_n (first valid fill wins)."""
    _check_n(n, 3)
    p = tuple(p)
    if len(p) != n:
        raise ValueError(f"pattern has length {len(p)}, expected {n}")
    zeros = [i for i, v in enumerate(p) if v == 0]
    if len(zeros) != 2:
        raise ValueError(f"pattern must have exactly two zero entries, has {len(zeros)}")
    members = set(_jn(n))
    for a, b in ((-1, -1), (-1, 1), (1, -1), (1, 1)):
        d = list(p)
        d[zeros[0]], d[zeros[1]] = a, b
        if tuple(d) in members:
            return tuple(d)
    raise ValueError(f"no completion of {p} lies in J_{n}")


def deep_illuminates(d: Sequence, x: Sequence) -> bool:
    """Signs oppose on the support of x and a unit-magnitude coordinate of d sits in that support."""
    if not any(x):
        raise ValueError("x must be nonzero")
    support = [i for i, v in enumerate(x) if v != 0]
    if any(sign(x[i]) != -sign(d[i]) for i in support):
        return False
    top = max(abs(Fraction(v)) for v in d)
    return top == 1 and any(abs(Fraction(d[i])) == 1 for i in support)
