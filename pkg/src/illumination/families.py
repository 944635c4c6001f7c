"""Explicit direction families, written in the coordinates where each case is stated.

Every constructor is a pure function of the dimension and the small parameters
and returns an ordered list of rational directions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .body import Point, sign
from .signs import (
    _in_structure,
    build_hatI,
    build_In_minus2,
    build_Jn,
    mc,
    special_pair,
)

F = Fraction


def _pm(*dirs) -> list[Point]:
    """Each direction followed by its negation."""
    out = []
    for d in dirs:
        d = tuple(F(v) for v in d)
        out.append(d)
        out.append(tuple(-v for v in d))
    return out


def sign_grid(n: int) -> list[Point]:
    """All 3^n - 1 nonzero vectors with entries in {-1, 0, 1}."""
    return [
        tuple(F(v) for v in s) for s in product((1, 0, -1), repeat=n) if any(s)
    ]


def cube_vertices(n: int) -> list[Point]:
    return [tuple(F(v) for v in s) for s in product((1, -1), repeat=n)]


def f_planar_three(delta) -> list[Point]:
    d = F(delta)
    return _pm((1, d, 0), (-d, 1, 0), (0, 0, 1))


def f_all_subcubes(n: int, delta) -> list[Point]:
    return build_In_minus2(n, delta)


def f_all_but_one(n: int, delta) -> list[Point]:
    d = F(delta)
    return [v + (s * d,) for v in build_In_minus2(n - 1, d) for s in (1, -1)]


def f_missing_block(n: int, k: int, delta) -> list[Point]:
    """The last k axes lack their maximal subcubes (2 <= k <= n - 3)."""
    d = F(delta)
    head = build_In_minus2(n - k, d)
    out = [v + tuple(s * d for s in signs) for v in head for signs in product((1, -1), repeat=k)]
    plus, minus = special_pair(n - k, d)
    if k == 2:
        zero = (F(0), F(0))
        out += [plus + zero, minus + zero]
    else:
        for base in (plus, minus):
            out += [base + tuple(d * s for s in j) for j in build_Jn(k)]
    return out


def f_one_subcube(n: int, delta, eta, delta_t) -> list[Point]:
    """Only the last axis has its maximal subcube."""
    d, e, dt = F(delta), F(eta), F(delta_t)
    one, zero = F(1), F(0)
    out = []
    for signs in product((1, -1), repeat=n - 3):
        tail = tuple(s * d for s in signs) + (zero,)
        for s in (1, -1):
            out.append((s * one, s * e) + tail)
            out.append((-s * e, s * one) + tail)
    for j in build_Jn(n - 1):
        for s in (1, -1):
            out.append(tuple(dt * v for v in j) + (s * one,))
    return out


def _low_family(m: int) -> list[tuple[tuple[int, ...], int]]:
    """Sign patterns of I^m(1) with their unit index; I^1 is taken as {+1, -1}."""
    if m == 1:
        return [((1,), 0), ((-1,), 0)]
    return list(_in_structure(m))


def f_two_subcubes_thick(n: int, delta) -> list[Point]:
    """Last two axes carry maximal subcubes and the last one is not extreme."""
    d = F(delta)
    one, zero = F(1), F(0)
    out = []
    low = _low_family(n - 2)
    for signs, k in low:
        head = tuple(d * s for s in signs)
        for t in (1, -1):
            out.append(head + (d * signs[k], t * one))
    for signs, k in low:
        head = tuple(d * s for s in signs)
        out.append(head + (-signs[k] * one, zero))
    if n > 4:
        for j in build_Jn(n - 2):
            k = mc(j)
            head = tuple(d * s for s in j)
            for t in (1, -1):
                out.append(head + (-d * j[k], t * one))
    return out


def f_two_subcubes_thin(n: int, eps, delta) -> list[Point]:
    """Last two axes carry maximal subcubes, both extreme."""
    e, d = F(eps), F(delta)
    one = F(1)
    top = tuple([e] * (n - 2) + [one, one])
    drop_a = tuple([d] * (n - 2) + [one, d])
    drop_b = tuple([d] * (n - 2) + [-d, one])
    drop = {drop_a, drop_b, tuple(-v for v in drop_a), tuple(-v for v in drop_b)}
    rest = [v for v in build_hatI(n, (n - 2, n - 1), d) if v not in drop]
    return _pm(top) + rest


def f_all_codim2(n: int, delta, zeta) -> list[Point]:
    """Every (n-2)-subcube present and no (n-1)-subcube present."""
    d, z = F(delta), F(zeta)
    base = build_hatI(n, (n - 3, n - 2, n - 1), d)
    plus, minus = special_pair(n, d)
    refs = [tuple(sign(v) for v in plus), tuple(sign(v) for v in minus)]
    out = []
    for v in base:
        if v in (plus, minus):
            continue
        pattern = tuple(sign(x) for x in v)
        replaced = None
        for ref in refs:
            diff = [i for i in range(n) if pattern[i] != ref[i]]
            if len(diff) == 1:
                i = diff[0]
                replaced = v[:i] + (pattern[i] * z,) + v[i + 1:]
                break
        out.append(replaced if replaced is not None else v)
    return out


def f_r4_none_or_five(delta, eta, zeta) -> list[Point]:
    d, e, z = F(delta), F(eta), F(zeta)
    return _pm(
        (1, d, e, 0), (d, -1, -e, 0), (d, -e, 1, z), (-d, -e, 1, z),
        (0, e, d, 1), (0, -e, -d, 1), (0, 1, -d, e),
    )


def f_r4_one_or_two(delta, eta) -> list[Point]:
    d, e = F(delta), F(eta)
    return _pm(
        (1, d, e, 0), (d, -1, e, 0), (-e, d, 1, 0), (e, d, -1, 0),
        (-e, 0, d, 1), (-e, 0, d, -1), (1, 0, 1, 0),
    )


def f_r4_disjoint(delta) -> list[Point]:
    d = F(delta)
    return _pm((1, d, 0, 0), (-d, 1, 0, 0), (0, 0, 1, d), (0, 0, -d, 1))


def f_r4_three_or_four(delta, eta) -> list[Point]:
    d, e = F(delta), F(eta)
    return _pm(
        (1, d, e, 0), (d, -1, -e, 0), (d, -e, 1, 0), (d, e, -1, 0),
        (0, e, d, 1), (0, -e, -d, 1), (0, 1, -1, 0),
    )


def f_r4_star(delta, eta) -> list[Point]:
    d, e = F(delta), F(eta)
    return _pm(
        (e, 1, d, 0), (-e, 1, d, 0), (-e, 1, -d, 0),
        (e, e, 1, d), (-e, -e, 1, d), (e, e, -d, 1), (-e, -e, -d, 1),
    )


def f_r4_cycle(delta, eta) -> list[Point]:
    d, e = F(delta), F(eta)
    return _pm(
        (1, -e, -d, -d), (-e, 1, -d, -d),
        (d, 0, 1, -e), (d, 0, -e, 1), (0, d, 1, -e), (0, d, -e, 1),
    )


def lift(sub: list[Point], axis: int, scale) -> list[Point]:
    """(scale * d, +1) and (scale * d, -1) with the new coordinate inserted at axis."""
    s = F(scale)
    out = []
    for d in sub:
        for t in (1, -1):
            v = [s * x for x in d]
            v.insert(axis, F(t))
            out.append(tuple(v))
    return out

