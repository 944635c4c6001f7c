"""Named test bodies, grouped by dimension."""

from __future__ import annotations

from fractions import Fraction as F
from itertools import permutations

from illumination.body import UnconditionalBody


def perms(*coords) -> list[tuple[F, ...]]:
    return sorted(set(permutations([F(c) for c in coords])))


def units(n: int) -> list[tuple[int, ...]]:
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def pair_body(pairs, extra=()) -> UnconditionalBody:
    """Unit vectors of R^4 plus e_i + e_j for each listed pair (1-based)."""
    gens = units(4)
    for i, j in pairs:
        gens.append(tuple(1 if k in (i - 1, j - 1) else 0 for k in range(4)))
    return UnconditionalBody(gens + list(extra))


def subcube_body(n: int, present, extra=()) -> UnconditionalBody:
    """Generators 1 - e_i for the listed 1-based axes, plus extras."""
    gens = [tuple(0 if k == i - 1 else 1 for k in range(n)) for i in present]
    return UnconditionalBody(gens + list(extra))


B = UnconditionalBody

CUBE3 = B([(1, 1, 1)])
CROSS3 = B(units(3))
SLAB_CROSS = B([(1, 1, 0), (1, 0, 1)])
THIN_TWO = B([(1, 1, 0), (1, 0, 1), (0, F(3, 4), F(3, 4))])
THICK_TWO = B([(1, 1, F(1, 4)), (1, 0, 1)])
THREE_SQUARES = B([(1, 1, 0), (1, 0, 1), (0, 1, 1)])

R3 = {
    # no unit squares
    "cross": CROSS3,
    "cross-scaled": B([(2, 0, 0), (0, 1, 0), (0, 0, 3)]),
    "cross-bump": B(units(3) + [(F(2, 5), F(2, 5), F(2, 5))]),
    "thirds": B(perms(1, F(1, 3), F(1, 3))),
    "half-zero": B(perms(1, F(1, 2), 0)),
    "skew-cycle": B([(1, F(1, 4), 0), (0, 1, F(1, 4)), (F(1, 4), 0, 1)]),
    "uneven": B([(1, F(1, 2), 0), (0, 1, F(1, 5)), (0, 0, 1), (F(1, 3), F(1, 3), F(1, 2))]),
    # exactly one unit square
    "square-bipyramid": B([(1, 1, 0), (0, 0, 1)]),
    "square-tilt": B([(1, 1, F(1, 4)), (0, 0, 1)]),
    "square-side": B([(1, 1, 0), (0, F(1, 2), 1), (F(1, 2), 0, 1)]),
    "square-scaled": B([(3, 2, 0), (0, 0, 5)]),
    # exactly two unit squares
    "thick-two": THICK_TWO,
    "thick-half": B([(1, 1, F(1, 2)), (1, 0, 1)]),
    "thin-two": THIN_TWO,
    "thin-two-b": B([(1, 1, 0), (1, 0, 1), (0, F(2, 3), F(2, 3))]),
    "thick-mixed": B([(1, 1, F(1, 3)), (1, F(1, 3), 1)]),
    # three unit squares
    "three-squares": THREE_SQUARES,
    "cubelike-three": B(perms(1, 1, F(1, 2))),
    "three-squares-bump": B([(1, 1, 0), (1, 0, 1), (0, 1, 1), (F(2, 3), F(2, 3), F(2, 3))]),
    "three-scaled": B([(2, 3, 0), (2, 0, 1), (0, 3, 1)]),
    # affine cubes
    "cube": CUBE3,
    "slab-cross": SLAB_CROSS,
    "cross-slab": B([(1, 0, 1), (0, 1, 1)]),
}

R3_PARALLELEPIPEDS = {"cube", "slab-cross", "cross-slab"}

R4 = {
    # unit squares, by count
    "cross4": B(units(4)),
    "cubelike-half": B(perms(1, F(1, 2), F(1, 2), F(1, 2))),
    "thirds4": B(perms(1, F(1, 3), F(1, 3), 0)),
    "one-pair": pair_body([(1, 2)]),
    "one-pair-b": pair_body([(2, 4)], [(F(1, 2), 0, F(1, 2), 0)]),
    "two-overlap": pair_body([(1, 2), (2, 3)]),
    "two-disjoint": pair_body([(1, 2), (3, 4)]),
    "two-disjoint-b": pair_body([(1, 3), (2, 4)]),
    "triangle": pair_body([(1, 2), (1, 3), (2, 3)]),
    "path": pair_body([(1, 2), (1, 3), (3, 4)]),
    "star": pair_body([(1, 2), (1, 3), (1, 4)]),
    "paw": pair_body([(1, 2), (1, 3), (2, 3), (3, 4)]),
    "cycle-bulge": pair_body([(1, 3), (1, 4), (2, 3), (2, 4)], [(0, 0, F(3, 5), F(3, 5))]),
    "cycle-bulge-b": pair_body([(1, 3), (1, 4), (2, 3), (2, 4)], [(F(2, 3), F(2, 3), 0, 0)]),
    "five-pairs": pair_body([(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]),
    "five-pairs-b": pair_body([(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]),
    "all-pairs": B(perms(1, 1, 0, 0)),
    "all-pairs-bump": B(perms(1, 1, 0, 0) + [(F(3, 4), F(3, 4), F(3, 4), 0)]),
    # maximal unit subcubes, by count
    "four-subcubes": B(perms(1, 1, 1, 0)),
    "cubelike-one-half": B(perms(1, 1, 1, F(1, 2))),
    "three-subcubes": subcube_body(4, [1, 2, 3]),
    "three-subcubes-b": subcube_body(4, [1, 3, 4], [(F(1, 2), 1, F(1, 2), F(1, 2))]),
    "two-subcubes-thin": subcube_body(4, [3, 4], [(0, 0, F(3, 5), F(3, 5))]),
    "two-subcubes-thick": B([(1, 1, 1, F(1, 4)), (1, 1, 0, 1)]),
    "one-subcube": B([(1, 1, 1, 0), (0, 0, 0, 1)]),
    "one-subcube-b": B([(1, 1, 1, 0), (F(1, 2), F(1, 2), 0, 1), (0, F(1, 2), F(1, 2), 1)]),
    "one-subcube-scaled": B([(2, 2, 2, 0), (0, 0, 0, 3)]),
    # affine cubes
    "cube4": B([(1, 1, 1, 1)]),
    "double-cross": pair_body([(1, 3), (1, 4), (2, 3), (2, 4)]),
}

R4_PARALLELEPIPEDS = {"cube4", "double-cross"}


def r5_r6():
    """Bodies missing exactly k maximal subcubes, keyed by (n, k)."""
    out = {}
    for n in (5, 6):
        for k in (0, 1, 2, 3):
            extra = []
            if n - k == 2:
                # two present subcubes alone span an affine cube; break it
                extra = [tuple([1, 1] + [F(1, 2)] * (n - 2))]
            out[(n, k)] = subcube_body(n, range(1, n - k + 1), extra)
    return out


def one_subcube_body(n: int) -> UnconditionalBody:
    return UnconditionalBody([tuple([1] * (n - 1) + [0]), tuple([0] * (n - 1) + [1])])


def all_codim2_body(n: int) -> UnconditionalBody:
    return UnconditionalBody(perms(*([1] * (n - 2) + [0, 0])))


def cubelike_bodies():
    return {
        "R4 one half": UnconditionalBody(perms(1, 1, 1, F(1, 2))),
        "R4 three halves": UnconditionalBody(perms(1, F(1, 2), F(1, 2), F(1, 2))),
        "R5 one half": UnconditionalBody(perms(1, 1, 1, 1, F(1, 2))),
        "R5 three halves": UnconditionalBody(perms(1, 1, F(1, 2), F(1, 2), F(1, 2))),
    }


def square() -> UnconditionalBody:
    return UnconditionalBody([(1, 1)])


def diamond() -> UnconditionalBody:
    return UnconditionalBody([(1, 0), (0, 1)])


def octagon() -> UnconditionalBody:
    return UnconditionalBody([(1, F(2, 5)), (F(2, 5), 1)])

