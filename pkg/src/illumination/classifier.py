"""Case selection: which unit subcubes a normalized body contains, and where to put its axes.

Every predicate is an exact gauge comparison. Case ids use the labels of the
direction families they lead to (for example "P4.6/Case2").
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Callable, Sequence

from .body import (
    UnconditionalBody,
    axis_sup,
    extreme_orbits,
    gauge,
    is_normalized,
    is_parallelepiped,
    ones,
    ones_minus,
    unit,
)

Pair = frozenset[int]

CASE_IDS = (
    "CUBE", "P3.2", "P3.3", "P4.1", "P4.2", "P4.4", "P4.5", "P4.6/Case1",
    "P4.6/Case2", "P4.8", "P6.2", "P6.3", "P6.4(i)", "P6.4(ii)", "P6.5/Case1",
    "P6.5/Case2", "P6.5/Case3", "P6.6", "P6.7/Case1", "P6.7/Case2",
    "CUBELIKE", "FALLBACK",
)


class ParamEnv:
    """Lazily computed named scalars of one body, each cached after its first LP."""

    def __init__(self, body: UnconditionalBody):
        self.body = body
        self.values: dict[str, Fraction] = {}

    def _get(self, key: str, compute: Callable[[], Fraction]) -> Fraction:
        if key not in self.values:
            self.values[key] = compute()
        return self.values[key]

    def gauge_of(self, point: Sequence[Fraction]) -> Fraction:
        key = "gauge" + str(tuple(str(v) for v in point))
        return self._get(key, lambda: gauge(self.body, point))

    def theta(self, j: int) -> Fraction:
        """Inverse gauge of 1 - e_j."""
        n = self.body.dim
        return self._get(f"theta_{j}", lambda: 1 / gauge(self.body, ones_minus(n, j)))

    def gamma(self) -> Fraction:
        return self._get("gamma", lambda: 1 / gauge(self.body, ones(self.body.dim)))

    def theta_pair(self, i: int, j: int) -> Fraction:
        i, j = min(i, j), max(i, j)
        n = self.body.dim
        point = tuple(a + b for a, b in zip(unit(n, i), unit(n, j)))
        return self._get(f"theta_{i},{j}", lambda: 1 / gauge(self.body, point))

    def a(self, i: int, j: int) -> Fraction:
        """sup{t : e_i + t e_j in body}."""
        n = self.body.dim
        return self._get(f"a_{i},{j}", lambda: axis_sup(self.body, unit(n, i), j))

    def alpha_subcube(self, j: int) -> Fraction:
        """sup{t : 1 - e_j + t e_j in body}, the thickness beyond a maximal subcube."""
        n = self.body.dim
        return self._get(
            f"alpha_sub_{j}", lambda: axis_sup(self.body, ones_minus(n, j), j)
        )

    def alpha_w(self, j: int, top: int) -> Fraction:
        """sup{t : sum of e_i over i outside {j, top}, plus t e_top, in body}."""
        n = self.body.dim
        base = ones_minus(n, j, top)
        return self._get(f"alpha_w_{j},{top}", lambda: axis_sup(self.body, base, top))

    def as_dict(self) -> dict[str, Fraction]:
        return {k: v for k, v in sorted(self.values.items()) if not k.startswith("gauge")}


@dataclass
class ClassificationReport:
    n: int
    normalized: bool
    is_parallelepiped: bool
    cubelike: bool
    missing_axes: tuple[int, ...]
    pair_matrix: dict[Pair, bool]
    all_n2_subcubes: bool
    case_id: str = ""
    permutation: tuple[int, ...] = ()
    candidates: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.missing_axes)

    @property
    def pairs(self) -> set[Pair]:
        return {p for p, present in self.pair_matrix.items() if present}


def is_cubelike(body: UnconditionalBody) -> bool:
    return all(all(v > 0 for v in x) for x in extreme_orbits(body))


def _contains(body: UnconditionalBody, point) -> bool:
    return gauge(body, point) <= 1


def subcube_profile(body: UnconditionalBody) -> ClassificationReport:
    if not is_normalized(body):
        raise ValueError("subcube_profile needs a normalized body")
    n = body.dim
    missing = tuple(i for i in range(n) if not _contains(body, ones_minus(n, i)))
    pair_matrix: dict[Pair, bool] = {}
    if n <= 4:
        for i, j in combinations(range(n), 2):
            point = tuple(a + b for a, b in zip(unit(n, i), unit(n, j)))
            pair_matrix[frozenset((i, j))] = _contains(body, point)
    all_n2 = n >= 3 and all(
        _contains(body, ones_minus(n, i, j)) for i, j in combinations(range(n), 2)
    )
    return ClassificationReport(
        n=n,
        normalized=True,
        is_parallelepiped=is_parallelepiped(body),
        cubelike=is_cubelike(body),
        missing_axes=missing,
        pair_matrix=pair_matrix,
        all_n2_subcubes=all_n2,
    )


def structural_params(body: UnconditionalBody, report: ClassificationReport) -> ParamEnv:
    """The scalars the dispatcher compares; case-specific ones are filled in later."""
    env = ParamEnv(body)
    n = body.dim
    for j in report.missing_axes:
        env.theta(j)
    if n == 3 and not report.is_parallelepiped and report.k == 3:
        for i, j in permutations(range(3), 2):
            env.a(i, j)
    return env


def _apply(perm: Sequence[int], pairs: set[Pair]) -> set[Pair]:
    """Pairs expressed in new coordinates when new axis k is old axis perm[k]."""
    inv = {old: new for new, old in enumerate(perm)}
    return {frozenset(inv[i] for i in p) for p in pairs}


def _pattern_perms(n: int, pairs: set[Pair], target: set[Pair]) -> list[tuple[int, ...]]:
    return [perm for perm in permutations(range(n)) if _apply(perm, pairs) == target]


def _pairs(*items: tuple[int, int]) -> set[Pair]:
    return {frozenset(p) for p in items}


def _subcube_case(report: ClassificationReport, env: ParamEnv) -> tuple[str, list] | None:
    n, k = report.n, report.k
    missing = list(report.missing_axes)
    present = [i for i in range(n) if i not in missing]
    if k == 0:
        return "P4.1", [tuple(range(n))]
    if k == n - 2 and n >= 3:
        alphas = {j: env.alpha_subcube(j) for j in present}
        if any(alphas[j] > 0 for j in present):
            perms = []
            for last in present:
                if alphas[last] > 0:
                    other = [j for j in present if j != last]
                    perms.append(tuple(missing + other + [last]))
            return "P4.6/Case1", sorted(perms)
        return "P4.6/Case2", sorted(
            [tuple(missing + present), tuple(missing + present[::-1])]
        )
    if k == 1 and n >= 4:
        return "P4.2", [tuple(present + missing)]
    if 2 <= k <= n - 3:
        return "P4.4", [tuple(present + missing)]
    if k == n - 1 and n >= 4:
        top = present[0]
        alphas = {j: env.alpha_w(j, top) for j in missing}
        order = sorted(missing, key=lambda j: (-alphas[j], j))
        return "P4.5", [tuple(order + [top])]
    return None


def _dim3_case(report: ClassificationReport, env: ParamEnv) -> tuple[str, list]:
    pairs = report.pairs
    if not pairs:
        best = max(env.a(i, j) for i, j in permutations(range(3), 2))
        perms = [
            perm for perm in permutations(range(3))
            if max(env.a(perm[0], perm[1]), env.a(perm[1], perm[0])) == best
        ]
        return "P3.2", perms
    # exactly one pair: put it on axes 1, 2 with the larger sup first
    perms = []
    for perm in _pattern_perms(3, pairs, _pairs((0, 1))):
        if env.a(perm[0], perm[2]) >= env.a(perm[1], perm[2]):
            perms.append(perm)
    return "P3.3", perms


def _dim4_case(report: ClassificationReport, env: ParamEnv) -> tuple[str, list] | None:
    pairs = report.pairs
    count = len(pairs)
    if count == 0:
        theta0 = max(env.theta_pair(i, j) for i, j in combinations(range(4), 2))
        level = (1 + theta0) / 2
        body = env.body

        def alpha(i: int, j: int) -> Fraction:
            return env._get(
                f"alpha_{i},{j}", lambda: axis_sup(body, tuple(level * v for v in unit(4, i)), j)
            )

        best = max(alpha(i, j) for i, j in permutations(range(4), 2))
        perms = [
            perm for perm in permutations(range(4))
            if max(alpha(perm[0], perm[1]), alpha(perm[1], perm[0])) == best
        ]
        return "P6.2", perms
    if count == 1:
        return "P6.3", _pattern_perms(4, pairs, _pairs((0, 1)))
    if count == 2:
        a, b = sorted(pairs, key=sorted)
        if a & b:
            return "P6.4(i)", _pattern_perms(4, pairs, _pairs((0, 1), (1, 2)))
        return "P6.4(ii)", _pattern_perms(4, pairs, _pairs((0, 1), (2, 3)))
    if count == 3:
        for case, target in (
            ("P6.5/Case1", _pairs((0, 1), (0, 2), (1, 2))),
            ("P6.5/Case2", _pairs((0, 1), (0, 2), (2, 3))),
            ("P6.5/Case3", _pairs((0, 1), (0, 2), (0, 3))),
        ):
            perms = _pattern_perms(4, pairs, target)
            if perms:
                return case, perms
    if count == 4:
        perms = _pattern_perms(4, pairs, _pairs((0, 1), (0, 2), (1, 2), (2, 3)))
        if perms:
            return "P6.7/Case1", perms
        perms = [
            perm for perm in _pattern_perms(4, pairs, _pairs((0, 2), (0, 3), (1, 2), (1, 3)))
            if env.theta_pair(perm[2], perm[3]) >= env.theta_pair(perm[0], perm[1])
        ]
        return "P6.7/Case2", perms
    if count == 5:
        return "P6.6", _pattern_perms(4, pairs, _pairs((0, 1), (0, 2), (1, 2), (1, 3), (2, 3)))
    return None


def choose_case(report: ClassificationReport, env: ParamEnv) -> tuple[str, tuple[int, ...]]:
    """Pick the case and the axis relabeling (new axis k is old axis perm[k])."""
    n = report.n
    identity = tuple(range(n))
    found: tuple[str, list] | None
    if report.is_parallelepiped:
        found = ("CUBE", [identity])
    elif n == 2:
        found = ("FALLBACK", [identity])
    else:
        found = _subcube_case(report, env)
        if found is None and n >= 4 and report.k == n and report.all_n2_subcubes:
            found = ("P4.8", [identity])
        if found is None and n == 3:
            found = _dim3_case(report, env)
        if found is None and n == 4:
            found = _dim4_case(report, env)
        if found is None and report.cubelike:
            found = ("CUBELIKE", [identity])
        if found is None:
            found = ("FALLBACK", [identity])
    case_id, perms = found
    perms = sorted(set(perms))
    report.case_id = case_id
    report.permutation = perms[0]
    report.candidates = perms
    return case_id, perms[0]


def classify(body: UnconditionalBody) -> tuple[ClassificationReport, ParamEnv]:
    """Profile, parameters and case of a normalized body."""
    report = subcube_profile(body)
    env = structural_params(body, report)
    choose_case(report, env)
    return report, env
