"""The twelve acceptance criteria, each at its stated tolerance and time limit.

Run with `pytest tests/test_acceptance.py -v`; a summary line per criterion is
printed at the end. Criteria that cannot hold as stated are marked xfail(strict)
next to a passing test of what does hold, and the criterion line reports FAIL.
"""

import random
import time
from fractions import Fraction as F
from functools import lru_cache
from itertools import product

import pytest

import corpus as C
from illumination.body import (
    UnconditionalBody,
    extreme_points,
    facets,
    gauge,
    is_parallelepiped,
    normalize,
    ones_minus,
    project_off_axis,
)
from illumination.classifier import subcube_profile
from illumination.families import f_all_codim2, sign_grid
from illumination.signs import (
    build_In,
    build_In_minus2,
    build_Jn,
    complete_two_zeros,
    deep_illuminates,
    signs_of,
)
from illumination.synthesizer import fallback_grid, synthesize, synthesize_case, xray_report
from illumination.verifier import brute_min_illumination, illuminates, verify_set

crit = pytest.mark.criterion


@lru_cache(maxsize=None)
def synth_timed(key):
    group, name = key
    body = BODIES[group][name]
    start = time.perf_counter()
    ds, trace = synthesize(body)
    return ds, trace, time.perf_counter() - start


BODIES = {
    "r3": C.R3,
    "r4": C.R4,
    "r56": {str(k): b for k, b in C.r5_r6().items()},
    "one": {str(n): C.one_subcube_body(n) for n in (4, 5, 6)},
    "codim2": {str(n): C.all_codim2_body(n) for n in (4, 5)},
    "cubelike": C.cubelike_bodies(),
}


def certified(key):
    ds, _, _ = synth_timed(key)
    group, name = key
    return verify_set(BODIES[group][name], ds.directions).ok


# 1

def _deep_cover(n, dirs, pattern_ok):
    by_sign = {signs_of(d): d for d in dirs}
    for x in product((-1, 0, 1), repeat=n):
        if not any(x) or not pattern_ok(x):
            continue
        zeros = [i for i, v in enumerate(x) if v == 0]
        base = [-v for v in x]
        found = False
        for fill in product((1, -1), repeat=len(zeros)):
            s = list(base)
            for i, v in zip(zeros, fill):
                s[i] = v
            d = by_sign.get(tuple(s))
            if d is not None and deep_illuminates(d, x):
                found = True
                break
        if not found:
            return x
    return None


@crit(1)
def test_fact_b_exhaustive():
    start = time.perf_counter()
    delta = F(1, 3)
    for n in range(3, 9):
        partial = lambda x: 1 <= x.count(0) <= len(x) - 1
        assert _deep_cover(n, build_In_minus2(n, delta), partial) is None
        assert _deep_cover(n, build_In(n, delta), lambda x: True) is None
    assert time.perf_counter() - start < 10


# 2

@crit(2)
def test_jn_suite():
    start = time.perf_counter()
    for n in range(3, 13):
        size = len(build_Jn(n))
        if n % 2 == 0:
            assert size == 2 ** (n - 1) - 2
        assert size <= 2 ** (n - 1) - 2
    for n in range(3, 11):
        members = set(build_Jn(n))
        for i in range(n):
            for j in range(i + 1, n):
                for rest in product((1, -1), repeat=n - 2):
                    p = list(rest)
                    p.insert(i, 0)
                    p.insert(j, 0)
                    assert complete_two_zeros(n, p) in members
    assert time.perf_counter() - start < 30


# 3

R3_GENERAL = sorted(set(C.R3) - C.R3_PARALLELEPIPEDS)


@crit(3)
def test_r3_corpus():
    assert len(R3_GENERAL) >= 20
    squares = {len(subcube_profile(normalize(C.R3[n])[0]).pairs) for n in R3_GENERAL}
    assert squares == {0, 1, 2, 3}
    for name in R3_GENERAL:
        ds, trace, seconds = synth_timed(("r3", name))
        assert certified(("r3", name)), name
        assert ds.pair_closed and len(ds) <= 6, (name, len(ds))
        assert seconds < 5, (name, seconds)


@crit(3)
@pytest.mark.parametrize("name, case", [
    ("cross", "P3.2"),
    ("square-bipyramid", "P3.3"),
    ("thin-two", "P4.6/Case2"),
    ("thick-two", "P4.6/Case1"),
    ("three-squares", "P4.1"),
])
def test_r3_named_bodies(name, case):
    ds, trace, _ = synth_timed(("r3", name))
    assert trace.case_id == case and len(ds) <= 6 and ds.pair_closed


@crit(3)
@pytest.mark.xfail(strict=True, reason="conv refl {(1,1,0),(1,0,1)} is [-1,1] x planar cross, an affine cube")
def test_r3_slab_cross_within_six():
    ds, _, _ = synth_timed(("r3", "slab-cross"))
    assert len(ds) <= 6


@crit(3)
def test_r3_slab_cross_is_a_parallelepiped():
    assert is_parallelepiped(C.SLAB_CROSS)
    ds, trace, _ = synth_timed(("r3", "slab-cross"))
    # every vertex of a parallelepiped needs its own direction
    assert trace.case_id == "CUBE" and len(ds) == 8 == len(extreme_points(C.SLAB_CROSS))


# 4

R4_GENERAL = sorted(set(C.R4) - C.R4_PARALLELEPIPEDS)


@crit(4)
def test_r4_corpus():
    assert len(R4_GENERAL) >= 25
    squares, subcubes = set(), set()
    for name in R4_GENERAL:
        report = subcube_profile(normalize(C.R4[name])[0])
        squares.add(len(report.pairs))
        subcubes.add(4 - report.k)
    assert squares >= set(range(7)) and subcubes >= {1, 2, 3, 4}
    for name in R4_GENERAL:
        ds, _, seconds = synth_timed(("r4", name))
        assert certified(("r4", name)), name
        assert len(ds) <= 14, (name, len(ds))
        assert seconds < 30, (name, seconds)


@crit(4)
def test_r4_named_bodies():
    ds, trace, _ = synth_timed(("r4", "two-disjoint"))
    assert trace.case_id == "P6.4(ii)" and len(ds) == 8
    ds, trace, _ = synth_timed(("r4", "cycle-bulge"))
    assert trace.case_id == "P6.7/Case2" and ds.params["beta0"] > F(1, 2)


# 5

BOUND_5 = {0: 2, 1: 4, 2: 6, 3: 12}


@crit(5)
@pytest.mark.parametrize("n, k", [(n, k) for n in (5, 6) for k in range(4) if (n, k) != (5, 3)])
def test_missing_subcubes(n, k):
    body = C.r5_r6()[(n, k)]
    assert subcube_profile(normalize(body)[0]).k == k
    ds, trace, seconds = synth_timed(("r56", str((n, k))))
    assert certified(("r56", str((n, k))))
    assert len(ds) <= 2 ** n - BOUND_5[k], (trace.case_id, len(ds))
    assert seconds < 300


@crit(5)
@pytest.mark.xfail(strict=True, reason="n = 5, k = 3 is the two-subcube case n - 2, bounded by 2^n - 2 only")
def test_missing_three_of_five():
    ds, _, _ = synth_timed(("r56", str((5, 3))))
    assert len(ds) <= 2 ** 5 - 12


@crit(5)
def test_missing_three_of_five_general_bound():
    ds, trace, _ = synth_timed(("r56", str((5, 3))))
    assert certified(("r56", str((5, 3))))
    assert trace.case_id.startswith("P4.6") and len(ds) <= 2 ** 5 - 2


@crit(5)
@pytest.mark.parametrize("n", [5, 6])
def test_one_subcube(n):
    ds, trace, seconds = synth_timed(("one", str(n)))
    assert trace.case_id == "P4.5" and certified(("one", str(n)))
    assert len(ds) <= 2 ** n - 4 and seconds < 300


# 6

@crit(6)
@pytest.mark.parametrize("n", [4, 5])
def test_all_codim2(n):
    ds, trace, _ = synth_timed(("codim2", str(n)))
    assert trace.case_id == "P4.8" and certified(("codim2", str(n)))
    assert len(ds) == 2 ** n - 2
    if n == 4:
        d, z = trace.params["delta"], trace.params["zeta"]
        listed = [(d, 1, z, d), (d, -1, -d, -d), (d, d, -1, -z), (d, -d, 1, d),
                  (d, d, d, -1), (d, -z, -d, 1), (-z, d, -d, 1)]
        want = {tuple(F(s * v) for v in row) for row in listed for s in (1, -1)}
        assert set(ds.directions) == want == set(f_all_codim2(4, d, z))


# 7

@crit(7)
@pytest.mark.parametrize("name", sorted(C.cubelike_bodies()))
def test_cubelike(name):
    body = C.cubelike_bodies()[name]
    n = body.dim
    ds, _, _ = synth_timed(("cubelike", name))
    assert certified(("cubelike", name)) and len(ds) <= 2 ** n - 2
    # force the cubelike route, whatever the dispatcher picked
    normalized = normalize(body)[0]
    forced, trace = synthesize_case(normalized, "CUBELIKE")
    assert verify_set(normalized, forced.directions).ok and len(forced) <= 2 ** n - 2
    step = trace.recursion[0]
    if step["step"] == "double":
        assert not is_parallelepiped(project_off_axis(normalized, step["axis"]))
        assert step["size"] == 2 * step["sub_size"]
    else:
        assert step["step"] == "reroute"
        assert all(gauge(normalized, ones_minus(n, i)) == 1 for i in range(n))


@crit(7)
def test_cubelike_trail_covers_both_routes():
    steps = set()
    for body in C.cubelike_bodies().values():
        _, trace = synthesize_case(normalize(body)[0], "CUBELIKE")
        steps.add(trace.recursion[0]["step"])
    assert steps == {"double", "reroute"}


# 8

def random_body(rng, n, max_gens=4):
    vals = [F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4), F(1)]
    gens = [tuple(rng.choice(vals) for _ in range(n)) for _ in range(rng.randint(1, max_gens))]
    gens = [g for g in gens if any(g)]
    for i in range(n):
        if not any(g[i] > 0 for g in gens):
            gens.append(tuple(rng.choice(vals[1:]) if j == i else F(0) for j in range(n)))
    return UnconditionalBody(gens)


@crit(8)
def test_fallback_on_random_bodies():
    rng = random.Random(8)
    for count in range(200):
        body = random_body(rng, 2 + count % 4)
        assert verify_set(body, fallback_grid(body.dim).directions).ok, body.generators


# 9

def half_step_grid():
    steps = (F(-1), F(-1, 2), F(0), F(1, 2), F(1))
    return [(a, b) for a in steps for b in steps if a or b]


@crit(9)
def test_planar_square():
    start = time.perf_counter()
    k, _ = brute_min_illumination(C.square(), sign_grid(2), 4)
    assert k == 4 and time.perf_counter() - start < 1


@crit(9)
@pytest.mark.xfail(strict=True, reason="the planar cross is a parallelogram, which needs 4")
def test_planar_cross_three():
    k, _ = brute_min_illumination(C.diamond(), sign_grid(2), 4)
    assert k == 3


@crit(9)
@pytest.mark.xfail(strict=True, reason="no 3 of the 8 sign directions illuminate any unconditional polygon")
def test_planar_octagon_three_on_sign_grid():
    k, _ = brute_min_illumination(C.octagon(), sign_grid(2), 4)
    assert k == 3


@crit(9)
def test_planar_cross_needs_four():
    assert is_parallelepiped(C.diamond())
    k, _ = brute_min_illumination(C.diamond(), sign_grid(2), 4)
    assert k == 4


@crit(9)
def test_planar_octagon_three_on_finer_grid():
    start = time.perf_counter()
    assert not is_parallelepiped(C.octagon())
    k, witness = brute_min_illumination(C.octagon(), half_step_grid(), 4)
    assert k == 3 and verify_set(C.octagon(), witness).ok
    assert time.perf_counter() - start < 1


# 10

@crit(10)
@pytest.mark.parametrize("n", [2, 3])
def test_cube_needs_all(n):
    start = time.perf_counter()
    cube = UnconditionalBody([(1,) * n])
    k, witness = brute_min_illumination(cube, fallback_grid(n).directions, 2 ** n)
    assert k == 2 ** n
    assert brute_min_illumination(cube, fallback_grid(n).directions, 2 ** n - 1) == (None, None)
    assert time.perf_counter() - start < 60


# 11

def probe(body, x, d):
    """Gauge at half the step where a sign flips or an inactive facet could turn active."""
    rows = facets(body).rows
    limits = [abs(a) / abs(b) for a, b in zip(x, d) if a and b]
    for row in rows:
        ax = sum(r * abs(v) for r, v in zip(row, x))
        ad = sum(r * abs(v) for r, v in zip(row, d))
        if ax < 1 and ad > 0:
            limits.append((1 - ax) / ad)
    eps = min(limits) / 2 if limits else F(1)
    return gauge(body, tuple(a + eps * b for a, b in zip(x, d))) < 1


@crit(11)
def test_oracle_agreement():
    rng = random.Random(11)
    steps = [F(k, 4) for k in range(-4, 5)]
    triples = agree = positives = 0
    while triples < 1000:
        body = random_body(rng, rng.randint(2, 4))
        points = extreme_points(body)
        for _ in range(10):
            x = rng.choice(points)
            d = tuple(rng.choice(steps) for _ in range(body.dim))
            if not any(d):
                continue
            fast = illuminates(body, x, d)
            agree += fast == probe(body, x, d)
            positives += fast
            triples += 1
    assert agree == triples
    assert 0 < positives < triples


# 12

ALL_KEYS = [(g, name) for g, group in BODIES.items() for name in group]


@crit(12)
def test_xray_reports():
    for key in ALL_KEYS:
        ds, trace, _ = synth_timed(key)
        if trace.case_id == "FALLBACK":
            continue
        report = xray_report(ds)
        assert report["pair_closed"], key
        assert report["pairs"] <= 2 ** (ds.n - 1), key
        assert report["xray_upper"] <= report["xray_bound"] == 2 ** ds.n
