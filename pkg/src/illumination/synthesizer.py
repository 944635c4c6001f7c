"""Build certified illuminating direction sets for 1-unconditional polytopes.

The synthesizer normalizes the body, asks the classifier for a case and an
axis relabeling, seeds the case's small parameters at half of their stated
strict bounds, and halves them until the exact verifier accepts the set.
Results are mapped back to the caller's coordinates and verified once more
there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Sequence

from . import families as fam
from .body import (
    Point,
    UnconditionalBody,
    axis_sup,
    extreme_points,
    facets,
    is_parallelepiped,
    normalize,
    project_off_axis,
    ray_sup,
    reflections,
    unit,
)
from .classifier import ParamEnv, classify
from .verifier import (
    IlluminationCertificate,
    count_pairs,
    derivatives,
    verify_set,
)

F = Fraction
HALF = F(1, 2)
DEFAULT_BUDGET = 24


class SynthesisError(RuntimeError):
    def __init__(self, message: str, witness: Point | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass
class DirectionSet:
    n: int
    directions: list[Point]
    case_id: str
    params: dict[str, Fraction] = field(default_factory=dict)

    @property
    def pair_closed(self) -> bool:
        present = set(self.directions)
        return all(tuple(-v for v in d) in present for d in self.directions)

    def __len__(self) -> int:
        return len(self.directions)


@dataclass
class CaseTrace:
    case_id: str
    permutation: tuple[int, ...]
    scale: tuple[Fraction, ...]
    params: dict[str, Fraction] = field(default_factory=dict)
    provenance: dict[str, str] = field(default_factory=dict)
    iterations: int = 0
    recursion: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    sub: "CaseTrace | None" = None


@dataclass
class Plan:
    names: list[str]
    seed: dict[str, Fraction]
    build: Callable[[dict[str, Fraction]], list[Point]]
    bounds: dict[str, str] = field(default_factory=dict)


def _pair_point(n: int, i: int, j: int) -> Point:
    return tuple(a + b for a, b in zip(unit(n, i), unit(n, j)))


def _theta0_absent_pairs(env: ParamEnv, among: Sequence[int] = range(4)) -> Fraction:
    values = [
        env.theta_pair(i, j) for i, j in combinations(among, 2) if env.theta_pair(i, j) < 1
    ]
    return max(values) if values else F(0)


def _probe_step(rows, x: Point, d: Point) -> Fraction:
    """Half the largest step along d that keeps signs and inactive rows intact."""
    limits = [abs(xi) / abs(di) for xi, di in zip(x, d) if xi and di]
    for a in rows:
        ax = sum(ai * abs(xi) for ai, xi in zip(a, x))
        ad = sum(ai * abs(di) for ai, di in zip(a, d))
        if ax < 1 and ad > 0:
            limits.append((1 - ax) / ad)
    return min(limits) / 2 if limits else F(1)


def _clearance_radius(body: UnconditionalBody, x: Point, d: Point) -> Fraction:
    """Facet clearance, measured in the sup norm, of the point reached a short step along d."""
    rows = facets(body).rows
    z = tuple(xi + _probe_step(rows, x, d) * di for xi, di in zip(x, d))
    return min((1 - sum(a * abs(v) for a, v in zip(row, z))) / sum(row) for row in rows)


def _plan(case_id: str, body: UnconditionalBody, env: ParamEnv) -> Plan:
    n = body.dim
    if case_id in ("P3.2", "P3.3"):
        if case_id == "P3.2":
            top = max(env.a(0, 1), env.a(1, 0))
        else:
            top = env.a(0, 2)
        delta = (1 - top) / 4
        return Plan(["delta"], {"delta": delta}, lambda p: fam.f_planar_three(p["delta"]),
                    {"delta": "(1 - a)/2"})
    if case_id == "P4.1":
        delta = (1 - env.gamma()) / 2
        return Plan(["delta"], {"delta": delta}, lambda p: fam.f_all_subcubes(n, p["delta"]),
                    {"delta": "1 - gamma"})
    if case_id == "P4.2":
        delta = (1 - env.theta(n - 1)) / 2
        return Plan(["delta"], {"delta": delta}, lambda p: fam.f_all_but_one(n, p["delta"]),
                    {"delta": "1 - theta_n"})
    if case_id == "P4.4":
        k = sum(1 for j in range(n) if env.theta(j) < 1)
        theta0 = max(env.theta(j) for j in range(n - k, n))
        delta = (1 - theta0) / 2
        return Plan(["delta"], {"delta": delta},
                    lambda p: fam.f_missing_block(n, k, p["delta"]), {"delta": "1 - Theta0"})
    if case_id == "P4.5":
        return _plan_one_subcube(body, env)
    if case_id == "P4.6/Case1":
        theta0 = max(env.theta(j) for j in range(n - 2))
        delta = (1 - theta0) / 2
        return Plan(["delta"], {"delta": delta},
                    lambda p: fam.f_two_subcubes_thick(n, p["delta"]), {"delta": "1 - Theta0"})
    if case_id == "P4.6/Case2":
        eps = HALF
        base = tuple([1 - eps / 2] * (n - 2) + [HALF, HALF])
        t = ray_sup(body, base, tuple([F(0)] * (n - 2) + [F(1), F(1)]))
        zeta0 = t / 2
        beta_a = ray_sup(body, tuple(zeta0 * v for v in unit(n, n - 2)),
                         tuple(F(0 if i == n - 2 else 1) for i in range(n)))
        beta_b = ray_sup(body, tuple(zeta0 * v for v in unit(n, n - 1)),
                         tuple(F(0 if i == n - 1 else 1) for i in range(n)))
        env.values.update({"zeta0": zeta0, "beta_n-1": beta_a, "beta_n": beta_b})
        delta = min(1 - zeta0, 1 - beta_a, 1 - beta_b) / 2
        return Plan(["eps", "delta"], {"eps": eps, "delta": delta},
                    lambda p: fam.f_two_subcubes_thin(n, p["eps"], p["delta"]),
                    {"delta": "min(1 - zeta0, 1 - beta_{n-1}, 1 - beta_n)"})
    if case_id == "P4.8":
        theta0 = max(env.theta(j) for j in range(n))
        gamma = env.gamma()
        delta = min(F(1, 6), (1 - theta0) / 2) / 2
        zeta = delta * (1 - gamma) / 5
        return Plan(["delta", "zeta"], {"delta": delta, "zeta": zeta},
                    lambda p: fam.f_all_codim2(n, p["delta"], p["zeta"]),
                    {"delta": "min(1/6, (1 - Theta0)/2)", "zeta": "delta (1 - gamma)/5"})
    if case_id == "P6.2":
        theta0 = _theta0_absent_pairs(env)
        level = (1 + theta0) / 2
        alpha0 = max(
            axis_sup(body, tuple(level * v for v in unit(4, i)), j)
            for i in range(4) for j in range(4) if i != j
        )
        theta12 = env.theta_pair(0, 1)
        env.values["alpha0"] = alpha0
        delta = min((1 - theta0) / 24, (theta12 - alpha0) / 2) / 2
        eta = min(delta, (1 - theta0) * delta / 2) / 2
        zeta = min(eta, (1 - alpha0) * eta, 7 * (1 - alpha0) * delta / 8,
                   (1 - alpha0 / theta12) / 2) / 2
        return Plan(["delta", "eta", "zeta"], {"delta": delta, "eta": eta, "zeta": zeta},
                    lambda p: fam.f_r4_none_or_five(p["delta"], p["eta"], p["zeta"]),
                    {"delta": "min((1 - Theta0)/24, (theta12 - alpha0)/2)",
                     "eta": "min(delta, (1 - Theta0) delta/2)",
                     "zeta": "min(eta, (1 - alpha0) eta, 7(1 - alpha0) delta/8, (1 - alpha0/theta12)/2)"})
    if case_id == "P6.6":
        theta0 = env.theta_pair(0, 3)
        gamma0 = max(env.theta(j) for j in range(4))
        delta = min(1 - theta0, 1 - gamma0) / 8
        eta = min(delta / 2, (1 - theta0) * delta) / 2
        zeta = min(eta / 2, (1 - theta0) * eta) / 2
        return Plan(["delta", "eta", "zeta"], {"delta": delta, "eta": eta, "zeta": zeta},
                    lambda p: fam.f_r4_none_or_five(p["delta"], p["eta"], p["zeta"]),
                    {"delta": "min(1 - Theta0, 1 - gamma0)/4", "eta": "min(delta/2, (1 - Theta0) delta)",
                     "zeta": "min(eta/2, (1 - Theta0) eta)"})
    if case_id in ("P6.3", "P6.4(i)", "P6.5/Case1", "P6.5/Case2", "P6.7/Case1"):
        theta0 = _theta0_absent_pairs(env)
        delta = (1 - theta0) / 8
        eta = (1 - theta0) * delta / 4
        build = fam.f_r4_one_or_two if case_id in ("P6.3", "P6.4(i)") else fam.f_r4_three_or_four
        return Plan(["delta", "eta"], {"delta": delta, "eta": eta},
                    lambda p: build(p["delta"], p["eta"]),
                    {"delta": "(1 - Theta0)/4", "eta": "(1 - Theta0) delta/2"})
    if case_id == "P6.4(ii)":
        theta0 = _theta0_absent_pairs(env)
        delta = (1 - theta0) / 2
        return Plan(["delta"], {"delta": delta}, lambda p: fam.f_r4_disjoint(p["delta"]),
                    {"delta": "1 - Theta0"})
    if case_id == "P6.5/Case3":
        theta0 = _theta0_absent_pairs(env, among=(1, 2, 3))
        delta = (1 - theta0) / 8
        eta = (1 - theta0) * delta / 2
        return Plan(["delta", "eta"], {"delta": delta, "eta": eta},
                    lambda p: fam.f_r4_star(p["delta"], p["eta"]),
                    {"delta": "(1 - Theta0)/4", "eta": "(1 - Theta0) delta"})
    if case_id == "P6.7/Case2":
        beta0 = env.theta_pair(2, 3)
        env.values["beta0"] = beta0
        delta = (1 - beta0) / 8
        eta = (1 - beta0) * delta / 2
        return Plan(["delta", "eta"], {"delta": delta, "eta": eta},
                    lambda p: fam.f_r4_cycle(p["delta"], p["eta"]),
                    {"delta": "(1 - beta0)/4", "eta": "(1 - beta0) delta"})
    raise ValueError(f"no explicit family for case {case_id}")


def _plan_one_subcube(body: UnconditionalBody, env: ParamEnv) -> Plan:
    n = body.dim
    top = n - 1
    alphas = [env.alpha_w(j, top) for j in range(n - 1)]
    delta0, eta0 = HALF, F(1, 4)
    seed_dirs = fam.f_one_subcube(n, delta0, eta0, HALF)[: 2 ** (n - 1)]
    rows = facets(body).rows
    radii = []
    for j in range(n - 1):
        w = tuple([F(1) if i not in (j, top) else F(0) for i in range(n - 1)] + [alphas[j]])
        for x in reflections(w):
            active = [r for r in rows if sum(a * abs(v) for a, v in zip(r, x)) == 1]
            for d in seed_dirs:
                if all(t < 0 for t in derivatives(active, x, d)):
                    radii.append(_clearance_radius(body, x, d))
                    break
    tau0 = min([(1 - alphas[0]) / 2] + radii)
    betas = []
    for j in range(n - 1):
        base = tuple(unit(n, top)[i] * (alphas[j] + tau0) for i in range(n))
        direction = tuple(F(0 if i in (j, top) else 1) for i in range(n))
        betas.append(ray_sup(body, base, direction))
    theta0 = max(env.theta(j) for j in range(n - 1))
    env.values.update({"tau0": tau0, **{f"beta_{j}": b for j, b in enumerate(betas)}})
    delta_t = min([tau0, 1 - theta0] + [1 - b for b in betas]) / 2
    return Plan(["delta", "eta", "delta_t"],
                {"delta": delta0, "eta": eta0, "delta_t": delta_t},
                lambda p: fam.f_one_subcube(n, p["delta"], p["eta"], p["delta_t"]),
                {"delta": "fixed 1/2", "eta": "halved until the perturbed directions verify",
                 "delta_t": "min(tau0, 1 - beta_j, 1 - Theta0)"})


def shrink_until_valid(
    body: UnconditionalBody,
    build: Callable[[dict[str, Fraction]], list[Point]],
    names: Sequence[str],
    seed: dict[str, Fraction],
    budget: int = DEFAULT_BUDGET,
) -> tuple[dict[str, Fraction], int, IlluminationCertificate]:
    """Halve parameters from the last one backwards until the set verifies.

    Each failure halves the current parameter and every parameter after it;
    after four failures at one level the search moves one parameter earlier.
    Returns the parameters, the number of halvings, and the final certificate.
    """
    params = dict(seed)
    level = len(names) - 1
    failures = 0
    cert = verify_set(body, build(params))
    iterations = 0
    while not cert.ok and iterations < budget:
        for name in names[level:]:
            params[name] /= 2
        iterations += 1
        failures += 1
        if failures >= 4 and level > 0:
            level -= 1
            failures = 0
        cert = verify_set(body, build(params))
    return params, iterations, cert


def build_family(case_id: str, n: int, params: dict[str, Fraction]) -> list[Point]:
    """Rebuild a family from recorded parameters, without any LP."""
    table: dict[str, Callable[[], list[Point]]] = {
        "P3.2": lambda: fam.f_planar_three(params["delta"]),
        "P3.3": lambda: fam.f_planar_three(params["delta"]),
        "P4.1": lambda: fam.f_all_subcubes(n, params["delta"]),
        "P4.2": lambda: fam.f_all_but_one(n, params["delta"]),
        "P4.4": lambda: fam.f_missing_block(n, int(params["k"]), params["delta"]),
        "P4.5": lambda: fam.f_one_subcube(n, params["delta"], params["eta"], params["delta_t"]),
        "P4.6/Case1": lambda: fam.f_two_subcubes_thick(n, params["delta"]),
        "P4.6/Case2": lambda: fam.f_two_subcubes_thin(n, params["eps"], params["delta"]),
        "P4.8": lambda: fam.f_all_codim2(n, params["delta"], params["zeta"]),
        "P6.2": lambda: fam.f_r4_none_or_five(params["delta"], params["eta"], params["zeta"]),
        "P6.6": lambda: fam.f_r4_none_or_five(params["delta"], params["eta"], params["zeta"]),
        "P6.3": lambda: fam.f_r4_one_or_two(params["delta"], params["eta"]),
        "P6.4(i)": lambda: fam.f_r4_one_or_two(params["delta"], params["eta"]),
        "P6.4(ii)": lambda: fam.f_r4_disjoint(params["delta"]),
        "P6.5/Case1": lambda: fam.f_r4_three_or_four(params["delta"], params["eta"]),
        "P6.5/Case2": lambda: fam.f_r4_three_or_four(params["delta"], params["eta"]),
        "P6.7/Case1": lambda: fam.f_r4_three_or_four(params["delta"], params["eta"]),
        "P6.5/Case3": lambda: fam.f_r4_star(params["delta"], params["eta"]),
        "P6.7/Case2": lambda: fam.f_r4_cycle(params["delta"], params["eta"]),
        "FALLBACK": lambda: fam.sign_grid(n),
    }
    if case_id not in table:
        raise ValueError(f"case {case_id} cannot be rebuilt from parameters alone")
    return table[case_id]()


def synthesize_case(
    body: UnconditionalBody,
    case_id: str,
    env: ParamEnv | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple[DirectionSet, CaseTrace]:
    """Emit the family for case_id; body must be normalized and already in position."""
    n = body.dim
    env = env if env is not None else ParamEnv(body)
    identity = tuple(range(n))
    trace = CaseTrace(case_id, identity, tuple(F(1) for _ in range(n)))
    if case_id == "CUBE":
        dirs = [tuple(-v for v in x) for x in extreme_points(body)]
        cert = verify_set(body, dirs)
        trace.provenance["directions"] = "negated vertices"
    elif case_id == "FALLBACK":
        dirs = fam.sign_grid(n)
        cert = verify_set(body, dirs)
        trace.provenance["directions"] = "all nonzero sign vectors"
    elif case_id == "CUBELIKE":
        return _cubelike(body, env, budget)
    else:
        plan = _plan(case_id, body, env)
        params, iterations, cert = shrink_until_valid(body, plan.build, plan.names, plan.seed, budget)
        dirs = plan.build(params)
        trace.params = dict(params)
        if case_id == "P4.4":
            trace.params["k"] = F(sum(1 for j in range(n) if env.theta(j) < 1))
        trace.iterations = iterations
        for name in plan.names:
            how = "seed at half of " + plan.bounds.get(name, "its bound")
            if params[name] != plan.seed[name]:
                how += f", halved to {params[name]}"
            trace.provenance[name] = how
    if not cert.ok:
        raise SynthesisError(
            f"{case_id}: no valid parameters within the shrink budget", cert.witness
        )
    values = {**env.as_dict(), **trace.params}
    return DirectionSet(n, dirs, case_id, values), trace


def _cubelike(body: UnconditionalBody, env: ParamEnv, budget: int) -> tuple[DirectionSet, CaseTrace]:
    n = body.dim
    trace = CaseTrace("CUBELIKE", tuple(range(n)), tuple(F(1) for _ in range(n)))
    axis = next(
        (i for i in range(n) if not is_parallelepiped(project_off_axis(body, i))), None
    )
    if axis is None:
        # every projection is a parallelepiped, so every maximal subcube is present
        ds, sub = synthesize_case(body, "P4.1", env, budget)
        trace.recursion.append({"dim": n, "step": "reroute", "case": "P4.1", "size": len(ds)})
        trace.params = sub.params
        trace.provenance = sub.provenance
        trace.iterations = sub.iterations
        return DirectionSet(n, ds.directions, "CUBELIKE", ds.params), trace
    projection = project_off_axis(body, axis)
    sub_set, sub_trace = synthesize(projection, budget)
    lifted, iterations = cubelike_lift(body, axis, sub_set, budget)
    params = lifted.params
    dirs = lifted.directions
    trace.params = {"eta0": params["eta0"], "axis": F(axis)}
    trace.iterations = iterations
    trace.provenance["eta0"] = "seed 1/2" + (
        f", halved to {params['eta0']}" if params["eta0"] != HALF else ""
    )
    trace.recursion.append({
        "dim": n, "step": "double", "axis": axis, "sub_case": sub_trace.case_id,
        "sub_size": len(sub_set), "size": len(dirs),
    })
    trace.recursion.extend(sub_trace.recursion)
    trace.sub = sub_trace
    return DirectionSet(n, dirs, "CUBELIKE", {**env.as_dict(), **trace.params}), trace


def cubelike_lift(
    body: UnconditionalBody, axis: int, sub_solution: DirectionSet, budget: int = DEFAULT_BUDGET
) -> tuple[DirectionSet, int]:
    """Lift a set for the projection off axis to (eta0 d, +1), (eta0 d, -1), shrinking eta0.

    Returns the lifted set (its params hold eta0) and the number of halvings.
    """
    if sub_solution.n != body.dim - 1:
        raise ValueError("sub_solution must live in the projection off one axis")
    params, iterations, cert = shrink_until_valid(
        body, lambda p: fam.lift(sub_solution.directions, axis, p["eta0"]), ["eta0"],
        {"eta0": HALF}, budget,
    )
    if not cert.ok:
        raise SynthesisError("CUBELIKE: lifted set does not verify", cert.witness)
    dirs = fam.lift(sub_solution.directions, axis, params["eta0"])
    return DirectionSet(body.dim, dirs, "CUBELIKE", {"eta0": params["eta0"]}), iterations


def _to_original(d: Point, perm: Sequence[int], scale: Sequence[Fraction]) -> Point:
    out = [F(0)] * len(d)
    for k, v in enumerate(d):
        out[perm[k]] = v
    return tuple(v / s for v, s in zip(out, scale))


def synthesize(
    body: UnconditionalBody, budget: int = DEFAULT_BUDGET
) -> tuple[DirectionSet, CaseTrace]:
    """Certified illuminating set for body, expressed in the body's own coordinates."""
    normalized, scale = normalize(body)
    report, env = classify(normalized)
    notes = []
    result = None
    last_error: SynthesisError | None = None
    for perm in report.candidates:
        positioned = normalized.permuted(perm)
        try:
            ds, trace = synthesize_case(positioned, report.case_id, ParamEnv(positioned), budget)
        except SynthesisError as err:
            notes.append(f"position {perm} failed: {err}")
            last_error = err
            continue
        result = (perm, ds, trace)
        break
    if result is None:
        assert last_error is not None
        raise last_error
    perm, ds, trace = result
    dirs = [_to_original(d, perm, scale) for d in ds.directions]
    cert = verify_set(body, dirs)
    if not cert.ok:
        raise SynthesisError("mapped set fails on the input body", cert.witness)
    trace.case_id = report.case_id
    trace.permutation = tuple(perm)
    trace.scale = tuple(scale)
    trace.notes = notes + trace.notes
    return DirectionSet(body.dim, dirs, report.case_id, ds.params), trace


def replay(trace: CaseTrace, n: int) -> list[Point]:
    """Rebuild the emitted directions from a trace's recorded parameters, without any LP."""
    if trace.case_id == "CUBE":
        raise ValueError("CUBE sets are read off the vertices, not rebuilt from parameters")
    if trace.case_id == "CUBELIKE":
        if trace.sub is None:
            dirs = build_family("P4.1", n, trace.params)
        else:
            sub = replay(trace.sub, n - 1)
            dirs = fam.lift(sub, int(trace.params["axis"]), trace.params["eta0"])
    else:
        dirs = build_family(trace.case_id, n, trace.params)
    return [_to_original(d, trace.permutation, trace.scale) for d in dirs]


def fallback_grid(n: int) -> DirectionSet:
    if n < 2:
        raise ValueError("n must be at least 2")
    return DirectionSet(n, fam.sign_grid(n), "FALLBACK")


def xray_report(ds: DirectionSet | Sequence[Sequence]) -> dict:
    """Negation-pair count and, for negation-closed sets, the X-ray bound it gives."""
    if isinstance(ds, DirectionSet):
        dirs, n = ds.directions, ds.n
    else:
        dirs = [tuple(F(v) for v in d) for d in ds]
        n = len(dirs[0]) if dirs else 0
    closed = all(tuple(-v for v in d) in set(dirs) for d in dirs)
    pairs = count_pairs(dirs)
    report = {"size": len(dirs), "pairs": pairs, "pair_closed": closed, "dim": n}
    if closed:
        report["xray_upper"] = pairs
        report["xray_bound"] = 2 ** n
    return report
