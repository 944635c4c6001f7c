"""Exact illumination of 1-unconditional polytopes by small direction sets."""

from .body import (
    BodyError,
    FacetSystem,
    UnconditionalBody,
    axis_sup,
    extreme_orbits,
    extreme_points,
    facets,
    gauge,
    is_normalized,
    is_parallelepiped,
    locate,
    normalize,
    project_off_axis,
    zero_set,
)
from .classifier import ClassificationReport, ParamEnv, choose_case, classify, is_cubelike
from .signs import (
    build_Gn,
    build_hatI,
    build_In,
    build_In_minus2,
    build_Jn,
    complete_two_zeros,
    deep_illuminates,
    mc,
)
from .synthesizer import (
    CaseTrace,
    DirectionSet,
    SynthesisError,
    cubelike_lift,
    fallback_grid,
    replay,
    shrink_until_valid,
    synthesize,
    synthesize_case,
    xray_report,
)
from .verifier import (
    IlluminationCertificate,
    brute_min_illumination,
    illuminates,
    verify_set,
)

__all__ = [
    "BodyError", "FacetSystem", "UnconditionalBody", "axis_sup", "extreme_orbits",
    "extreme_points", "facets", "gauge", "is_normalized", "is_parallelepiped", "locate",
    "normalize", "project_off_axis", "zero_set",
    "ClassificationReport", "ParamEnv", "choose_case", "classify", "is_cubelike",
    "build_Gn", "build_hatI", "build_In", "build_In_minus2", "build_Jn",
    "complete_two_zeros", "deep_illuminates", "mc",
    "CaseTrace", "DirectionSet", "SynthesisError", "cubelike_lift", "fallback_grid",
    "replay", "shrink_until_valid", "synthesize", "synthesize_case", "xray_report",
    "IlluminationCertificate", "brute_min_illumination", "illuminates", "verify_set",
]
