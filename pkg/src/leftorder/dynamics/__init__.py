"""Orders as line actions: realizations, crossings, scale comparisons."""

from .archimedean import cofinal_ball, group_power, holder_estimate
from .crossings import (
    Crossing,
    conradian_soul_ball,
    find_crossing,
    find_crossings,
    is_conradian_ball,
    verify_crossing,
)
from .realization import (
    Realization,
    ball_enumeration,
    realization_svg,
    realization_to_json,
    realize,
    shuffled_enumeration,
)
from .verbal import (
    VerbalCertificate,
    VerbalStage,
    build_verbal_counterexample,
    evaluate_word,
)

__all__ = [
    "Crossing", "verify_crossing", "find_crossing", "find_crossings",
    "is_conradian_ball", "conradian_soul_ball",
    "holder_estimate", "cofinal_ball", "group_power",
    "Realization", "realize", "ball_enumeration", "shuffled_enumeration",
    "realization_to_json", "realization_svg",
    "VerbalCertificate", "VerbalStage", "build_verbal_counterexample",
    "evaluate_word",
]
