"""3-distortion of embedded paths: exact evaluation, constructions, certificates, search."""

from .construction import (
    ConstructionParams,
    MarkedCurve,
    build_curve,
    build_gamma,
    build_gamma2,
    lift_curve,
    metric_contraction_ratio,
    sample_polyline,
)
from .distortion import (
    DistortionReport,
    TameSequence,
    TripleDistortion,
    check_tame,
    delta3,
    delta3_naive,
    rho3,
    triple_distortion,
)
from .geometry import (
    angle_at_vertex,
    is_convex_sequence,
    point_line_distance,
    triangle_area,
)
from .lower_bound import (
    Certificate,
    angle_witness,
    convexity_certificate,
    line_distance_bound_check,
    prop1_verify,
    subsample,
)
from .optimizer import (
    EmbeddingParams,
    brute_force_oracle,
    decode,
    local_search,
    objective,
)
from .scan import baseline, fit_exponent, scan

__version__ = "0.1.0"

__all__ = [
    "angle_at_vertex",
    "angle_witness",
    "baseline",
    "brute_force_oracle",
    "build_curve",
    "build_gamma",
    "build_gamma2",
    "Certificate",
    "check_tame",
    "ConstructionParams",
    "convexity_certificate",
    "decode",
    "delta3",
    "delta3_naive",
    "DistortionReport",
    "EmbeddingParams",
    "fit_exponent",
    "is_convex_sequence",
    "lift_curve",
    "line_distance_bound_check",
    "local_search",
    "MarkedCurve",
    "metric_contraction_ratio",
    "objective",
    "point_line_distance",
    "prop1_verify",
    "rho3",
    "sample_polyline",
    "scan",
    "subsample",
    "TameSequence",
    "triangle_area",
    "TripleDistortion",
    "triple_distortion",
]
