"""anglekit: exhaustive distinct-angle counting over point configurations.

Exact-rational and float-mode geometry, robust general-position predicates,
generators for the spiral/helix/cone/torus/sunshine families, and counters
for distinct angles, pinned variants, angle chains, self-similarity, and
angle energy. Hot float kernels run in a compiled extension when available,
with a pure-Python fallback selected at import (ANGLEKIT_PURE=1 forces it).
"""

from ._backend import kernel_backend
from .angles import (
    AngleKey,
    ClusterStats,
    ExactAngleKey,
    FloatAngleKey,
    angle_cosine,
    angle_equal_poly,
    angle_key_exact,
    cluster_angles,
)
from .counters import (
    AngleHistogram,
    PinSpec,
    angle_histogram,
    cauchy_schwarz_check,
    chain_key_set,
    count_chains,
    count_distinct_angles,
    count_pinned,
    energy,
    find_self_similar_points,
    pinned_center_via_sphere,
)
from .constructions import (
    cone_config,
    cones_construction,
    conchospiral,
    cyl_helix,
    log_spiral,
    random_general_position,
    spindle_torus_config,
    sunshine,
)
from .geom import (
    EXACT,
    FLOAT,
    DegenerateInputError,
    GeneralPositionError,
    GeometryError,
    ModeMismatchError,
    Point,
    PointConfig,
    cross,
    dot,
    norm_sq,
    point2,
    point3,
    sub,
)
from .pointfile import PointParseError, parse_config, write_config
from .predicates import ViolationReport, collinear, concyclic, verify_general_position
from .sweep import FitResult, SweepRow, fit_loglog, run_sweep

__version__ = "0.1.0"

__all__ = [
    "AngleHistogram",
    "AngleKey",
    "ClusterStats",
    "DegenerateInputError",
    "EXACT",
    "ExactAngleKey",
    "FLOAT",
    "FitResult",
    "FloatAngleKey",
    "GeneralPositionError",
    "GeometryError",
    "ModeMismatchError",
    "PinSpec",
    "Point",
    "PointConfig",
    "PointParseError",
    "SweepRow",
    "ViolationReport",
    "angle_cosine",
    "angle_equal_poly",
    "angle_histogram",
    "angle_key_exact",
    "cauchy_schwarz_check",
    "chain_key_set",
    "cluster_angles",
    "collinear",
    "concyclic",
    "cone_config",
    "cones_construction",
    "conchospiral",
    "count_chains",
    "count_distinct_angles",
    "count_pinned",
    "cross",
    "cyl_helix",
    "dot",
    "energy",
    "find_self_similar_points",
    "fit_loglog",
    "kernel_backend",
    "log_spiral",
    "norm_sq",
    "parse_config",
    "pinned_center_via_sphere",
    "point2",
    "point3",
    "random_general_position",
    "run_sweep",
    "spindle_torus_config",
    "sub",
    "sunshine",
    "verify_general_position",
    "write_config",
]
