"""Maskit embedding of the twice punctured torus: exact trace polynomials,
canonical curve coordinates, and numerically continued pleating rays."""

from .config import RunConfig, load_config
from .domain import (
    FundamentalDisks,
    Membership,
    MembershipVerdict,
    dehn_twist,
    fundamental_disks,
    membership,
)
from .geom import (
    ComplexDistance,
    ComplexLength,
    bending_angle,
    complex_distance,
    complex_length_from_trace,
)
from .lamination import (
    AsymptoticLine,
    CanonicalCoords,
    RationalLamination,
    asymptotic_line,
    coords_from_word,
    disjoint,
    enumerate_curves,
    is_admissible,
    is_exceptional_pair,
    nonexceptional_partner,
    parse_lamination,
    star,
    thurston_pairing,
    wheel_search,
)
from .limitset import (
    OrbitPoint,
    Viewport,
    enumerate_reduced_words,
    limit_points,
    limit_points_array,
    render,
)
from .tracepoly import (
    BiPoly,
    Mat2P,
    TopTermsReport,
    infer_coords_from_trace,
    substitute_shift,
    symbolic_rep,
    top_terms_check,
    trace_poly,
)
from .tracer import (
    EDiagnostic,
    RayPolyline,
    RaySample,
    double_cusp,
    eval_E,
    find_plane_corner,
    newton_correct,
    seed_point,
    toy_branch_check,
    trace_plane,
    trace_ray,
)
from .words import GroupWord, Letter, Mat2C, ParameterPoint, cyclic_reduce, evaluate, parse_word, trace

__version__ = "0.1.0"
