"""Homogeneous Ricci flow on the flag manifolds over C, H and O.

Simulates the three-parameter metric flow dx_i/dt = -2 r_i x_i on the
spaces SU(3)/T^2, Sp(3)/Sp(1)^3 and F4/Spin(8), classifies sectional
curvature and Ricci signature along trajectories, and maps the positivity
regions in the normalized (s, r) plane.
"""

from .core import (
    ALL_KINDS,
    F4,
    Metric,
    NormalizedMetric,
    RicciData,
    SP3,
    SU3,
    SpaceKind,
    flow_vector_field,
    kind_from_block_dim,
    normalize,
    ratio_derivative_equal_pair,
    ricci_coefficients,
)
from .curvature import (
    CurvatureClass,
    CurvatureTag,
    PlaneProbe,
    classify_equal_pair,
    classify_sectional,
    negativity_window,
    plane_curvature,
    remark_bounds,
    sectional_margin,
    valiev_bound,
)
from .flow import (
    EventKind,
    FlowEvent,
    FlowOptions,
    NotOnEqualPairSlice,
    StepSizeUnderflow,
    Trajectory,
    TrajectoryPoint,
    detect_events,
    integrate,
    ratio_trace,
)
from .regions import (
    CurveSample,
    InvalidGridSpec,
    RegionCell,
    RegionGrid,
    sample_curves,
    sample_regions,
)
from .signature import (
    BracketingError,
    RicciSignature,
    boundary_root,
    critical_threshold,
    critical_threshold_closed_form,
    dr1_along_flow,
    equal_pair_ricci,
    normalized_ricci_coeffs,
    r1_partials,
    ricci_signature,
)

__version__ = "0.1.0"
