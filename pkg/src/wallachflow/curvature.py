"""Sectional-curvature positivity for the three-parameter metric family.

Two classifiers cover the whole family: a ratio test on the invariant slice
x1 = x2 (boundary at x3/x1 = 4/3, with an explicit negatively curved plane
beyond it) and the Valiev inequality r < (s - 2 + 2 sqrt(1 - s + s^2)) / 3
for the generic normalized metric (1, 1+r, s).  The Valiev bound is applied
uniformly for d = 2, 4, 8; no space-dependent constant enters it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .core import Metric, SpaceKind, normalize

# Relative tolerance for all boundary / coincidence decisions.
BOUNDARY_RTOL = 1e-9

# Ratio x3/x1 separating positive from mixed curvature on the x1 = x2 slice.
EQUAL_PAIR_BOUNDARY = 4.0 / 3.0


class CurvatureTag(Enum):
    STRICTLY_POSITIVE = "StrictlyPositive"
    NONNEGATIVE_BOUNDARY = "NonnegativeBoundary"
    MIXED = "Mixed"


@dataclass(frozen=True)
class PlaneProbe:
    """Parameters of the explicit plane family on metrics (1, 1, 1+t)."""

    t_param: float
    x_param: float

    def __post_init__(self):
        if self.x_param < 0.0:
            raise ValueError(f"x_param must be >= 0, got {self.x_param}")


@dataclass(frozen=True)
class CurvatureClass:
    tag: CurvatureTag
    witness: Optional[PlaneProbe] = None


def plane_curvature(p: PlaneProbe) -> float:
    """Unnormalized curvature of the probe plane on the metric (1, 1, 1+t):

        2 / (1 + x^2) * (1 - 3t + (1 + t)^2 x^2)
    """
    t, x = p.t_param, p.x_param
    if 1.0 + t <= 0.0:
        raise ValueError(f"need 1 + t_param > 0, got t_param = {t}")
    return 2.0 / (1.0 + x * x) * (1.0 - 3.0 * t + (1.0 + t) * (1.0 + t) * x * x)


def negativity_window(sigma: float) -> float:
    """Upper endpoint of the plane parameters x that certify negative
    curvature at t = 1/3 + sigma:  sqrt(3 sigma / (1 + (4/3 + 3 sigma)^2)).

    plane_curvature(PlaneProbe(1/3 + sigma, x)) < 0 for every x strictly
    inside (0, endpoint).
    """
    if sigma <= 0.0:
        raise ValueError(f"sigma must be > 0, got {sigma}")
    a = 4.0 / 3.0 + 3.0 * sigma
    return math.sqrt(3.0 * sigma / (1.0 + a * a))


def _close(a: float, b: float, rtol: float = BOUNDARY_RTOL) -> bool:
    return abs(a - b) <= rtol * max(abs(a), abs(b))


def classify_equal_pair(q: float, kind: SpaceKind) -> CurvatureClass:
    """Classify a metric with x1 = x2 by the ratio q = x3/x1.

    Strictly positive for q in (0,1) or (1, 4/3); boundary at q = 1 and
    q = 4/3; mixed beyond 4/3, with a concrete negative-curvature plane
    as witness.
    """
    if q <= 0.0:
        raise ValueError(f"ratio q must be > 0, got {q}")
    if _close(q, 1.0) or _close(q, EQUAL_PAIR_BOUNDARY):
        return CurvatureClass(CurvatureTag.NONNEGATIVE_BOUNDARY)
    if q < EQUAL_PAIR_BOUNDARY:
        return CurvatureClass(CurvatureTag.STRICTLY_POSITIVE)
    sigma = q - EQUAL_PAIR_BOUNDARY
    probe = PlaneProbe(t_param=q - 1.0, x_param=0.5 * negativity_window(sigma))
    return CurvatureClass(CurvatureTag.MIXED, witness=probe)


def valiev_bound(s: float) -> float:
    """Largest r (exclusive) with (1, 1+r, s) strictly positively curved:

        (s - 2 + 2 sqrt(1 - s + s^2)) / 3
    """
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    return _valiev_bound_unchecked(s)


def _valiev_bound_unchecked(s: float) -> float:
    # Conjugate form s^2 / (2 sqrt(1 - s + s^2) + 2 - s): identical
    # algebraically but free of the catastrophic cancellation the raw
    # expression suffers for small s.  Also used at s = 1 (value 1/3),
    # where it matches the equal-pair boundary q = 4/3 written as r = q - 1.
    return s * s / (2.0 * math.sqrt(1.0 - s + s * s) + 2.0 - s)


def remark_bounds(s: float) -> tuple[float, float, float]:
    """The sandwich s^2/4 < valiev_bound(s) < s^2/3 on (0, 1)."""
    vb = valiev_bound(s)
    return (s * s / 4.0, vb, s * s / 3.0)


def classify_sectional(m: Metric) -> CurvatureClass:
    """Classify any metric of the family.

    Metrics with a coinciding pair (relative tolerance 1e-9) dispatch to the
    ratio test; otherwise the Valiev inequality decides at the normalized
    coordinates (1, 1+r, s).  Invariant under permutations and rescaling.
    """
    xs = sorted(m.as_tuple(), reverse=True)
    hi, mid, lo = xs
    if _close(hi, mid) and _close(mid, lo):
        return classify_equal_pair(1.0, m.kind)
    if _close(hi, mid):
        return classify_equal_pair(lo / mid, m.kind)
    if _close(mid, lo):
        return classify_equal_pair(hi / mid, m.kind)
    nm = normalize(m)
    bound = valiev_bound(nm.s)
    if _close(nm.r, bound):
        return CurvatureClass(CurvatureTag.NONNEGATIVE_BOUNDARY)
    if nm.r < bound:
        return CurvatureClass(CurvatureTag.STRICTLY_POSITIVE)
    # No explicit negative plane is known off the equal-pair slice; the
    # Valiev condition is necessary and sufficient, so no witness is emitted.
    return CurvatureClass(CurvatureTag.MIXED)


def sectional_margin(m: Metric) -> float:
    """Signed distance valiev_bound(s) - r in normalized coordinates.

    Positive on strictly positively curved metrics, negative on mixed ones;
    continuous across the equal-pair slice (where it reduces to 4/3 - q for
    q > 1).  Used as a scalar indicator for event detection.
    """
    nm = normalize(m)
    return _valiev_bound_unchecked(nm.s) - nm.r
