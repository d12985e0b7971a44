"""Signs of the Ricci eigenvalues and the signature-transition thresholds.

On the wedge x2 > x1 > x3, written as (1, 1+r, s), the first Ricci
eigenvalue vanishes along an explicit curve r = boundary_root(s).  The flow
derivative of the first Ricci coefficient on that curve is negative exactly
for s below a critical value s* (one per block dimension d), which is where
the positive-definite -> indefinite transition can be triggered.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Metric, RicciData, SpaceKind, flow_vector_field, ricci_coefficients

# |rho| below this (scaled) cutoff counts as a zero eigenvalue.
SIGN_RTOL = 1e-9


class BracketingError(RuntimeError):
    """No usable sign change found while bracketing a root."""


@dataclass(frozen=True)
class RicciSignature:
    """Eigenvalue-sign counts of the Ricci tensor; each rho_i has
    multiplicity d, so n_pos + n_zero + n_neg = 3d."""

    n_pos: int
    n_zero: int
    n_neg: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_pos, self.n_zero, self.n_neg)

    def is_positive_definite(self) -> bool:
        return self.n_zero == 0 and self.n_neg == 0


def signature_from_eigenvalues(rhos: tuple[float, float, float], kind: SpaceKind) -> RicciSignature:
    cut = SIGN_RTOL * max(1.0, abs(rhos[0]) + abs(rhos[1]) + abs(rhos[2]))
    n_pos = sum(1 for v in rhos if v > cut) * kind.d
    n_neg = sum(1 for v in rhos if v < -cut) * kind.d
    return RicciSignature(n_pos, 3 * kind.d - n_pos - n_neg, n_neg)


def ricci_signature(m: Metric) -> RicciSignature:
    return signature_from_eigenvalues(ricci_coefficients(m).eigenvalues(), m.kind)


def normalized_ricci_coeffs(r: float, s: float, kind: SpaceKind) -> tuple[float, float, float]:
    """Ricci eigenvalues (r1 x1, r2 x2, r3 x3) at the metric (1, 1+r, s)."""
    if s <= 0.0:
        raise ValueError(f"s must be > 0, got {s}")
    if 1.0 + r <= 0.0:
        raise ValueError(f"need 1 + r > 0, got r = {r}")
    d = kind.d
    c = kind.ricci_const
    rho1 = (-2.0 * r * d - d * r * r + c * s + c * r * s - d * s * s) / (2.0 * (1.0 + r) * s)
    rho2 = (2.0 * d * r + d * r * r + c * s - d * s * s) / (2.0 * s)
    rho3 = ((8.0 * d - 8.0) + (8.0 * d - 8.0) * r - d * r * r + d * s * s) / (2.0 * (1.0 + r))
    return (rho1, rho2, rho3)


# Per-d constants (k, h) of the zero curve r = sqrt(1 + k s^2) - (1 - h s):
#   d=2: sqrt(1 + 8 s^2)      - (1 - 3 s)
#   d=4: sqrt(1 + 15 s^2)     - (1 - 4 s)
#   d=8: sqrt(1 + 77/4 s^2)   - (1 - 9/2 s)
_ROOT_CONSTANTS = {2: (8.0, 3.0), 4: (15.0, 4.0), 8: (77.0 / 4.0, 4.5)}


def boundary_root(s: float, kind: SpaceKind) -> float:
    """The positive root r(s) of the first Ricci eigenvalue at (1, 1+r, s)."""
    if not 0.0 < s < 1.0:
        raise ValueError(f"s must lie in (0, 1), got {s}")
    k, h = _ROOT_CONSTANTS[kind.d]
    return math.sqrt(1.0 + k * s * s) - (1.0 - h * s)


def r1_partials(m: Metric) -> tuple[float, float, float]:
    """Analytic partial derivatives of the first Ricci coefficient r1.

    With N = d x1^2 - d x2^2 - d x3^2 + (10d-8) x2 x3 and D = 2 x1 x2 x3,
    the quotient rule gives each dr1/dx_i in closed form.
    """
    d = m.kind.d
    c = m.kind.ricci_const
    x1, x2, x3 = m.x1, m.x2, m.x3
    n = d * x1 * x1 - d * x2 * x2 - d * x3 * x3 + c * x2 * x3
    p1 = (2.0 * d * x1 * x1 - n) / (2.0 * x1 * x1 * x2 * x3)
    p2 = ((-2.0 * d * x2 + c * x3) * x2 - n) / (2.0 * x1 * x2 * x2 * x3)
    p3 = ((-2.0 * d * x3 + c * x2) * x3 - n) / (2.0 * x1 * x2 * x3 * x3)
    return (p1, p2, p3)


def dr1_along_flow(m: Metric) -> float:
    """Time derivative of r1 along the flow: -2 sum_i rho_i dr1/dx_i."""
    rd: RicciData = ricci_coefficients(m)
    p1, p2, p3 = r1_partials(m)
    return -2.0 * (rd.rho1 * p1 + rd.rho2 * p2 + rd.rho3 * p3)


def _threshold_indicator(s: float, kind: SpaceKind) -> float:
    return dr1_along_flow(Metric(1.0, 1.0 + boundary_root(s, kind), s, kind))


def critical_threshold(kind: SpaceKind) -> float:
    """Root s* of dr1_along_flow on the zero curve (1, 1+r(s), s).

    Bracketed on [1e-4, 1 - 1e-4] by a sign scan (an odd number of sign
    changes is required; the outermost bracket is kept) and refined by
    bisection well past 1e-10 absolute tolerance.
    """
    lo_edge, hi_edge = 1e-4, 1.0 - 1e-4
    n_scan = 512
    grid = [lo_edge + (hi_edge - lo_edge) * i / (n_scan - 1) for i in range(n_scan)]
    vals = [_threshold_indicator(s, kind) for s in grid]
    brackets = [
        (grid[i], grid[i + 1])
        for i in range(n_scan - 1)
        if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0
    ]
    if not brackets or len(brackets) % 2 == 0:
        raise BracketingError(
            f"expected an odd number of sign changes on ({lo_edge}, {hi_edge}) "
            f"for d={kind.d}, found {len(brackets)}"
        )
    lo, hi = brackets[-1]
    f_lo = _threshold_indicator(lo, kind)
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        f_mid = _threshold_indicator(mid, kind)
        if f_mid == 0.0:
            return mid
        if (f_lo < 0.0) == (f_mid < 0.0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def critical_threshold_closed_form(kind: SpaceKind) -> float:
    """Closed-form s* per block dimension, kept as an independent check
    against the bisection result."""
    d = kind.d
    if d == 2:
        return 1.0 - math.sqrt(5.0 / 8.0)
    if d == 4:
        root21 = math.sqrt(21.0)
        return (30.0 + 5.0 * root21 - 3.0 * math.sqrt(5.0 * (21.0 + 4.0 * root21))) / 30.0
    root2737 = math.sqrt(2737.0)
    return (693.0 + 11.0 * root2737 - 7.0 * math.sqrt(22.0 * (511.0 + 9.0 * root2737))) / 616.0


def equal_pair_ricci(q: float, kind: SpaceKind) -> tuple[float, float]:
    """Ricci coefficients on the slice x1 = x2, in the background basis:
    ((10d - 8 - d q) / 2 on V1 and V2, ((8d - 8) - d q^2) / 2 on V3).

    These are stated with respect to the fixed background inner product, so
    only their signs (not raw values) are comparable with the eigenvalues
    rho_i; sign agreement is checked in the test suite.
    """
    if q <= 0.0:
        raise ValueError(f"ratio q must be > 0, got {q}")
    d = kind.d
    return ((10.0 * d - 8.0 - d * q) / 2.0, ((8.0 * d - 8.0) - d * q * q) / 2.0)
