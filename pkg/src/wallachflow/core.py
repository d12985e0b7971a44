"""Three-parameter homogeneous metrics on the flag manifolds over C, H, O.

Everything in this module is a closed-form function of the block dimension
d in {2, 4, 8} and the three positive scaling parameters (x1, x2, x3); the
underlying Lie algebra data never appears explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SpaceKind:
    """One of the three flag manifolds, keyed by the block dimension d.

    d = 2, 4, 8 correspond to SU(3)/T^2, Sp(3)/Sp(1)^3 and F4/Spin(8).
    """

    d: int

    def __post_init__(self):
        if self.d not in (2, 4, 8):
            raise ValueError(f"block dimension must be 2, 4 or 8, got {self.d}")

    @property
    def total_dim(self) -> int:
        return 3 * self.d

    @property
    def ricci_const(self) -> int:
        """The constant 10d - 8 appearing in the Ricci coefficients."""
        return 10 * self.d - 8

    @property
    def attractor_ratio(self) -> Fraction:
        """Attracting fixed ratio x3/x1 = 4(d-1)/d of the equal-pair dynamics."""
        return Fraction(4 * (self.d - 1), self.d)

    @property
    def diagonal_rate(self) -> int:
        """Linear decay rate 9d - 8 of each x_i along the round diagonal."""
        return 9 * self.d - 8


SU3 = SpaceKind(2)
SP3 = SpaceKind(4)
F4 = SpaceKind(8)

ALL_KINDS = (SU3, SP3, F4)


def kind_from_block_dim(d: int) -> SpaceKind:
    return SpaceKind(int(d))


@dataclass(frozen=True)
class Metric:
    """A homogeneous metric (x1, x2, x3), all entries strictly positive."""

    x1: float
    x2: float
    x3: float
    kind: SpaceKind

    def __post_init__(self):
        for name in ("x1", "x2", "x3"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"{name} must be finite and > 0, got {v}")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x3)

    def scaled(self, c: float) -> "Metric":
        return Metric(c * self.x1, c * self.x2, c * self.x3, self.kind)

    def permuted(self, perm: tuple[int, int, int]) -> "Metric":
        """Apply a permutation of {1,2,3}: slot i receives x_{perm[i-1]}."""
        xs = self.as_tuple()
        return Metric(xs[perm[0] - 1], xs[perm[1] - 1], xs[perm[2] - 1], self.kind)


@dataclass(frozen=True)
class RicciData:
    """Ricci coefficients r_i and eigenvalues rho_i = r_i * x_i."""

    r1: float
    r2: float
    r3: float
    rho1: float
    rho2: float
    rho3: float

    def coeffs(self) -> tuple[float, float, float]:
        return (self.r1, self.r2, self.r3)

    def eigenvalues(self) -> tuple[float, float, float]:
        return (self.rho1, self.rho2, self.rho3)


def ricci_coefficients(m: Metric) -> RicciData:
    """r_i = (d x_i^2 - d x_j^2 - d x_k^2 + (10d-8) x_j x_k) / (2 x1 x2 x3)."""
    d = m.kind.d
    c = m.kind.ricci_const
    x1, x2, x3 = m.x1, m.x2, m.x3
    denom = 2.0 * x1 * x2 * x3
    n1 = d * x1 * x1 - d * x2 * x2 - d * x3 * x3 + c * x2 * x3
    n2 = d * x2 * x2 - d * x1 * x1 - d * x3 * x3 + c * x1 * x3
    n3 = d * x3 * x3 - d * x1 * x1 - d * x2 * x2 + c * x1 * x2
    r1, r2, r3 = n1 / denom, n2 / denom, n3 / denom
    return RicciData(r1, r2, r3, r1 * x1, r2 * x2, r3 * x3)


def flow_vector_field(m: Metric) -> tuple[float, float, float]:
    """Right-hand side of the Ricci flow ODE: dx_i/dt = -2 r_i x_i."""
    rd = ricci_coefficients(m)
    return (-2.0 * rd.rho1, -2.0 * rd.rho2, -2.0 * rd.rho3)


def ratio_derivative_equal_pair(q: float, x3: float, kind: SpaceKind) -> float:
    """d/dt (x3/x1) on the invariant slice x1 = x2, as a function of q = x3/x1.

    Equals -2 q (r3 - r1) = -2 q (1 - q) ((4d - 4) - d q) / x3.  Zero at the
    unstable ratio q = 1 and at the attractor q = 4(d-1)/d.
    """
    if q <= 0.0:
        raise ValueError(f"ratio q must be > 0, got {q}")
    if x3 <= 0.0:
        raise ValueError(f"x3 must be > 0, got {x3}")
    d = kind.d
    return -2.0 * q * (1.0 - q) * ((4.0 * d - 4.0) - d * q) / x3


@dataclass(frozen=True)
class NormalizedMetric:
    """Scale- and order-normalized coordinates (1, 1+r, s) of a metric.

    The sorted convention puts the largest parameter in slot 2 and the
    smallest in slot 3, so r >= 0 and 0 < s <= 1.  `applied_permutation`
    maps normalized slots back to source indices (1-based);
    `reconstruct()` undoes the normalization exactly.
    """

    r: float
    s: float
    applied_permutation: tuple[int, int, int]
    scale: float
    kind: SpaceKind

    def reconstruct(self) -> Metric:
        vals = (self.scale, self.scale * (1.0 + self.r), self.scale * self.s)
        out = [0.0, 0.0, 0.0]
        for slot, src in enumerate(self.applied_permutation):
            out[src - 1] = vals[slot]
        return Metric(out[0], out[1], out[2], self.kind)


def normalize(m: Metric) -> NormalizedMetric:
    """Sort (descending, ties broken by original index) and rescale by the
    middle parameter so the metric reads (1, 1+r, s)."""
    xs = m.as_tuple()
    order = sorted(range(3), key=lambda i: (-xs[i], i))
    hi, mid, lo = xs[order[0]], xs[order[1]], xs[order[2]]
    perm = (order[1] + 1, order[0] + 1, order[2] + 1)
    return NormalizedMetric(
        r=hi / mid - 1.0,
        s=lo / mid,
        applied_permutation=perm,
        scale=mid,
        kind=m.kind,
    )
