"""Region maps and boundary curves in the (s, r) plane.

Each grid cell at (s, r) represents the normalized metric (1, 1+r, s); it
carries the sectional-curvature class (d-independent) and one Ricci
positive-definiteness flag per block dimension.  The four boundary curves
are the Valiev bound and the three first-eigenvalue zero loci.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import ALL_KINDS, Metric, SU3
from .curvature import classify_sectional, valiev_bound
from .signature import boundary_root, normalized_ricci_coeffs

CURVE_IDS = ("valiev", "ricci_d2", "ricci_d4", "ricci_d8")

DEFAULT_GRID = dict(s_min=0.005, s_max=0.995, n_s=200, r_min=0.0, r_max=0.45, n_r=200)


class InvalidGridSpec(ValueError):
    pass


@dataclass(frozen=True)
class RegionCell:
    s: float
    r: float
    sectional: str
    ricci_positive_by_d: tuple[tuple[int, bool], ...]

    def ricci_positive(self, d: int) -> bool:
        return dict(self.ricci_positive_by_d)[d]


@dataclass(frozen=True)
class RegionGrid:
    s_min: float
    s_max: float
    r_min: float
    r_max: float
    n_s: int
    n_r: int
    cells: tuple[RegionCell, ...]


@dataclass(frozen=True)
class CurveSample:
    curve_id: str
    points: tuple[tuple[float, float], ...]


def _validate_grid(s_min, s_max, r_min, r_max, n_s, n_r):
    if not (0.0 < s_min < s_max <= 1.0):
        raise InvalidGridSpec(f"need 0 < s_min < s_max <= 1, got [{s_min}, {s_max}]")
    if not (0.0 <= r_min < r_max):
        raise InvalidGridSpec(f"need 0 <= r_min < r_max, got [{r_min}, {r_max}]")
    if n_s < 1 or n_r < 1:
        raise InvalidGridSpec(f"grid counts must be positive, got {n_s} x {n_r}")


def sample_regions(
    s_min: float = DEFAULT_GRID["s_min"],
    s_max: float = DEFAULT_GRID["s_max"],
    n_s: int = DEFAULT_GRID["n_s"],
    r_min: float = DEFAULT_GRID["r_min"],
    r_max: float = DEFAULT_GRID["r_max"],
    n_r: int = DEFAULT_GRID["n_r"],
) -> RegionGrid:
    """Classify every grid cell; cells are emitted in row-major s-then-r
    order, so the output is independent of any parallel evaluation order."""
    _validate_grid(s_min, s_max, r_min, r_max, n_s, n_r)
    s_vals = np.linspace(s_min, s_max, n_s)
    r_vals = np.linspace(r_min, r_max, n_r)
    cells = []
    for s in s_vals:
        s = float(s)
        for r in r_vals:
            r = float(r)
            tag = classify_sectional(Metric(1.0, 1.0 + r, s, SU3)).tag.value
            flags = tuple(
                (k.d, all(c > 0.0 for c in normalized_ricci_coeffs(r, s, k)))
                for k in ALL_KINDS
            )
            cells.append(RegionCell(s=s, r=r, sectional=tag, ricci_positive_by_d=flags))
    return RegionGrid(s_min, s_max, r_min, r_max, n_s, n_r, tuple(cells))


def sample_curves(
    s_min: float = DEFAULT_GRID["s_min"],
    s_max: float = DEFAULT_GRID["s_max"],
    n_s: int = DEFAULT_GRID["n_s"],
    curve_ids: tuple[str, ...] = CURVE_IDS,
) -> list[CurveSample]:
    """Sample the requested boundary curves r(s) over [s_min, s_max]."""
    if not (0.0 < s_min <= s_max < 1.0):
        raise InvalidGridSpec(f"need 0 < s_min <= s_max < 1, got [{s_min}, {s_max}]")
    if n_s < 1:
        raise InvalidGridSpec(f"n_s must be positive, got {n_s}")
    for cid in curve_ids:
        if cid not in CURVE_IDS:
            raise InvalidGridSpec(f"unknown curve id {cid!r}")
    s_vals = [float(s) for s in np.linspace(s_min, s_max, n_s)]
    by_d = {f"ricci_d{k.d}": k for k in ALL_KINDS}
    out = []
    for cid in curve_ids:
        if cid == "valiev":
            pts = tuple((s, valiev_bound(s)) for s in s_vals)
        else:
            kind = by_d[cid]
            pts = tuple((s, boundary_root(s, kind)) for s in s_vals)
        out.append(CurveSample(curve_id=cid, points=pts))
    return out
