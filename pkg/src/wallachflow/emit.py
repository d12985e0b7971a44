"""Deterministic CSV/JSON serialization of trajectories, grids and curves.

Floats are printed via their shortest round-trip representation (repr), so
identical inputs always produce byte-identical output; newlines are LF.
"""

from __future__ import annotations

import json

from .core import SpaceKind
from .flow import Trajectory
from .regions import RegionCell, RegionGrid, CurveSample

TRAJECTORY_CSV_HEADER = "t,x1,x2,x3,rho1,rho2,rho3,sectional,ricci_sig"
REGION_CSV_HEADER = "s,r,sectional,ricci_d2,ricci_d4,ricci_d8"
CURVES_CSV_HEADER = "curve_id,s,r"


def _f(v: float) -> str:
    return repr(float(v))


def _sig_str(sig) -> str:
    return f"{sig.n_pos}:{sig.n_zero}:{sig.n_neg}"


def trajectory_csv(traj: Trajectory) -> str:
    lines = [TRAJECTORY_CSV_HEADER]
    for p in traj.points:
        m, rd = p.metric, p.ricci
        lines.append(",".join([
            _f(p.t), _f(m.x1), _f(m.x2), _f(m.x3),
            _f(rd.rho1), _f(rd.rho2), _f(rd.rho3),
            p.sectional.tag.value, _sig_str(p.signature),
        ]))
    return "\n".join(lines) + "\n"


def trajectory_json(traj: Trajectory) -> str:
    obj = {
        "d": traj.kind.d,
        "points": [
            {
                "t": p.t,
                "x": [p.metric.x1, p.metric.x2, p.metric.x3],
                "rho": list(p.ricci.eigenvalues()),
                "sectional": p.sectional.tag.value,
                "ricci_sig": list(p.signature.as_tuple()),
            }
            for p in traj.points
        ],
        "events": [event_dict(e) for e in traj.events],
    }
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def event_dict(e) -> dict:
    out = {"kind": e.kind.value, "t_lo": e.t_lo, "t_hi": e.t_hi,
           "x_at_t_hi": [e.state_at_t_hi.metric.x1,
                         e.state_at_t_hi.metric.x2,
                         e.state_at_t_hi.metric.x3]}
    if e.index is not None:
        out["index"] = e.index
    return out


def region_csv(grid: RegionGrid) -> str:
    lines = [REGION_CSV_HEADER]
    for c in grid.cells:
        flags = dict(c.ricci_positive_by_d)
        lines.append(",".join([
            _f(c.s), _f(c.r), c.sectional,
            str(flags[2]).lower(), str(flags[4]).lower(), str(flags[8]).lower(),
        ]))
    return "\n".join(lines) + "\n"


def region_json(grid: RegionGrid) -> str:
    obj = {
        "s_min": grid.s_min, "s_max": grid.s_max,
        "r_min": grid.r_min, "r_max": grid.r_max,
        "n_s": grid.n_s, "n_r": grid.n_r,
        "cells": [
            {
                "s": c.s, "r": c.r, "sectional": c.sectional,
                "ricci_positive": {str(d): flag for d, flag in c.ricci_positive_by_d},
            }
            for c in grid.cells
        ],
    }
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def parse_region_json(text: str) -> RegionGrid:
    """Inverse of region_json; round-trips exactly (floats included)."""
    obj = json.loads(text)
    cells = tuple(
        RegionCell(
            s=c["s"], r=c["r"], sectional=c["sectional"],
            ricci_positive_by_d=tuple(
                (int(d), bool(flag)) for d, flag in sorted(
                    c["ricci_positive"].items(), key=lambda kv: int(kv[0])
                )
            ),
        )
        for c in obj["cells"]
    )
    return RegionGrid(obj["s_min"], obj["s_max"], obj["r_min"], obj["r_max"],
                      obj["n_s"], obj["n_r"], cells)


def curves_json(curves: list[CurveSample]) -> str:
    obj = {c.curve_id: [[s, r] for s, r in c.points] for c in curves}
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def curves_csv(curves: list[CurveSample]) -> str:
    lines = [CURVES_CSV_HEADER]
    for c in curves:
        for s, r in c.points:
            lines.append(f"{c.curve_id},{_f(s)},{_f(r)}")
    return "\n".join(lines) + "\n"
