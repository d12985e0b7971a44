"""Command-line interface.

Subcommands mirror the library surface: `flow` integrates a trajectory,
`classify` reports curvature class and Ricci signature of one metric,
`roots` samples the boundary curves, `thresholds` prints the critical s*,
`regions` emits an (s, r) classification grid, and `probe-plane` evaluates
the explicit plane curvature.  Exit codes: 0 success, 2 bad arguments,
3 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import emit
from .core import Metric, kind_from_block_dim, ricci_coefficients
from .curvature import PlaneProbe, classify_sectional, plane_curvature
from .flow import EventKind, FlowOptions, StepSizeUnderflow, detect_events, integrate
from .regions import (CURVE_IDS, DEFAULT_GRID, InvalidGridSpec, sample_curves,
                      sample_regions)
from .signature import (BracketingError, critical_threshold,
                        critical_threshold_closed_form, ricci_signature)

_SPACE_TO_D = {"su3": 2, "sp3": 4, "f4": 8}


def _add_space_args(p: argparse.ArgumentParser, required: bool = True):
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--space", choices=sorted(_SPACE_TO_D))
    g.add_argument("--d", type=int, choices=(2, 4, 8))


def _resolve_kind(args):
    if getattr(args, "space", None):
        return kind_from_block_dim(_SPACE_TO_D[args.space])
    if getattr(args, "d", None):
        return kind_from_block_dim(args.d)
    return None


def _add_metric_args(p: argparse.ArgumentParser):
    p.add_argument("--x1", type=float, required=True)
    p.add_argument("--x2", type=float, required=True)
    p.add_argument("--x3", type=float, required=True)


def _add_output_args(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _parse_range(spec: str, name: str) -> tuple[float, float, int]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"{name} must look like lo:hi:n, got {spec!r}")
    return float(parts[0]), float(parts[1]), int(parts[2])


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wallachflow")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("flow", help="integrate the flow and report events")
    _add_space_args(p)
    _add_metric_args(p)
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--rtol", type=float, default=1e-10)
    p.add_argument("--atol", type=float, default=1e-12)
    _add_output_args(p)

    p = sub.add_parser("classify", help="curvature class and Ricci signature")
    _add_space_args(p)
    _add_metric_args(p)

    p = sub.add_parser("roots", help="boundary curves r(s)")
    _add_space_args(p, required=False)
    p.add_argument("--s-range", default="0.005:0.995:200")
    _add_output_args(p)

    p = sub.add_parser("thresholds", help="critical value s* of the signature transition")
    _add_space_args(p)

    p = sub.add_parser("regions", help="(s, r) classification grid")
    p.add_argument(
        "--grid",
        default=None,
        help="s_min:s_max:n_s,r_min:r_max:n_r (default %(s_min)s:%(s_max)s:%(n_s)s,"
             "%(r_min)s:%(r_max)s:%(n_r)s)" % DEFAULT_GRID,
    )
    _add_output_args(p)

    p = sub.add_parser("probe-plane", help="explicit plane curvature on (1, 1, 1+t)")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--x", type=float, required=True)

    return ap


def _cmd_flow(args) -> int:
    kind = _resolve_kind(args)
    m0 = Metric(args.x1, args.x2, args.x3, kind)
    opts = FlowOptions(t_end=args.t_end, rel_tol=args.rtol, abs_tol=args.atol)
    traj = integrate(m0, opts)
    events = detect_events(m0, opts, set(EventKind))
    text = emit.trajectory_csv(traj) if args.format == "csv" else emit.trajectory_json(traj)
    _write(text, args.out)
    for e in events:
        sys.stdout.write("event " + json.dumps(emit.event_dict(e)) + "\n")
    return 0


def _cmd_classify(args) -> int:
    kind = _resolve_kind(args)
    m = Metric(args.x1, args.x2, args.x3, kind)
    cls = classify_sectional(m)
    sig = ricci_signature(m)
    out = {
        "sectional": cls.tag.value,
        "ricci_signature": list(sig.as_tuple()),
        "rho": list(ricci_coefficients(m).eigenvalues()),
    }
    if cls.witness is not None:
        out["witness"] = {"t": cls.witness.t_param, "x": cls.witness.x_param}
    sys.stdout.write(json.dumps(out) + "\n")
    return 0


def _cmd_roots(args) -> int:
    s_min, s_max, n_s = _parse_range(args.s_range, "--s-range")
    kind = _resolve_kind(args)
    ids = CURVE_IDS if kind is None else ("valiev", f"ricci_d{kind.d}")
    curves = sample_curves(s_min, s_max, n_s, curve_ids=ids)
    text = emit.curves_csv(curves) if args.format == "csv" else emit.curves_json(curves)
    _write(text, args.out)
    return 0


def _cmd_thresholds(args) -> int:
    kind = _resolve_kind(args)
    s_star = critical_threshold(kind)
    sys.stdout.write(json.dumps({
        "d": kind.d,
        "s_star": s_star,
        "closed_form": critical_threshold_closed_form(kind),
    }) + "\n")
    return 0


def _cmd_regions(args) -> int:
    if args.grid is None:
        grid = sample_regions()
    else:
        try:
            s_spec, r_spec = args.grid.split(",")
        except ValueError:
            raise InvalidGridSpec(f"--grid must contain two ranges, got {args.grid!r}")
        s_min, s_max, n_s = _parse_range(s_spec, "--grid s-range")
        r_min, r_max, n_r = _parse_range(r_spec, "--grid r-range")
        grid = sample_regions(s_min, s_max, n_s, r_min, r_max, n_r)
    text = emit.region_csv(grid) if args.format == "csv" else emit.region_json(grid)
    _write(text, args.out)
    return 0


def _cmd_probe_plane(args) -> int:
    value = plane_curvature(PlaneProbe(t_param=args.t, x_param=args.x))
    sys.stdout.write(repr(value) + "\n")
    return 0


_COMMANDS = {
    "flow": _cmd_flow,
    "classify": _cmd_classify,
    "roots": _cmd_roots,
    "thresholds": _cmd_thresholds,
    "regions": _cmd_regions,
    "probe-plane": _cmd_probe_plane,
}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (StepSizeUnderflow, BracketingError) as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 3
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
