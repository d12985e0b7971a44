"""Ricci-flow integration for the three-parameter metric family.

The ODE dx_i/dt = -2 r_i x_i is integrated with an embedded Dormand-Prince
4(5) pair under a PI step controller.  Backward runs negate time inside the
vector field.  Transition events (curvature class changes, Ricci eigenvalue
zeros, ratio crossings, extinction) are located by sign-change bracketing
over accepted steps followed by bisection in time, re-integrating from the
last accepted state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Optional

from .core import Metric, RicciData, SpaceKind, ricci_coefficients
from .curvature import CurvatureClass, classify_sectional, sectional_margin
from .signature import RicciSignature, ricci_signature

EVENT_BRACKET_WIDTH = 1e-9
EQUAL_PAIR_RTOL = 1e-9


class StepSizeUnderflow(RuntimeError):
    """The error controller demanded a step below min_step."""


class InvalidOptions(ValueError):
    pass


class NotOnEqualPairSlice(ValueError):
    pass


@dataclass(frozen=True)
class FlowOptions:
    t_end: float
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_step: float = 0.05
    min_step: float = 1e-14
    extinction_floor: float = 1e-6
    record_stride: float = 1e-3

    def __post_init__(self):
        if not math.isfinite(self.t_end):
            raise InvalidOptions("t_end must be finite")
        for name in ("rel_tol", "abs_tol", "max_step", "min_step",
                     "extinction_floor", "record_stride"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise InvalidOptions(f"{name} must be finite and > 0, got {v}")
        if self.min_step >= self.max_step:
            raise InvalidOptions("min_step must be smaller than max_step")


class EventKind(Enum):
    RATIO_CROSSES_FOUR_THIRDS = "RatioCrossesFourThirds"
    SECTIONAL_CLASS_CHANGE = "SectionalClassChange"
    RICCI_EIGENVALUE_ZERO = "RicciEigenvalueZero"
    EXTINCTION = "Extinction"


@dataclass(frozen=True)
class TrajectoryPoint:
    t: float
    metric: Metric
    ricci: RicciData
    sectional: CurvatureClass
    signature: RicciSignature


@dataclass(frozen=True)
class FlowEvent:
    kind: EventKind
    t_lo: float
    t_hi: float
    state_at_t_hi: TrajectoryPoint
    index: Optional[int] = None  # eigenvalue index for RICCI_EIGENVALUE_ZERO


@dataclass
class Trajectory:
    kind: SpaceKind
    points: list[TrajectoryPoint] = field(default_factory=list)
    events: list[FlowEvent] = field(default_factory=list)

    @property
    def final(self) -> TrajectoryPoint:
        return self.points[-1]


def _make_point(t: float, x: tuple[float, float, float], kind: SpaceKind) -> TrajectoryPoint:
    m = Metric(x[0], x[1], x[2], kind)
    return TrajectoryPoint(
        t=t,
        metric=m,
        ricci=ricci_coefficients(m),
        sectional=classify_sectional(m),
        signature=ricci_signature(m),
    )


# Dormand-Prince 5(4) tableau.
_A = (
    (),
    (1.0 / 5.0,),
    (3.0 / 40.0, 9.0 / 40.0),
    (44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0),
    (19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0),
    (9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0),
    (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0),
)
_B5 = (35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0, 0.0)
# b5 - b4 (error-estimate weights, including the FSAL stage).
_E = (
    71.0 / 57600.0,
    0.0,
    -71.0 / 16695.0,
    71.0 / 1920.0,
    -17253.0 / 339200.0,
    22.0 / 525.0,
    -1.0 / 40.0,
)


def _rhs(x: tuple[float, float, float], d: int, sgn: float) -> tuple[float, float, float]:
    c = 10 * d - 8
    x1, x2, x3 = x
    p = x1 * x2 * x3
    n1 = d * x1 * x1 - d * x2 * x2 - d * x3 * x3 + c * x2 * x3
    n2 = d * x2 * x2 - d * x1 * x1 - d * x3 * x3 + c * x1 * x3
    n3 = d * x3 * x3 - d * x1 * x1 - d * x2 * x2 + c * x1 * x2
    return (-sgn * x1 * n1 / p, -sgn * x2 * n2 / p, -sgn * x3 * n3 / p)


def _try_step(x, k1, h, d, sgn):
    """One Dormand-Prince step of size h.  Returns (x_new, k7, err_est) or
    None if a stage left the positive octant."""
    ks = [k1]
    for stage in range(1, 6):
        a = _A[stage]
        y = tuple(
            x[i] + h * sum(a[j] * ks[j][i] for j in range(stage)) for i in range(3)
        )
        if min(y) <= 0.0:
            return None
        ks.append(_rhs(y, d, sgn))
    a = _A[6]
    x_new = tuple(x[i] + h * sum(a[j] * ks[j][i] for j in range(6)) for i in range(3))
    if min(x_new) <= 0.0 or not all(math.isfinite(v) for v in x_new):
        return None
    k7 = _rhs(x_new, d, sgn)
    ks.append(k7)
    err = tuple(h * sum(_E[j] * ks[j][i] for j in range(7)) for i in range(3))
    return x_new, k7, err


def _single_step(x, h, d, sgn):
    """A bare fifth-order step (no error control); used only inside event
    brackets whose width is already below an accepted step."""
    res = _try_step(x, _rhs(x, d, sgn), h, d, sgn)
    if res is None:
        raise StepSizeUnderflow(f"state left the positive octant inside a bracket at h={h}")
    return res[0]


def _integrate_raw(
    m0: Metric,
    opts: FlowOptions,
    on_accept: Callable[[float, tuple[float, float, float]], None],
) -> Optional[tuple[float, float, tuple[float, float, float]]]:
    """Drive the adaptive integrator from tau = 0 to |t_end|, invoking
    on_accept(tau, x) at every accepted step.  Returns the extinction
    bracket (tau_lo, tau_hi, x_at_tau_hi) if the floor was hit, else None.
    """
    d = m0.kind.d
    sgn = 1.0 if opts.t_end >= 0.0 else -1.0
    total = abs(opts.t_end)
    x = m0.as_tuple()
    if min(x) < opts.extinction_floor:
        return (0.0, 0.0, x)
    if total == 0.0:
        return None

    tau = 0.0
    k1 = _rhs(x, d, sgn)
    fnorm = max(abs(v) for v in k1)
    h = min(opts.max_step, total, 0.01 * max(min(x), opts.abs_tol) / max(fnorm, 1e-30))
    h = max(h, opts.min_step)
    err_prev = 1.0

    while tau < total:
        remaining = total - tau
        if remaining <= 1e-14 * max(1.0, total):
            break
        is_last = h >= remaining
        h = min(h, opts.max_step, remaining)
        if h < opts.min_step and remaining > opts.min_step:
            raise StepSizeUnderflow(f"step {h:.3e} below min_step at tau={tau:.6e}")
        res = _try_step(x, k1, h, d, sgn)
        if res is None:
            h *= 0.5
            continue
        x_new, k7, err_vec = res
        scale = tuple(
            opts.abs_tol + opts.rel_tol * max(abs(x[i]), abs(x_new[i])) for i in range(3)
        )
        err = math.sqrt(sum((err_vec[i] / scale[i]) ** 2 for i in range(3)) / 3.0)
        if err <= 1.0:
            if min(x_new) < opts.extinction_floor:
                lo, hi = 0.0, h
                x_hi = x_new
                while hi - lo > EVENT_BRACKET_WIDTH:
                    mid = 0.5 * (lo + hi)
                    x_mid = _single_step(x, mid, d, sgn)
                    if min(x_mid) < opts.extinction_floor:
                        hi, x_hi = mid, x_mid
                    else:
                        lo = mid
                on_accept(tau + hi, x_hi)
                return (tau + lo, tau + hi, x_hi)
            tau = total if is_last else tau + h
            x, k1 = x_new, k7
            on_accept(tau, x)
            if err == 0.0:
                fac = 5.0
            else:
                fac = 0.9 * err ** -0.14 * err_prev ** 0.08
            h *= min(5.0, max(0.2, fac))
            err_prev = max(err, 1e-10)
        else:
            h *= max(0.2, 0.9 * err ** -0.2)
    return None


def _signed(tau: float, sgn: float) -> float:
    return sgn * tau


def integrate(m0: Metric, opts: FlowOptions) -> Trajectory:
    """Integrate the flow from m0 to opts.t_end (negative t_end runs
    backward).  Points are recorded at the start, at accepted steps at
    least record_stride apart, and at the final state; classifications are
    recomputed from the metric at every recorded point."""
    sgn = 1.0 if opts.t_end >= 0.0 else -1.0
    traj = Trajectory(kind=m0.kind)
    traj.points.append(_make_point(0.0, m0.as_tuple(), m0.kind))
    last_rec = 0.0
    last_state = [0.0, m0.as_tuple()]

    def on_accept(tau, x):
        nonlocal last_rec
        last_state[0], last_state[1] = tau, x
        if tau - last_rec >= opts.record_stride:
            traj.points.append(_make_point(_signed(tau, sgn), x, m0.kind))
            last_rec = tau

    ext = _integrate_raw(m0, opts, on_accept)
    tau_f, x_f = last_state
    if not traj.points or traj.points[-1].t != _signed(tau_f, sgn):
        if tau_f > 0.0 or len(traj.points) == 0:
            traj.points.append(_make_point(_signed(tau_f, sgn), x_f, m0.kind))
    if ext is not None:
        tau_lo, tau_hi, x_hi = ext
        pt = _make_point(_signed(tau_hi, sgn), x_hi, m0.kind)
        traj.events.append(
            FlowEvent(EventKind.EXTINCTION, _signed(tau_lo, sgn), _signed(tau_hi, sgn), pt)
        )
        if traj.points[-1].t != pt.t:
            traj.points.append(pt)
    return traj


def _advance(x, dtau, d, sgn, opts: FlowOptions):
    """Error-controlled integration of a bare state over a tau interval."""
    if dtau <= 0.0:
        return x
    m = Metric(x[0], x[1], x[2], SpaceKind(d))
    sub = FlowOptions(
        t_end=sgn * dtau,
        rel_tol=opts.rel_tol,
        abs_tol=opts.abs_tol,
        max_step=opts.max_step,
        min_step=opts.min_step,
        extinction_floor=opts.extinction_floor / 2.0,
        record_stride=opts.record_stride,
    )
    out = [x]

    def on_accept(tau, y):
        out[0] = y

    _integrate_raw(m, sub, on_accept)
    return out[0]


def _indicators(kinds: set, kind: SpaceKind):
    """Scalar sign functions monitored for events."""
    funcs = []
    if EventKind.RATIO_CROSSES_FOUR_THIRDS in kinds:
        funcs.append((EventKind.RATIO_CROSSES_FOUR_THIRDS, None,
                      lambda x: x[2] / x[0] - 4.0 / 3.0))
    if EventKind.SECTIONAL_CLASS_CHANGE in kinds:
        funcs.append((EventKind.SECTIONAL_CLASS_CHANGE, None,
                      lambda x: sectional_margin(Metric(x[0], x[1], x[2], kind))))
    if EventKind.RICCI_EIGENVALUE_ZERO in kinds:
        for i in range(3):
            funcs.append((
                EventKind.RICCI_EIGENVALUE_ZERO, i + 1,
                lambda x, _i=i: ricci_coefficients(
                    Metric(x[0], x[1], x[2], kind)).eigenvalues()[_i],
            ))
    return funcs


def detect_events(m0: Metric, opts: FlowOptions, monitors: set) -> list[FlowEvent]:
    """Integrate the flow and report sign-change events for the requested
    monitor kinds, each bracketed in time to width <= 1e-9."""
    sgn = 1.0 if opts.t_end >= 0.0 else -1.0
    d = m0.kind.d
    samples: list[tuple[float, tuple[float, float, float]]] = [(0.0, m0.as_tuple())]

    def on_accept(tau, x):
        samples.append((tau, x))

    ext = _integrate_raw(m0, opts, on_accept)
    events: list[FlowEvent] = []

    for evk, index, ind in _indicators(monitors, m0.kind):
        for (tau_a, x_a), (tau_b, x_b) in zip(samples, samples[1:]):
            va, vb = ind(x_a), ind(x_b)
            if va == 0.0 or va * vb >= 0.0:
                continue
            lo, hi = 0.0, tau_b - tau_a
            x_hi = x_b
            while hi - lo > EVENT_BRACKET_WIDTH:
                mid = 0.5 * (lo + hi)
                x_mid = _advance(x_a, mid, d, sgn, opts)
                if (ind(x_mid) < 0.0) == (va < 0.0):
                    lo = mid
                else:
                    hi, x_hi = mid, x_mid
            pt = _make_point(_signed(tau_a + hi, sgn), x_hi, m0.kind)
            events.append(FlowEvent(evk, _signed(tau_a + lo, sgn),
                                    _signed(tau_a + hi, sgn), pt, index=index))

    if EventKind.EXTINCTION in monitors and ext is not None:
        tau_lo, tau_hi, x_hi = ext
        pt = _make_point(_signed(tau_hi, sgn), x_hi, m0.kind)
        events.append(FlowEvent(EventKind.EXTINCTION, _signed(tau_lo, sgn),
                                _signed(tau_hi, sgn), pt))
    events.sort(key=lambda e: abs(e.t_hi))
    return events


def ratio_trace(m0: Metric, opts: FlowOptions) -> list[tuple[float, float]]:
    """Sample q(t) = x3(t)/x1(t) along a flow started on the slice x1 = x2.

    Raises NotOnEqualPairSlice unless x1 and x2 agree to relative 1e-9; the
    slice condition is asserted at every accepted step.
    """
    if abs(m0.x1 - m0.x2) > EQUAL_PAIR_RTOL * max(m0.x1, m0.x2):
        raise NotOnEqualPairSlice(f"x1={m0.x1} and x2={m0.x2} differ beyond tolerance")
    sgn = 1.0 if opts.t_end >= 0.0 else -1.0
    out = [(0.0, m0.x3 / m0.x1)]

    def on_accept(tau, x):
        if abs(x[0] - x[1]) > 1e-8 * max(abs(x[0]), abs(x[1])):
            raise NotOnEqualPairSlice(
                f"flow left the x1 = x2 slice at t={_signed(tau, sgn)}"
            )
        out.append((_signed(tau, sgn), x[2] / x[0]))

    _integrate_raw(m0, opts, on_accept)
    return out
