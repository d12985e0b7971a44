"""Drive a positive-definite Ricci tensor to indefinite signature.

For each space, pick s below the critical threshold s*, start on the zero
curve (1, 1 + r(s), s) where the first Ricci eigenvalue vanishes, and flow
both ways: the signature goes (3d, 0, 0) -> (2d, d, 0) -> (2d, 0, d).
The zero crossing itself is located to a 1e-9 time bracket.
"""

from wallachflow import (
    ALL_KINDS,
    EventKind,
    FlowOptions,
    Metric,
    boundary_root,
    critical_threshold,
    detect_events,
    dr1_along_flow,
    integrate,
)


def main():
    for kind in ALL_KINDS:
        d = kind.d
        s_star = critical_threshold(kind)
        s = s_star / 2.0
        r = boundary_root(s, kind)
        m0 = Metric(1.0, 1.0 + r, s, kind)
        print(f"=== d = {d}: s* = {s_star:.8f}, experiment at s = {s:.6f}, r = {r:.6f} ===")
        print(f"  dr1/dt along flow at the zero curve: {dr1_along_flow(m0):+.4f} (negative below s*)")

        for t_end in (-1e-3, 1e-3):
            sig = integrate(m0, FlowOptions(t_end=t_end, record_stride=1.0)).final.signature
            print(f"  t = {t_end:+.0e}: signature (pos, zero, neg) = {sig.as_tuple()}")

        # nudge just below the curve and watch the eigenvalue cross zero
        m_below = Metric(1.0, 1.0 + r - 1e-6, s, kind)
        events = detect_events(m_below, FlowOptions(t_end=0.01),
                               {EventKind.RICCI_EIGENVALUE_ZERO})
        for e in events:
            if e.index == 1:
                print(f"  rho_1 = 0 crossed at t in [{e.t_lo:.3e}, {e.t_hi:.3e}]")
        print()


if __name__ == "__main__":
    main()
