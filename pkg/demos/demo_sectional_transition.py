"""Walk the flow through the positive -> mixed sectional-curvature transition.

Starting exactly on the boundary metric (1, 1, 4/3) of each space, the
ratio q = x3/x1 grows along the flow, so a short backward run lands in the
strictly positive region while a short forward run produces mixed
curvature.  A probe plane with explicitly negative curvature certifies the
forward verdict.
"""

from wallachflow import (
    ALL_KINDS,
    FlowOptions,
    Metric,
    classify_sectional,
    integrate,
    plane_curvature,
    ratio_trace,
)


def main():
    for kind in ALL_KINDS:
        d = kind.d
        m0 = Metric(1.0, 1.0, 4.0 / 3.0, kind)
        print(f"=== d = {d} (dim {kind.total_dim}), start at (1, 1, 4/3) ===")

        trace = ratio_trace(m0, FlowOptions(t_end=1e-6))
        (t0, q0), (t1, q1) = trace[0], trace[-1]
        print(f"  dq/dt at t=0  ~ {(q1 - q0) / (t1 - t0):+.6f}"
              f"   (analytic (4/3)(4d/3 - 2) = {(4 / 3) * (4 * d / 3 - 2):+.6f})")

        for t_end in (-0.01, 0.01):
            final = integrate(m0, FlowOptions(t_end=t_end)).final
            cls = final.sectional
            q = final.metric.x3 / final.metric.x1
            line = f"  t = {t_end:+.3f}: q = {q:.6f}, sectional = {cls.tag.value}"
            if cls.witness is not None:
                line += f", witness plane curvature = {plane_curvature(cls.witness):.3e}"
            print(line)

        # the same verdicts straight from the classifier, without flowing
        for q in (1.30, 4.0 / 3.0, 1.37):
            tag = classify_sectional(Metric(1.0, 1.0, q, kind)).tag.value
            print(f"  classify (1, 1, {q:.4f}) -> {tag}")
        print()


if __name__ == "__main__":
    main()
