"""Regenerate the (s, r) region picture as CSV/JSON plus an ASCII sketch.

The plane of normalized metrics (1, 1+r, s) splits into four nested
regions: strictly positive sectional curvature below the Valiev curve, and
positive-definite Ricci below the per-space zero curves (d = 2, 4, 8
stacked in that order above it).  Files land in the current directory.
"""

from wallachflow import emit, sample_curves, sample_regions


def main():
    grid = sample_regions(s_min=0.05, s_max=0.95, n_s=60, r_min=0.0, r_max=0.45, n_r=24)
    curves = sample_curves(s_min=0.05, s_max=0.95, n_s=60)

    with open("regions.csv", "w", newline="\n") as fh:
        fh.write(emit.region_csv(grid))
    with open("curves.json", "w", newline="\n") as fh:
        fh.write(emit.curves_json(curves))
    print("wrote regions.csv and curves.json")

    by_id = {c.curve_id: dict(c.points) for c in curves}
    print("\ncurve stacking r(s) at a few s values:")
    print(f"  {'s':>5} {'valiev':>9} {'ricci_d2':>9} {'ricci_d4':>9} {'ricci_d8':>9}")
    for s in (0.1, 0.3, 0.5, 0.7, 0.9):
        s_key = min(by_id["valiev"], key=lambda v: abs(v - s))
        row = [by_id[c][s_key] for c in ("valiev", "ricci_d2", "ricci_d4", "ricci_d8")]
        print(f"  {s_key:5.2f} " + " ".join(f"{v:9.5f}" for v in row))

    # ASCII view of the sectional classification (. positive, # mixed)
    print("\nsectional curvature map (r grows upward, s rightward):")
    rows = {}
    for cell in grid.cells:
        rows.setdefault(cell.r, {})[cell.s] = "." if cell.sectional == "StrictlyPositive" else "#"
    for r in sorted(rows, reverse=True):
        print(f"  r={r:5.3f} " + "".join(rows[r][s] for s in sorted(rows[r])))


if __name__ == "__main__":
    main()
