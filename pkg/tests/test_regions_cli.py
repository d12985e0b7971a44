import json

import pytest

from wallachflow import (
    SU3,
    FlowOptions,
    Metric,
    integrate,
    sample_curves,
    sample_regions,
    valiev_bound,
)
from wallachflow import emit
from wallachflow.cli import main
from wallachflow.regions import CURVE_IDS, InvalidGridSpec


def small_grid():
    return sample_regions(0.1, 0.9, 9, 0.0, 0.4, 9)


def test_grid_shape_and_order():
    grid = small_grid()
    assert len(grid.cells) == 81
    # row-major: s varies slowest
    ss = [c.s for c in grid.cells]
    assert ss == sorted(ss)
    assert grid.cells[0].s == grid.cells[8].s != grid.cells[9].s


def test_grid_validation():
    with pytest.raises(InvalidGridSpec):
        sample_regions(0.0, 0.9, 10, 0.0, 0.4, 10)
    with pytest.raises(InvalidGridSpec):
        sample_regions(0.1, 0.9, 10, 0.5, 0.4, 10)
    with pytest.raises(InvalidGridSpec):
        sample_regions(0.1, 0.9, 0, 0.0, 0.4, 10)


def test_known_cell_classification():
    grid = sample_regions(0.5, 0.6, 2, 0.05, 0.1, 2)
    cell = grid.cells[0]
    assert (cell.s, cell.r) == (0.5, 0.05)
    assert cell.sectional == "StrictlyPositive"
    for d in (2, 4, 8):
        assert cell.ricci_positive(d)


def test_region_curve_coherence():
    grid = small_grid()
    ds = (0.4 - 0.0) / 8  # one r-cell
    for c in grid.cells:
        bound = valiev_bound(c.s)
        if c.r < bound - ds:
            assert c.sectional == "StrictlyPositive"
        elif c.r > bound + ds:
            assert c.sectional in ("Mixed", "NonnegativeBoundary")


def test_curve_stacking():
    curves = {c.curve_id: c.points for c in sample_curves(0.01, 0.99, 150)}
    assert set(curves) == set(CURVE_IDS)
    for i in range(150):
        s, v = curves["valiev"][i]
        r2 = curves["ricci_d2"][i][1]
        r4 = curves["ricci_d4"][i][1]
        r8 = curves["ricci_d8"][i][1]
        assert v < r2 < r4 < r8


def test_curves_sorted_by_s():
    for c in sample_curves(0.2, 0.8, 20):
        ss = [s for s, _ in c.points]
        assert ss == sorted(ss)


def test_emit_region_csv_header_and_determinism():
    grid = small_grid()
    text1 = emit.region_csv(grid)
    text2 = emit.region_csv(small_grid())
    assert text1 == text2
    assert text1.splitlines()[0] == "s,r,sectional,ricci_d2,ricci_d4,ricci_d8"
    assert text1.endswith("\n") and "\r" not in text1


def test_region_json_round_trip():
    grid = small_grid()
    assert emit.parse_region_json(emit.region_json(grid)) == grid


def test_trajectory_csv_schema():
    traj = integrate(Metric(1.0, 1.0, 1.0, SU3), FlowOptions(t_end=0.01))
    text = emit.trajectory_csv(traj)
    lines = text.splitlines()
    assert lines[0] == "t,x1,x2,x3,rho1,rho2,rho3,sectional,ricci_sig"
    first = lines[1].split(",")
    assert float(first[0]) == 0.0
    assert first[7] == "NonnegativeBoundary"
    assert first[8] == "6:0:0"


def test_curves_json_schema():
    curves = sample_curves(0.2, 0.8, 5)
    obj = json.loads(emit.curves_json(curves))
    assert set(obj) == set(CURVE_IDS)
    for pts in obj.values():
        assert len(pts) == 5 and len(pts[0]) == 2


def test_cli_classify(capsys):
    code = main(["classify", "--d", "2", "--x1", "1", "--x2", "1", "--x3", "1.5"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["sectional"] == "Mixed"
    assert out["ricci_signature"] == [6, 0, 0]
    assert "witness" in out


def test_cli_probe_plane(capsys):
    code = main(["probe-plane", "--t", "0", "--x", "1"])
    assert code == 0
    assert float(capsys.readouterr().out) == pytest.approx(2.0)


def test_cli_thresholds(capsys):
    code = main(["thresholds", "--space", "su3"])
    assert code == 0
    out = json.loads(capsys.readouterr().out)
    assert out["d"] == 2
    assert out["s_star"] == pytest.approx(0.20943058, abs=1e-7)
    assert abs(out["s_star"] - out["closed_form"]) < 1e-10


def test_cli_flow_writes_file_and_prints_events(tmp_path, capsys):
    out = tmp_path / "traj.csv"
    code = main([
        "flow", "--d", "2", "--x1", "1", "--x2", "1", "--x3", "1",
        "--t-end", "1.0", "--out", str(out),
    ])
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("t,x1,x2,x3")
    printed = capsys.readouterr().out
    assert "Extinction" in printed


def test_cli_roots_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        code = main(["roots", "--s-range", "0.1:0.9:50", "--format", "json", "--out", str(path)])
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_regions_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        code = main(["regions", "--grid", "0.1:0.9:12,0.0:0.4:12", "--out", str(path)])
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().splitlines()[0] == "s,r,sectional,ricci_d2,ricci_d4,ricci_d8"


def test_cli_invalid_arguments_exit_2():
    assert main(["classify", "--d", "2", "--x1", "-1", "--x2", "1", "--x3", "1"]) == 2
    assert main(["regions", "--grid", "nonsense"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--d", "5", "--x1", "1", "--x2", "1", "--x3", "1"])
    assert exc.value.code == 2


def test_cli_roots_per_space(capsys):
    code = main(["roots", "--space", "f4", "--s-range", "0.2:0.8:4", "--format", "json"])
    assert code == 0
    obj = json.loads(capsys.readouterr().out)
    assert set(obj) == {"valiev", "ricci_d8"}
