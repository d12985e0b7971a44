import itertools
import math

import numpy as np
import pytest

from wallachflow import (
    ALL_KINDS,
    SU3,
    CurvatureTag,
    Metric,
    PlaneProbe,
    classify_equal_pair,
    classify_sectional,
    negativity_window,
    plane_curvature,
    remark_bounds,
    valiev_bound,
)


def test_plane_curvature_round_point():
    for x in (0.0, 0.5, 3.0):
        assert plane_curvature(PlaneProbe(0.0, x)) == pytest.approx(2.0, rel=1e-15)


def test_plane_curvature_zero_at_third():
    assert plane_curvature(PlaneProbe(1.0 / 3.0, 0.0)) == pytest.approx(0.0, abs=1e-15)


def test_plane_curvature_rejects_degenerate_metric():
    with pytest.raises(ValueError):
        plane_curvature(PlaneProbe(-1.0, 0.1))
    with pytest.raises(ValueError):
        PlaneProbe(0.1, -0.5)


def test_negativity_window_values():
    assert negativity_window(1.0) == pytest.approx(math.sqrt(3.0 / (1.0 + (13.0 / 3.0) ** 2)), rel=1e-15)
    assert negativity_window(1.0) == pytest.approx(0.38947, abs=5e-5)
    assert negativity_window(1e-12) < 2e-6
    with pytest.raises(ValueError):
        negativity_window(0.0)


def test_negativity_window_certifies_negative_planes():
    rng = np.random.default_rng(5)
    for _ in range(500):
        sigma = float(rng.uniform(1e-4, 5.0))
        end = negativity_window(sigma)
        x = float(rng.uniform(1e-9, 1.0)) * end * (1.0 - 1e-9)
        if x == 0.0:
            continue
        assert plane_curvature(PlaneProbe(1.0 / 3.0 + sigma, x)) < 0.0
    # just inside the endpoint is still negative
    assert plane_curvature(PlaneProbe(1.0 / 3.0 + 1.0, negativity_window(1.0) * (1.0 - 1e-6))) < 0.0
    # halfway into the window at small sigma
    sig = 0.01
    assert plane_curvature(PlaneProbe(1.0 / 3.0 + sig, negativity_window(sig) / 2.0)) < 0.0


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_classify_equal_pair_regions(kind):
    assert classify_equal_pair(0.5, kind).tag is CurvatureTag.STRICTLY_POSITIVE
    assert classify_equal_pair(1.2, kind).tag is CurvatureTag.STRICTLY_POSITIVE
    assert classify_equal_pair(1.0, kind).tag is CurvatureTag.NONNEGATIVE_BOUNDARY
    assert classify_equal_pair(4.0 / 3.0, kind).tag is CurvatureTag.NONNEGATIVE_BOUNDARY
    assert classify_equal_pair(1.5, kind).tag is CurvatureTag.MIXED
    with pytest.raises(ValueError):
        classify_equal_pair(0.0, kind)


def test_classify_equal_pair_witness_is_sound():
    rng = np.random.default_rng(6)
    for _ in range(300):
        q = 4.0 / 3.0 + float(rng.uniform(1e-6, 4.0))
        cls = classify_equal_pair(q, SU3)
        assert cls.tag is CurvatureTag.MIXED
        assert cls.witness is not None
        assert cls.witness.t_param == pytest.approx(q - 1.0)
        assert plane_curvature(cls.witness) < 0.0


def test_valiev_bound_values():
    assert valiev_bound(1.0 - 1e-12) == pytest.approx(1.0 / 3.0, abs=1e-9)
    assert valiev_bound(0.5) == pytest.approx((-1.5 + math.sqrt(3.0)) / 3.0, rel=1e-15)
    assert valiev_bound(0.5) == pytest.approx(0.07735, abs=5e-6)
    for bad in (0.0, 1.0, -0.3, 1.7):
        with pytest.raises(ValueError):
            valiev_bound(bad)


def test_remark_bounds_sandwich_and_monotone():
    ss = np.linspace(1e-6, 1.0 - 1e-6, 1000)
    prev = -1.0
    for s in ss:
        lo, mid, hi = remark_bounds(float(s))
        assert lo < mid < hi
        assert mid > prev
        prev = mid
    lo, mid, hi = remark_bounds(0.5)
    assert (lo, hi) == (0.0625, pytest.approx(1.0 / 12.0, rel=1e-15))
    tiny = remark_bounds(1e-9)
    assert max(tiny) < 1e-15


def test_classify_sectional_examples():
    assert classify_sectional(Metric(1.0, 1.05, 0.8, SU3)).tag is CurvatureTag.STRICTLY_POSITIVE
    assert classify_sectional(Metric(1.0, 1.4, 0.8, SU3)).tag is CurvatureTag.MIXED
    # equal-pair dispatch
    assert classify_sectional(Metric(1.0, 1.0, 1.5, SU3)).tag is CurvatureTag.MIXED
    assert classify_sectional(Metric(1.0, 1.0, 0.5, SU3)).tag is CurvatureTag.STRICTLY_POSITIVE
    assert classify_sectional(Metric(2.0, 2.0, 2.0, SU3)).tag is CurvatureTag.NONNEGATIVE_BOUNDARY
    # boundary hit exactly
    s = 0.6
    assert classify_sectional(Metric(1.0, 1.0 + valiev_bound(s), s, SU3)).tag is CurvatureTag.NONNEGATIVE_BOUNDARY


@pytest.mark.parametrize("kind", ALL_KINDS)
def test_classify_sectional_permutation_and_scale_invariant(kind):
    rng = np.random.default_rng(21 + kind.d)
    perms = list(itertools.permutations((1, 2, 3)))
    for _ in range(300):
        xs = rng.uniform(0.4, 2.2, size=3)
        m = Metric(float(xs[0]), float(xs[1]), float(xs[2]), kind)
        tag = classify_sectional(m).tag
        for perm in perms:
            assert classify_sectional(m.permuted(perm)).tag is tag
        for c in (0.1, 4.0):
            assert classify_sectional(m.scaled(c)).tag is tag


def test_classify_sectional_seam_with_equal_pair():
    # as r -> 0+ the generic verdict converges to the equal-pair one for s < 1
    for s in (0.2, 0.5, 0.9):
        for r in (1e-3, 1e-6):
            tag = classify_sectional(Metric(1.0, 1.0 + r, s, SU3)).tag
            assert tag is CurvatureTag.STRICTLY_POSITIVE
        assert classify_equal_pair(s, SU3).tag is CurvatureTag.STRICTLY_POSITIVE


def test_equal_pair_pairs_other_than_first_two():
    # rotate the equal pair through all slots: verdict must not depend on it
    for q, want in ((0.5, CurvatureTag.STRICTLY_POSITIVE), (1.6, CurvatureTag.MIXED)):
        for m in (
            Metric(1.0, 1.0, q, SU3),
            Metric(1.0, q, 1.0, SU3),
            Metric(q, 1.0, 1.0, SU3),
        ):
            assert classify_sectional(m).tag is want
