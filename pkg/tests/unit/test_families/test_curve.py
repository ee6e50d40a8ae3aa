import numpy as np
import pytest

from threetangle.families import (
    PUBLISHED_CONSTANTS,
    RANK4,
    RANK5,
    RANK8,
    FamilySpec,
    curve_region,
    family_by_id,
    find_x0,
    find_x1,
    find_xstar,
    g_one,
    g_one_derivative,
    p1_closed_form,
    p1_stationarity,
    rank4_vanishing_point,
    tangle_curve,
    tau3_family,
)
from threetangle.models import CurveRegion
from threetangle.utils.exceptions import DomainError, UnsupportedFamilyError


class TestTransitionConstants:
    def test_rank4_vanishing_point(self):
        assert find_x0(RANK4) == pytest.approx(
            (2 - np.sqrt(3)) / 2, abs=1e-12
        )
        assert rank4_vanishing_point() == pytest.approx(0.134, abs=5e-5)

    def test_x0_matches_published(self, family):
        published = PUBLISHED_CONSTANTS[family.name]["x0"]
        assert find_x0(family) == pytest.approx(published, abs=5e-4)

    @pytest.mark.parametrize("name", ["rank5", "rank6", "rank7"])
    def test_x1_matches_published(self, name):
        published = PUBLISHED_CONSTANTS[name]["x1"]
        assert find_x1(family_by_id(name)) == pytest.approx(
            published, abs=5e-4
        )

    def test_rank8_x1_is_tangent_point(self):
        # the printed rank8 value does not satisfy the tangent condition
        x1 = find_x1(RANK8)
        residual = (1 - x1) * g_one_derivative(RANK8, x1) + g_one(RANK8, x1)
        assert residual == pytest.approx(1.0, abs=1e-9)
        assert find_x0(RANK8) < x1 < find_xstar(RANK8)

    def test_rank5_x1_closed_form(self):
        assert find_x1(RANK5) == pytest.approx(p1_closed_form(), abs=1e-9)
        assert p1_stationarity(p1_closed_form()) == pytest.approx(
            73.0, abs=1e-6
        )

    def test_rank5_xstar(self):
        assert find_xstar(RANK5) == pytest.approx(0.975, abs=1e-3)

    def test_x1_before_xstar(self, family):
        curve = tangle_curve(family)
        assert curve.xstar is not None
        assert curve.x0 < curve.x1 <= curve.xstar < 1
        assert curve.x1_within_convex_part

    def test_custom_family_is_rejected(self):
        custom = FamilySpec(
            name="custom",
            rank=RANK5.rank,
            lead=RANK5.lead,
            background=RANK5.background,
        )
        with pytest.raises(UnsupportedFamilyError, match="built-in"):
            find_x0(custom)


class TestGOne:
    def test_value_at_one(self, family):
        assert g_one(family, 1.0) == pytest.approx(1.0)

    def test_vanishes_at_x0(self, family):
        assert g_one(family, find_x0(family)) == pytest.approx(0.0, abs=1e-9)

    def test_negative_below_x0(self):
        assert g_one(RANK5, 0.5) < 0

    def test_vectorized(self, family):
        grid = np.linspace(0, 1, 11)
        values = g_one(family, grid)
        assert values.shape == (11,)
        assert values[-1] == pytest.approx(1.0)

    def test_rank4_has_no_g_one(self):
        with pytest.raises(UnsupportedFamilyError, match="rank-4"):
            g_one(RANK4, 0.5)

    def test_domain(self):
        with pytest.raises(DomainError):
            g_one(RANK5, 1.5)

    def test_derivative_domain(self):
        with pytest.raises(DomainError):
            g_one_derivative(RANK5, 0.0)


class TestPiecewiseTangleCurve:
    def test_is_cached(self, family):
        assert tangle_curve(family) is tangle_curve(family)

    def test_endpoints(self, family):
        curve = tangle_curve(family)
        assert curve(0.0) == 0.0
        assert curve(1.0) == pytest.approx(1.0, abs=1e-12)
        assert curve.g_two(1.0) == pytest.approx(1.0, abs=1e-12)

    def test_continuous_at_breakpoints(self, family):
        curve = tangle_curve(family)
        for x in (curve.x0, curve.x1):
            left = curve(x - 1e-9)
            right = curve(x + 1e-9)
            assert left == pytest.approx(right, abs=1e-7)
        assert curve.g_two(curve.x1) == pytest.approx(
            curve.g_one_at_x1, abs=1e-12
        )

    def test_convex(self, family):
        values = tangle_curve(family)(np.linspace(0, 1, 1000))
        assert np.all(np.diff(values, 2) >= -1e-10)

    def test_chord_below_g_one(self, family):
        curve = tangle_curve(family)
        grid = np.linspace(curve.x0, 1.0, 500)
        assert np.all(curve.g_two(grid) <= g_one(family, grid) + 1e-10)

    def test_regions(self, family):
        curve = tangle_curve(family)
        assert curve.region(0.0) is CurveRegion.ZERO
        assert curve.region(curve.x0) is CurveRegion.ZERO
        assert curve.region((curve.x0 + curve.x1) / 2) is CurveRegion.G_ONE
        assert curve.region(1.0) is CurveRegion.G_TWO

    def test_chord_value(self):
        curve = tangle_curve(RANK5)
        x1, g1 = curve.x1, curve.g_one_at_x1
        expected = (0.98 - x1) / (1 - x1) + 0.02 / (1 - x1) * g1
        assert tau3_family(RANK5, 0.98) == pytest.approx(expected, abs=1e-12)


class TestTau3Family:
    def test_zero_region(self, family):
        assert tau3_family(family, find_x0(family) / 2) == 0.0

    def test_g_one_region(self):
        assert tau3_family(RANK8, 0.5) == pytest.approx(
            g_one(RANK8, 0.5), abs=1e-12
        )

    def test_rank4_established_range(self):
        assert tau3_family(RANK4, 0.1) == 0.0
        assert curve_region(RANK4, 0.1) is CurveRegion.ZERO

    def test_rank4_beyond_vanishing_point(self):
        with pytest.raises(DomainError, match="only established"):
            tau3_family(RANK4, 0.5)

    @pytest.mark.parametrize("x", [-0.01, 1.01, float("nan")])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            tau3_family(RANK5, x)
