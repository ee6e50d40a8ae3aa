import numpy as np
import pytest

from threetangle.families import (
    RANK4,
    RANK5,
    RANK6,
    RANK7,
    RANK8,
    balanced_background_ensemble,
    decomposition,
    family_state,
    optimal_decomposition,
    published_sign_patterns,
    stabilizer_sign_rows,
    tangle_curve,
    tau3_family,
)
from threetangle.qstate import density_from_ensemble
from threetangle.tangle import (
    three_tangle_pure,
    unnormalized_three_tangle,
    z_amplitudes,
)
from threetangle.utils.exceptions import DomainError, UnsupportedFamilyError


def _average_tangle(ensemble):
    return sum(
        member.weight * three_tangle_pure(member.state)
        for member in ensemble.members
    )


def _max_residual(ensemble, rho):
    reconstructed = density_from_ensemble(ensemble).entries
    return np.max(np.abs(reconstructed - rho.entries))


class TestSignPatterns:
    @pytest.mark.parametrize("family", [RANK4, RANK5, RANK7], ids=str)
    def test_printed_rows_are_kept(self, family):
        pattern = published_sign_patterns(family)
        assert not pattern.corrected
        assert pattern.replaced_rows == ()

    @pytest.mark.parametrize("family", [RANK6, RANK8], ids=str)
    def test_printed_rows_are_corrected(self, family):
        pattern = published_sign_patterns(family)
        assert pattern.corrected
        assert pattern.replaced_rows

    def test_correction_is_logged(self, mocker):
        mocker.patch.dict(decomposition._PATTERNS, clear=True)
        warning = mocker.patch.object(decomposition.logger, "warning")
        published_sign_patterns(RANK6)
        warning.assert_called_once()
        assert "rank6" in warning.call_args.args[0]

    def test_patterns_are_valid(self, family):
        pattern = published_sign_patterns(family)
        assert len(pattern.rows) == 8
        assert len(set(pattern.rows)) == 8
        assert pattern.is_column_orthogonal()
        tangles = unnormalized_three_tangle(
            z_amplitudes(family, 0.6, pattern.phases())
        )
        assert np.ptp(tangles) < 1e-12

    def test_stabilizer_rows(self, family):
        rows = stabilizer_sign_rows(family)
        assert len(rows) == 8
        assert rows[0] == (1,) * family.phase_count
        phases = np.where(np.array(rows) < 0, np.pi, 0.0)
        tangles = unnormalized_three_tangle(z_amplitudes(family, 0.4, phases))
        assert np.ptp(tangles) < 1e-12


class TestBalancedBackground:
    def test_reproduces_background(self):
        members = balanced_background_ensemble(RANK4)
        assert len(members) == 8
        rho = sum(w * np.outer(s, s.conj()) for w, s in members)
        np.testing.assert_allclose(
            rho, family_state(RANK4, 0.0).entries, atol=1e-12
        )

    def test_members_have_no_tangle(self):
        members = balanced_background_ensemble(RANK4)
        amplitudes = np.array([state for _, state in members])
        np.testing.assert_allclose(
            unnormalized_three_tangle(amplitudes), 0.0, atol=1e-12
        )

    def test_requires_equal_mixture(self):
        with pytest.raises(UnsupportedFamilyError, match="equal"):
            balanced_background_ensemble(RANK5)


class TestOptimalDecomposition:
    def test_reconstructs_state_and_tangle(self, family):
        for x in np.linspace(0.0, 1.0, 50):
            ensemble = optimal_decomposition(family, float(x))
            rho = family_state(family, float(x))
            assert _max_residual(ensemble, rho) <= 1e-12
            assert _average_tangle(ensemble) == pytest.approx(
                tau3_family(family, float(x)), abs=1e-9
            )

    def test_g_one_region_uses_eight_states(self, family):
        curve = tangle_curve(family)
        ensemble = optimal_decomposition(family, (curve.x0 + curve.x1) / 2)
        assert len(ensemble) == 8
        np.testing.assert_allclose(ensemble.weights, 1 / 8)

    def test_pure_endpoint(self, family):
        ensemble = optimal_decomposition(family, 1.0)
        assert len(ensemble) == 1
        np.testing.assert_allclose(
            ensemble.states[0].amplitudes, family.lead_vector()
        )
        assert _average_tangle(ensemble) == pytest.approx(1.0)

    def test_chord_region_adds_lead(self):
        ensemble = optimal_decomposition(RANK5, 0.99)
        assert len(ensemble) == 9

    def test_rank4(self):
        x = 0.1
        ensemble = optimal_decomposition(RANK4, x)
        assert _max_residual(ensemble, family_state(RANK4, x)) <= 1e-12
        assert _average_tangle(ensemble) == pytest.approx(0.0, abs=1e-9)

    def test_rank4_beyond_vanishing_point(self):
        with pytest.raises(DomainError):
            optimal_decomposition(RANK4, 0.5)
