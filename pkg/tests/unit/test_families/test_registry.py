from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from threetangle.families import (
    BUILTIN_FAMILIES,
    RANK5,
    FamilySpec,
    family_by_id,
    family_state,
)
from threetangle.models import BackgroundTerm
from threetangle.qstate import GhzLabel, ghz_basis, numerical_rank
from threetangle.utils.exceptions import DomainError, UnsupportedFamilyError


class TestRegistry:
    def test_builtin_ids(self):
        assert list(BUILTIN_FAMILIES) == [
            "rank4",
            "rank5",
            "rank6",
            "rank7",
            "rank8",
        ]

    def test_lookup_is_case_insensitive(self):
        assert family_by_id(" Rank5 ") is RANK5

    def test_unknown_family(self):
        with pytest.raises(UnsupportedFamilyError, match="known families"):
            family_by_id("rank9")

    def test_ranks_match_background(self, all_families):
        for family in all_families:
            assert family.rank == 1 + family.phase_count
            assert sum(term.weight for term in family.background) == 1

    def test_rank5_background(self):
        assert [str(label) for label in RANK5.background_labels] == [
            "1-",
            "2+",
            "3+",
            "4+",
        ]
        assert RANK5.background[0].weight == Fraction(1, 10)


class TestFamilySpec:
    def _term(self, weight, label):
        return BackgroundTerm(weight=weight, label=GhzLabel.parse(label))

    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValidationError, match="sum to"):
            FamilySpec(
                name="custom",
                rank=4,
                lead=GhzLabel.parse("1+"),
                background=(
                    self._term("1/3", "2+"),
                    self._term("1/3", "3+"),
                    self._term("1/4", "4+"),
                ),
            )

    def test_rank_must_match(self):
        with pytest.raises(ValidationError, match="background states"):
            FamilySpec(
                name="custom",
                rank=5,
                lead=GhzLabel.parse("1+"),
                background=(
                    self._term("1/2", "2+"),
                    self._term("1/2", "3+"),
                ),
            )

    def test_repeated_label(self):
        with pytest.raises(ValidationError, match="repeats"):
            FamilySpec(
                name="custom",
                rank=4,
                lead=GhzLabel.parse("1+"),
                background=(
                    self._term("1/3", "1+"),
                    self._term("1/3", "3+"),
                    self._term("1/3", "4+"),
                ),
            )


class TestFamilyState:
    def test_rank(self, all_families):
        for family in all_families:
            rho = family_state(family, 0.5)
            assert numerical_rank(rho.entries) == family.rank

    def test_is_ghz_diagonal(self, family):
        basis = ghz_basis()
        rho = family_state(family, 0.3).entries
        in_basis = basis.conj() @ rho @ basis.T
        np.testing.assert_allclose(
            in_basis, np.diag(np.diag(in_basis)), atol=1e-15
        )
        lead = family.lead.position
        assert in_basis[lead, lead].real == pytest.approx(0.3)

    def test_endpoint_is_pure(self, family):
        rho = family_state(family, 1.0)
        assert numerical_rank(rho.entries) == 1

    def test_out_of_range(self):
        with pytest.raises(DomainError):
            family_state(RANK5, 1.2)
