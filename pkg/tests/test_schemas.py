import pytest
from pydantic import ValidationError

from hyposharp.schemas import FailedCondition, MatrixPayload, Verdict, WitnessAssignment


class TestVerdict:
    def test_failure_round_trip(self):
        verdict = Verdict(
            holds=False,
            monoid="hypo3",
            identity="x ≈ y",
            failed_condition=FailedCondition(clause="(i)", pair=["x"], detail="occ differs"),
        )
        assert Verdict.model_validate_json(verdict.model_dump_json()) == verdict

    def test_holding_verdict_has_no_failure(self):
        with pytest.raises(ValidationError):
            Verdict(holds=True, monoid="C", failed_condition=FailedCondition(clause="(ii)", pair=["x", "y"]))

    def test_holding_verdict_has_no_witness(self):
        with pytest.raises(ValidationError):
            Verdict(holds=True, monoid="a01", witness_assignment=WitnessAssignment(model="a01", assignment={"x": "a"}))

    def test_optional_fields_default_to_none(self):
        verdict = Verdict(holds=True, monoid="hypoN")
        assert verdict.identity is None
        assert verdict.model_dump()["failed_condition"] is None


class TestMatrixPayload:
    def test_mixed_entries(self):
        payload = MatrixPayload(dim=2, entries=[[1, "-inf"], ["-inf", 0]])
        assert payload.semiring == "tropical"
        assert payload.entries[0][1] == "-inf"
