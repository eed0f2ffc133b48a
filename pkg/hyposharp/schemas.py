from typing import Dict, List, Optional, Union

from pydantic import BaseModel, model_validator

MatrixEntry = Union[int, str]


class FailedCondition(BaseModel):
    clause: str  # Label of the violated clause, e.g. "(ii)(b)" or "balanced"
    pair: List[str]  # Symbols or occurrences witnessing the failure
    detail: str = ""  # Human readable explanation


class WitnessAssignment(BaseModel):
    model: str  # Finite model the identity was refuted in (a01, b, c, c_circ)
    assignment: Dict[str, str]  # Variable -> element label


class Verdict(BaseModel):
    holds: bool
    monoid: str  # Checker tag, e.g. "hypoN"
    identity: Optional[str] = None  # The identity as checked, "u ≈ v"
    failed_condition: Optional[FailedCondition] = None
    witness_assignment: Optional[WitnessAssignment] = None

    @model_validator(mode="after")
    def _holds_has_no_failure(self) -> "Verdict":
        if self.holds and (self.failed_condition or self.witness_assignment):
            raise ValueError("a holding verdict cannot carry a failed condition or witness")
        return self


class MatrixPayload(BaseModel):
    dim: int
    semiring: str = "tropical"
    entries: List[List[MatrixEntry]]  # "-inf" stands for the tropical zero


class TableauPayload(BaseModel):
    rows: List[List[int]]  # Top row first


class MonoidTablePayload(BaseModel):
    name: str
    labels: List[str]
    mul: List[List[int]]  # mul[i][j] is the index of labels[i] * labels[j]
    inv: List[int]
    unit: int
    generators: Dict[str, int]


class ChaosReport(BaseModel):
    identity: str
    unstable: List[List[str]]  # Occurrence pairs as ["1x", "1y"]
    critical: Optional[List[str]] = None


class EquivalencePayload(BaseModel):
    left: str
    right: str
    rank: int
    equivalent: bool


class FamilyPayload(BaseModel):
    k: int
    p: str  # p_k, symbols separated by spaces
    q: str
    in_p: bool  # p_k follows the P_k chain
    in_q: bool


class RelationsPayload(BaseModel):
    rank: int
    bound: int
    relations: List[List[str]]  # [left, right] word pairs


class BasisReport(BaseModel):
    monoid: str
    verdicts: Dict[str, Verdict]  # Basis identity name -> verdict
