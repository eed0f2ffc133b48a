"""Finite witness models and the brute-force identity oracle."""

from hyposharp.models.builders import (
    A01_RELATIONS,
    B_RELATIONS,
    build_a01,
    build_b,
    build_c,
    build_c_circ,
    find_embedding,
    hypo_image,
    verify_relations,
)
from hyposharp.models.closure import build_from_matrices, matrix_realization
from hyposharp.models.commutative import ACommElement, holds_in_A, probe_A
from hyposharp.models.factory import MonoidFactory
from hyposharp.models.monoid import FiniteInvMonoid, direct_product
from hyposharp.models.oracle import eval_word, find_counterexample, holds_exhaustive

__all__ = [
    "A01_RELATIONS",
    "ACommElement",
    "B_RELATIONS",
    "FiniteInvMonoid",
    "MonoidFactory",
    "build_a01",
    "build_b",
    "build_c",
    "build_c_circ",
    "build_from_matrices",
    "direct_product",
    "eval_word",
    "find_counterexample",
    "find_embedding",
    "holds_exhaustive",
    "holds_in_A",
    "hypo_image",
    "matrix_realization",
    "probe_A",
    "verify_relations",
]
