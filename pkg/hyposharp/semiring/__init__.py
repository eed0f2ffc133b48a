"""Idempotent semirings and dense matrices over them."""

from hyposharp.semiring.base import Semiring
from hyposharp.semiring.factory import SemiringFactory
from hyposharp.semiring.matrix import TropMatrix, block_diag, mat_mul, skew_transpose

__all__ = ["Semiring", "SemiringFactory", "TropMatrix", "block_diag", "mat_mul", "skew_transpose"]
