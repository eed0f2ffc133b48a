"""Two-element boolean semiring, used to close the finite matrix monoids."""

import numpy as np

from hyposharp.semiring.base import JsonEntry, Semiring


class BooleanSemiring(Semiring):
    name = "boolean"
    dtype = np.bool_

    @property
    def zero(self) -> bool:
        return np.False_

    @property
    def one(self) -> bool:
        return np.True_

    def add(self, a, b):
        return np.logical_or(a, b)

    def mul(self, a, b):
        return np.logical_and(a, b)

    def power(self, a, exponent: int):
        return self.one if exponent == 0 else a

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        return (left.astype(np.int64) @ right.astype(np.int64)) > 0

    def encode(self, value) -> JsonEntry:
        return int(bool(value))

    def decode(self, entry: JsonEntry):
        return np.bool_(int(entry))
