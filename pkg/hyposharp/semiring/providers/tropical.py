"""Max-plus semiring over the integers with -inf adjoined."""

import numpy as np

from hyposharp.semiring.base import JsonEntry, Semiring

NEG_INF = float("-inf")


class TropicalSemiring(Semiring):
    """
    ``a + b = max(a, b)``, ``a * b = a + b``, zero ``-inf``, one ``0``.

    Entries are float64 holding exact integers (or -inf), so equality is exact
    for every value this package produces.
    """

    name = "tropical"
    dtype = np.float64

    def __init__(self, s: int = 1):
        if s <= 0:
            raise ValueError("s must be a positive integer to have infinite order")
        self._s = float(s)

    @property
    def zero(self) -> float:
        return NEG_INF

    @property
    def one(self) -> float:
        return 0.0

    @property
    def s(self) -> float:
        return self._s

    def add(self, a, b):
        return np.maximum(a, b)

    def mul(self, a, b):
        return np.add(a, b)

    def power(self, a, exponent: int):
        if exponent == 0:
            return self.one
        return a * exponent

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        return (left[:, :, None] + right[None, :, :]).max(axis=1)

    def encode(self, value) -> JsonEntry:
        return "-inf" if value == NEG_INF else int(value)

    def decode(self, entry: JsonEntry):
        return NEG_INF if entry == "-inf" else float(entry)
