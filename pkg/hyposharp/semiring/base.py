"""Abstract base class for commutative idempotent semirings."""

from abc import ABC, abstractmethod
from typing import Any, ClassVar, Iterable, Union

import numpy as np

JsonEntry = Union[int, str]


class Semiring(ABC):
    """
    Interface every semiring provider implements.

    Scalars and matrices are numpy values of ``dtype``; the operations are
    elementwise so the same code serves scalars and whole arrays.
    """

    name: ClassVar[str]
    dtype: ClassVar[Any]

    @property
    @abstractmethod
    def zero(self) -> Any:
        """Additive identity, absorbing for multiplication."""

    @property
    @abstractmethod
    def one(self) -> Any:
        """Multiplicative identity."""

    @property
    def s(self) -> Any:
        """
        A distinguished element of infinite multiplicative order.

        Raises:
            ValueError: If the semiring has none.
        """
        raise ValueError(f"the {self.name} semiring has no element of infinite multiplicative order")

    @abstractmethod
    def add(self, a, b):
        pass

    @abstractmethod
    def mul(self, a, b):
        pass

    @abstractmethod
    def power(self, a, exponent: int):
        pass

    @abstractmethod
    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """``(AB)_ij = sum_k A_ik * B_kj`` with the semiring operations."""

    @abstractmethod
    def encode(self, value) -> JsonEntry:
        """JSON form of a scalar."""

    @abstractmethod
    def decode(self, entry: JsonEntry):
        """Inverse of :meth:`encode`."""

    def render(self, value) -> str:
        return "." if self.is_zero(value) else str(self.encode(value))

    def is_zero(self, value) -> bool:
        return bool(value == self.zero)

    def sum(self, values: Iterable):
        total = self.zero
        for value in values:
            total = self.add(total, value)
        return total

    def zeros(self, n: int) -> np.ndarray:
        return np.full((n, n), self.zero, dtype=self.dtype)

    def identity(self, n: int) -> np.ndarray:
        grid = self.zeros(n)
        np.fill_diagonal(grid, self.one)
        return grid
