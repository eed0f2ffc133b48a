"""
Dense square matrices over a semiring.

Matrices are immutable: the backing numpy array is read-only and every
operation returns a new TropMatrix.
"""

from functools import lru_cache
from typing import Any, List, Optional, Sequence

import numpy as np

from hyposharp.errors import DimensionError
from hyposharp.semiring.base import JsonEntry, Semiring
from hyposharp.semiring.factory import SemiringFactory
from hyposharp.utils.config import load_config


@lru_cache(maxsize=1)
def default_semiring() -> Semiring:
    return SemiringFactory.create(load_config().get("semiring.default", "tropical"))


class TropMatrix:
    """Square matrix over ``semiring`` (tropical unless stated otherwise)."""

    __slots__ = ("entries", "semiring")

    def __init__(self, entries: Any, semiring: Optional[Semiring] = None):
        semiring = semiring or default_semiring()
        grid = np.array(entries, dtype=semiring.dtype)
        if grid.ndim != 2 or grid.shape[0] != grid.shape[1]:
            raise DimensionError(f"matrix must be square, got shape {grid.shape}")
        grid.setflags(write=False)
        self.entries = grid
        self.semiring = semiring

    @classmethod
    def identity(cls, n: int, semiring: Optional[Semiring] = None) -> "TropMatrix":
        semiring = semiring or default_semiring()
        return cls(semiring.identity(n), semiring)

    @classmethod
    def diagonal(cls, values: Sequence[Any], semiring: Optional[Semiring] = None) -> "TropMatrix":
        semiring = semiring or default_semiring()
        grid = semiring.zeros(len(values))
        np.fill_diagonal(grid, values)
        return cls(grid, semiring)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def _check_compatible(self, other: "TropMatrix") -> None:
        if other.semiring.name != self.semiring.name:
            raise DimensionError(f"cannot combine {self.semiring.name} and {other.semiring.name} matrices")
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __matmul__(self, other: "TropMatrix") -> "TropMatrix":
        self._check_compatible(other)
        return TropMatrix(self.semiring.matmul(self.entries, other.entries), self.semiring)

    def __add__(self, other: "TropMatrix") -> "TropMatrix":
        self._check_compatible(other)
        return TropMatrix(self.semiring.add(self.entries, other.entries), self.semiring)

    def skew_transpose(self) -> "TropMatrix":
        """Reflect in the secondary diagonal: ``(A^D)_ij = A_(n+1-j)(n+1-i)``."""
        return TropMatrix(self.entries[::-1, ::-1].T, self.semiring)

    def is_upper_triangular(self) -> bool:
        below = np.tril_indices(self.dim, k=-1)
        return bool(np.all(self.entries[below] == self.semiring.zero))

    def key(self) -> bytes:
        """Hashable fingerprint, equal exactly for equal matrices."""
        return self.semiring.name.encode() + b":" + self.entries.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TropMatrix):
            return NotImplemented
        return self.semiring.name == other.semiring.name and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.key())

    def to_entries(self) -> List[List[JsonEntry]]:
        return [[self.semiring.encode(value) for value in row] for row in self.entries]

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence[JsonEntry]], semiring: Optional[Semiring] = None) -> "TropMatrix":
        semiring = semiring or default_semiring()
        return cls([[semiring.decode(value) for value in row] for row in entries], semiring)

    def render(self) -> str:
        """Right-aligned text grid with ``.`` for the semiring zero."""
        cells = [[self.semiring.render(value) for value in row] for row in self.entries]
        width = max((len(cell) for row in cells for cell in row), default=1)
        return "\n".join(" ".join(cell.rjust(width) for cell in row) for row in cells)

    def __repr__(self) -> str:
        return f"TropMatrix(dim={self.dim}, semiring={self.semiring.name})"

    def __str__(self) -> str:
        return self.render()


def mat_mul(left: TropMatrix, right: TropMatrix) -> TropMatrix:
    return left @ right


def skew_transpose(matrix: TropMatrix) -> TropMatrix:
    return matrix.skew_transpose()


def block_diag(blocks: Sequence[TropMatrix]) -> TropMatrix:
    """Blocks along the diagonal, zero elsewhere."""
    if not blocks:
        raise DimensionError("block_diag needs at least one block")
    semiring = blocks[0].semiring
    grid = semiring.zeros(sum(block.dim for block in blocks))
    offset = 0
    for block in blocks:
        if block.semiring.name != semiring.name:
            raise DimensionError("all blocks must share one semiring")
        grid[offset:offset + block.dim, offset:offset + block.dim] = block.entries
        offset += block.dim
    return TropMatrix(grid, semiring)


def product(matrices: Sequence[TropMatrix], dim: int, semiring: Optional[Semiring] = None) -> TropMatrix:
    """Ordered product, the identity of size ``dim`` when empty."""
    result = TropMatrix.identity(dim, semiring or (matrices[0].semiring if matrices else None))
    for matrix in matrices:
        result = result @ matrix
    return result
