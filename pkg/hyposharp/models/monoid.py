"""
Finite monoids with involution given by tables.

A FiniteInvMonoid stores its multiplication and involution as numpy index
arrays so that axioms and identities can be checked with vectorized lookups.
"""

from collections import deque
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from hyposharp.errors import OracleError
from hyposharp.schemas import MonoidTablePayload
from hyposharp.utils.logger import setup_logger

logger = setup_logger(__name__)

ElementRef = Union[int, str]


class FiniteInvMonoid:
    """
    A monoid ``{0, ..., size-1}`` with an involution.

    Args:
        name: Short model name used by the factory and in diagnostics.
        labels: Display label per element.
        mul: ``size x size`` table, ``mul[i, j]`` is the index of ``i * j``.
        inv: Involution table.
        unit: Index of the identity element.
        generators: Generator name -> element index.
    """

    def __init__(
        self,
        name: str,
        labels: Sequence[str],
        mul: np.ndarray,
        inv: np.ndarray,
        unit: int,
        generators: Mapping[str, int],
    ):
        self.name = name
        self.labels = list(labels)
        self.mul = np.asarray(mul, dtype=np.int64)
        self.inv = np.asarray(inv, dtype=np.int64)
        self.unit = int(unit)
        self.generators = dict(generators)
        self._index = {label: index for index, label in enumerate(self.labels)}
        if len(self._index) != len(self.labels):
            raise OracleError(f"{name}: element labels are not distinct")
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return self.size

    def verify(self) -> None:
        """
        Check every monoid and involution axiom on the whole table.

        Raises:
            OracleError: Naming the first axiom that fails.
        """
        n = self.size
        idx = np.arange(n)
        if self.mul.shape != (n, n) or self.inv.shape != (n,):
            raise OracleError(f"{self.name}: tables do not match {n} elements")
        left = self.mul[self.mul[:, :, None], idx[None, None, :]]
        right = self.mul[idx[:, None, None], self.mul[None, :, :]]
        if not np.array_equal(left, right):
            a, b, c = np.argwhere(left != right)[0]
            raise OracleError(f"{self.name}: not associative at ({self.labels[a]}, {self.labels[b]}, {self.labels[c]})")
        if not (np.array_equal(self.mul[self.unit], idx) and np.array_equal(self.mul[:, self.unit], idx)):
            raise OracleError(f"{self.name}: {self.labels[self.unit]} is not a two-sided unit")
        if not np.array_equal(self.inv[self.inv], idx):
            raise OracleError(f"{self.name}: involution is not of order two")
        # (ab)* = b* a*
        if not np.array_equal(self.inv[self.mul], self.mul[self.inv[None, :], self.inv[:, None]]):
            raise OracleError(f"{self.name}: involution is not an anti-automorphism")
        logger.debug(f"{self.name}: {n} elements, all axioms verified")

    def element(self, ref: ElementRef) -> int:
        """Index of an element given by label or index."""
        if isinstance(ref, str):
            if ref in self._index:
                return self._index[ref]
            if ref in self.generators:
                return self.generators[ref]
            raise OracleError(f"{self.name} has no element {ref!r}")
        if not 0 <= int(ref) < self.size:
            raise OracleError(f"{self.name} has no element with index {ref}")
        return int(ref)

    def label(self, index: int) -> str:
        return self.labels[index]

    def multiply(self, *refs: ElementRef) -> int:
        result = self.unit
        for ref in refs:
            result = int(self.mul[result, self.element(ref)])
        return result

    def evaluate_label(self, word: str) -> int:
        """Evaluate a word of single-letter generator names such as ``"bcab"``."""
        return self.multiply(*word) if word not in ("", "1") else self.unit

    def generator_words(self) -> Dict[int, Tuple[str, ...]]:
        """
        A shortest generator word for every reachable element.

        Generators are tried in name order, so ties go to the
        lexicographically smallest word.
        """
        names = sorted(self.generators)
        words: Dict[int, Tuple[str, ...]] = {self.unit: ()}
        queue = deque([self.unit])
        while queue:
            current = queue.popleft()
            for name in names:
                target = int(self.mul[current, self.generators[name]])
                if target not in words:
                    words[target] = words[current] + (name,)
                    queue.append(target)
        return words

    def to_payload(self) -> MonoidTablePayload:
        return MonoidTablePayload(
            name=self.name,
            labels=self.labels,
            mul=self.mul.tolist(),
            inv=self.inv.tolist(),
            unit=self.unit,
            generators=self.generators,
        )

    def __repr__(self) -> str:
        return f"FiniteInvMonoid(name={self.name!r}, size={self.size})"


def direct_product(
    name: str,
    left: FiniteInvMonoid,
    right: FiniteInvMonoid,
    involution: str = "swap",
    generators: Optional[List[Tuple[str, str]]] = None,
) -> FiniteInvMonoid:
    """
    The product monoid ``left x right`` with labels ``"(x,y)"``.

    ``involution="swap"`` gives ``(x, y)* = (y*, x*)`` and needs equal
    factors; ``"componentwise"`` gives ``(x, y)* = (x*, y*)``. ``generators``
    lists label pairs; by default every factor generator paired with the unit.
    """
    if involution not in ("swap", "componentwise"):
        raise ValueError(f"Unsupported involution: {involution}. Choose from: swap, componentwise")
    if involution == "swap" and left.size != right.size:
        raise OracleError("the swap involution needs two copies of one monoid")
    m, n = left.size, right.size
    pairs = [(x, y) for x in range(m) for y in range(n)]
    labels = [f"({left.label(x)},{right.label(y)})" for x, y in pairs]

    xs = np.repeat(np.arange(m), n)
    ys = np.tile(np.arange(n), m)
    mul = left.mul[xs[:, None], xs[None, :]] * n + right.mul[ys[:, None], ys[None, :]]
    if involution == "swap":
        inv = left.inv[ys] * n + right.inv[xs]
    else:
        inv = left.inv[xs] * n + right.inv[ys]

    if generators is None:
        generators = [(g, right.label(right.unit)) for g in sorted(left.generators)]
        generators += [(left.label(left.unit), g) for g in sorted(right.generators)]
    generator_map = {}
    for x_ref, y_ref in generators:
        index = left.element(x_ref) * n + right.element(y_ref)
        generator_map[labels[index]] = index

    return FiniteInvMonoid(
        name=name,
        labels=labels,
        mul=mul,
        inv=inv,
        unit=left.unit * n + right.unit,
        generators=generator_map,
    )
