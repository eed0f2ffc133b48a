"""
Finite monoids generated by matrices under skew transposition.

The closure runs breadth first over right multiplication by generators in
name order, so every element is labelled with its shortlex least generator
word.
"""

from collections import deque
from typing import Dict, List, Mapping

import numpy as np

from hyposharp.errors import OracleError
from hyposharp.models.monoid import FiniteInvMonoid
from hyposharp.semiring import blocks
from hyposharp.semiring.factory import SemiringFactory
from hyposharp.semiring.matrix import TropMatrix, block_diag
from hyposharp.utils.logger import setup_logger

logger = setup_logger(__name__)

MAX_CLOSURE = 10_000


def matrix_realization(name: str) -> Dict[str, TropMatrix]:
    """
    Boolean generator matrices of a named model.

    Args:
        name: One of ``a01``, ``b`` or ``c``.

    Returns:
        Generator name -> matrix. The identity is implicit.
    """
    boolean = SemiringFactory.create("boolean")
    j, k, e3 = blocks.J(boolean), blocks.K(boolean), blocks.E(3, boolean)
    key = name.lower()
    if key == "a01":
        return {"a": j, "b": k}
    if key == "b":
        return {
            "a": block_diag([j, j, e3]),
            "b": block_diag([k, k @ j, j]),
            "c": block_diag([e3, k, k]),
        }
    if key == "c":
        return {
            "(a,1)": block_diag([j, e3]),
            "(b,1)": block_diag([k, e3]),
            "(1,a)": block_diag([e3, j]),
            "(1,b)": block_diag([e3, k]),
        }
    raise ValueError(f"Unsupported matrix realization: {name}. Choose from: a01, b, c")


def _join(word: str, generator: str) -> str:
    return generator if word == "1" else word + generator


def build_from_matrices(name: str, generators: Mapping[str, TropMatrix], expected_size: int = 0) -> FiniteInvMonoid:
    """
    Close ``generators`` and the identity under multiplication.

    The involution is skew transposition, which must map the closure into
    itself.

    Raises:
        OracleError: If the closure is not closed under the involution, grows
            past ``MAX_CLOSURE`` or differs from ``expected_size``.
    """
    if not generators:
        raise OracleError(f"{name}: no generators given")
    names = sorted(generators)
    dim = generators[names[0]].dim
    semiring = generators[names[0]].semiring

    elements: List[TropMatrix] = [TropMatrix.identity(dim, semiring)]
    labels = ["1"]
    index: Dict[bytes, int] = {elements[0].key(): 0}
    queue = deque([0])
    while queue:
        current = queue.popleft()
        for generator in names:
            candidate = elements[current] @ generators[generator]
            if candidate.key() in index:
                continue
            if len(elements) >= MAX_CLOSURE:
                raise OracleError(f"{name}: closure exceeds {MAX_CLOSURE} elements")
            index[candidate.key()] = len(elements)
            elements.append(candidate)
            labels.append(_join(labels[current], generator))
            queue.append(len(elements) - 1)

    size = len(elements)
    if expected_size and size != expected_size:
        raise OracleError(f"{name}: closure has {size} elements, expected {expected_size}")

    mul = np.empty((size, size), dtype=np.int64)
    for i, left in enumerate(elements):
        for j, right in enumerate(elements):
            mul[i, j] = index[(left @ right).key()]
    inv = np.empty(size, dtype=np.int64)
    for i, element in enumerate(elements):
        image = element.skew_transpose().key()
        if image not in index:
            raise OracleError(f"{name}: skew transpose of {labels[i]} leaves the closure")
        inv[i] = index[image]

    logger.debug(f"{name}: closure of {len(names)} generators has {size} elements")
    return FiniteInvMonoid(
        name=name,
        labels=labels,
        mul=mul,
        inv=inv,
        unit=0,
        generators={generator: index[generators[generator].key()] for generator in names},
    )
