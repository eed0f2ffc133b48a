"""
Brute-force satisfaction of word identities in finite models.

All ``size ** k`` assignments of the ``k`` variables are evaluated at once:
the assignment grid is a ``k x size**k`` index array and each side is folded
through the multiplication table column-wise.
"""

from typing import Dict, Mapping, Optional, Sequence

import numpy as np

from hyposharp.errors import OracleError
from hyposharp.models.monoid import ElementRef, FiniteInvMonoid
from hyposharp.utils.config import load_config
from hyposharp.utils.logger import setup_logger
from hyposharp.words import Identity, InvWord

logger = setup_logger(__name__)


def eval_word(model: FiniteInvMonoid, word: InvWord, assignment: Mapping[str, ElementRef]) -> int:
    """
    Value of ``word`` when each variable takes the given element.

    Raises:
        OracleError: If a variable of the word is not assigned.
    """
    result = model.unit
    for symbol in word:
        if symbol.base not in assignment:
            raise OracleError(f"variable {symbol.base} is not assigned")
        value = model.element(assignment[symbol.base])
        if symbol.starred:
            value = int(model.inv[value])
        result = int(model.mul[result, value])
    return result


def _resolve_cap(max_vars: Optional[int]) -> int:
    return int(max_vars if max_vars is not None else load_config().get("oracle.max_vars", 3))


def _evaluate_all(model: FiniteInvMonoid, word: InvWord, variables: Sequence[str], grid: np.ndarray) -> np.ndarray:
    position = {name: row for row, name in enumerate(variables)}
    state = np.full(grid.shape[1], model.unit, dtype=np.int64)
    for symbol in word:
        values = grid[position[symbol.base]]
        if symbol.starred:
            values = model.inv[values]
        state = model.mul[state, values]
    return state


def _disagreements(model: FiniteInvMonoid, identity: Identity, max_vars: Optional[int]):
    variables = sorted(identity.variables())
    cap = _resolve_cap(max_vars)
    if len(variables) > cap:
        raise OracleError(f"identity has {len(variables)} variables, the oracle handles at most {cap}")
    grid = np.indices((model.size,) * len(variables)).reshape(len(variables), -1)
    lhs = _evaluate_all(model, identity.lhs, variables, grid)
    rhs = _evaluate_all(model, identity.rhs, variables, grid)
    logger.debug(f"{model.name}: evaluated {grid.shape[1]} assignments of {identity}")
    return variables, grid, np.flatnonzero(lhs != rhs)


def holds_exhaustive(model: FiniteInvMonoid, identity: Identity, max_vars: Optional[int] = None) -> bool:
    """
    Whether ``identity`` holds under every assignment into ``model``.

    Args:
        model: The finite model.
        identity: The identity to test.
        max_vars: Variable cap; defaults to ``oracle.max_vars``.

    Raises:
        OracleError: If the identity has more variables than the cap.
    """
    _, _, bad = _disagreements(model, identity, max_vars)
    return not bad.size


def find_counterexample(
    model: FiniteInvMonoid, identity: Identity, max_vars: Optional[int] = None
) -> Optional[Dict[str, str]]:
    """The first refuting assignment as variable -> element label, or None."""
    variables, grid, bad = _disagreements(model, identity, max_vars)
    if not bad.size:
        return None
    column = grid[:, bad[0]]
    return {name: model.label(int(value)) for name, value in zip(variables, column)}
