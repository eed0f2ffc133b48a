"""
Occurrence pairs whose order differs between the sides of a balanced identity.

Occurrences are matched across sides by symbol and ordinal. A pair is
unstable when its order on the left is reversed on the right, and critical
when it is moreover adjacent on the left.
"""

from typing import Dict, FrozenSet, Optional, Tuple

from hyposharp.errors import UnbalancedIdentityError
from hyposharp.words import Identity, OccRef, Symbol, is_balanced, occurrences

OccPair = Tuple[OccRef, OccRef]


def _right_positions(identity: Identity) -> Dict[Tuple[Symbol, int], int]:
    if not is_balanced(identity):
        raise UnbalancedIdentityError(f"{identity} is not balanced")
    return {(ref.symbol, ref.ordinal): ref.position for ref in occurrences(identity.rhs)}


def chaos(identity: Identity) -> FrozenSet[OccPair]:
    """
    All unstable pairs, each given as left-side occurrences in left order.

    Raises:
        UnbalancedIdentityError: If the identity is not balanced.
    """
    right = _right_positions(identity)
    left = occurrences(identity.lhs)
    unstable = set()
    for i, p in enumerate(left):
        for q in left[i + 1:]:
            if right[p.symbol, p.ordinal] > right[q.symbol, q.ordinal]:
                unstable.add((p, q))
    return frozenset(unstable)


def find_critical(identity: Identity) -> Optional[OccPair]:
    """
    The leftmost unstable pair of adjacent left-side occurrences.

    None exactly when there is no unstable pair at all.

    Raises:
        UnbalancedIdentityError: If the identity is not balanced.
    """
    right = _right_positions(identity)
    left = occurrences(identity.lhs)
    for p, q in zip(left, left[1:]):
        if right[p.symbol, p.ordinal] > right[q.symbol, q.ordinal]:
            return p, q
    return None
