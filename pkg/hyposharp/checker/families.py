"""
The words ``p_k`` and ``q_k`` and the occurrence chains defining their sets.

A chain is a list of groups of occurrences; a word matches it when every
occurrence of a group lies strictly before every occurrence of the next.
``last(s)`` and ``first(s)`` denote the last and first occurrence of ``s``.
"""

from typing import List, Tuple

from hyposharp.errors import RankError
from hyposharp.words import InvWord, Symbol, occurrence_spans

Anchor = Tuple[str, Symbol]  # ("first" | "last", symbol)
Chain = List[List[Anchor]]


def _require(k: int) -> None:
    if k < 2:
        raise RankError(f"the families start at k = 2, got {k}")


def _x(i: int, starred: bool = False) -> Symbol:
    return Symbol(f"x{i}", starred)


def _y(i: int, starred: bool = False) -> Symbol:
    return Symbol(f"y{i}", starred)


def _frame(k: int) -> Tuple[InvWord, InvWord]:
    indices = range(1, k + 1)
    prefix = InvWord(tuple(_x(i) for i in indices) + tuple(_y(i) for i in indices))
    suffix = InvWord(tuple(_x(i, True) for i in indices) + tuple(_y(i, True) for i in indices))
    return prefix, suffix


def build_lk(k: int) -> InvWord:
    """``y1..yk (x1 y1* .. xk yk*) x1*..xk*``"""
    _require(k)
    indices = range(1, k + 1)
    middle = tuple(symbol for i in indices for symbol in (_x(i), _y(i, True)))
    return InvWord(tuple(_y(i) for i in indices) + middle + tuple(_x(i, True) for i in indices))


def build_rk(k: int) -> InvWord:
    """The involution image of ``l_k``."""
    return build_lk(k).star()


def build_pk(k: int) -> InvWord:
    prefix, suffix = _frame(k)
    return prefix + build_lk(k) + suffix


def build_qk(k: int) -> InvWord:
    prefix, suffix = _frame(k)
    return prefix + build_rk(k) + suffix


def alphabet(k: int) -> frozenset:
    return frozenset(
        symbol for i in range(1, k + 1) for starred in (False, True) for symbol in (_x(i, starred), _y(i, starred))
    )


def pk_chain(k: int) -> Chain:
    _require(k)
    chain: Chain = [[("last", _y(i)) for i in range(1, k + 1)] + [("last", _x(1))]]
    for m in range(1, k):
        chain.append([("first", _y(m, True))])
        chain.append([("last", _x(m + 1))])
    chain.append([("first", _y(k, True))] + [("first", _x(i, True)) for i in range(1, k + 1)])
    return chain


def qk_chain(k: int) -> Chain:
    _require(k)
    chain: Chain = [[("last", _x(i)) for i in range(1, k + 1)] + [("last", _y(k))]]
    for m in range(k, 1, -1):
        chain.append([("first", _x(m, True))])
        chain.append([("last", _y(m - 1))])
    chain.append([("first", _x(1, True))] + [("first", _y(i, True)) for i in range(1, k + 1)])
    return chain


def matches_chain(word: InvWord, chain: Chain, k: int) -> bool:
    """Whether ``word`` is a word over the ``k``-th alphabet that follows ``chain``."""
    if not len(word) or not set(word.symbols) <= alphabet(k):
        return False
    spans = occurrence_spans(word)
    positions = []
    for group in chain:
        if any(symbol not in spans for _, symbol in group):
            return False
        positions.append([spans[symbol][0 if end == "first" else 1] for end, symbol in group])
    return all(max(before) < min(after) for before, after in zip(positions, positions[1:]))


def in_Pk(word: InvWord, k: int) -> bool:
    return matches_chain(word, pk_chain(k), k)


def in_Qk(word: InvWord, k: int) -> bool:
    return matches_chain(word, qk_chain(k), k)
