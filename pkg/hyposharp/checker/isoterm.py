"""Search for identities ``w ≈ v`` with ``v`` a rearrangement of ``w``."""

from itertools import permutations
from typing import Optional

from hyposharp.checker.factory import CheckerFactory
from hyposharp.errors import OracleError
from hyposharp.utils.config import load_config
from hyposharp.utils.logger import setup_logger
from hyposharp.words import Identity, InvWord

logger = setup_logger(__name__)


def isoterm_scan(word: InvWord, monoid: str, max_length: Optional[int] = None) -> Optional[InvWord]:
    """
    Find a different arrangement ``v`` of the symbols of ``word`` such that
    ``word ≈ v`` holds in ``monoid``.

    Args:
        word: The candidate isoterm.
        monoid: Checker tag.
        max_length: Longest word scanned; defaults to ``oracle.max_isoterm_length``.

    Returns:
        A witness ``v``, or None when ``word`` is an isoterm among its rearrangements.

    Raises:
        OracleError: If ``word`` is longer than ``max_length``.
    """
    limit = max_length if max_length is not None else load_config().get("oracle.max_isoterm_length", 8)
    if len(word) > limit:
        raise OracleError(f"isoterm scan handles words up to length {limit}, got {len(word)}")
    if not len(word):
        return None
    checker = CheckerFactory.create(monoid)
    seen = {word.symbols}
    for arrangement in permutations(word.symbols):
        if arrangement in seen:
            continue
        seen.add(arrangement)
        candidate = InvWord(arrangement)
        if checker.holds(Identity(word, candidate)):
            logger.debug(f"{word} is not an isoterm for {checker.tag}: witness {candidate}")
            return candidate
    return None
