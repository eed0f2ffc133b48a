"""
Faithful tropical representations of the hypoplactic monoid with involution.

``psi1``, ``psi2`` and ``psi3`` multiply generator images; ``psi2_closed`` and
``psi3_closed`` evaluate the same matrices directly from content, counts and
inversions. For rank ``n >= 4`` every pair ``i < j`` gives a homomorphism
``phi_ij`` into ``hypo_3 x hypo_3``, and ``psi_n`` places the rank 3 images of
all of them along one block diagonal so that the Schützenberger involution
becomes skew transposition.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from hyposharp.errors import RankError
from hyposharp.hypo import HypoElement, RankedWord, element_of, inver
from hyposharp.semiring import blocks
from hyposharp.semiring.factory import SemiringFactory
from hyposharp.semiring.matrix import TropMatrix, block_diag
from hyposharp.utils.logger import setup_logger

logger = setup_logger(__name__)

Image = Tuple[int, ...]
LetterImages = Dict[int, Tuple[Image, Image]]


def _tropical():
    return SemiringFactory.create("tropical")


def _require_rank(word: RankedWord, largest: int, name: str) -> None:
    if word.rank > largest:
        raise RankError(f"{name} takes words of rank at most {largest}, got rank {word.rank}")


# ---------------------------------------------------------------- generators


@lru_cache(maxsize=None)
def psi_generators(rank: int) -> Tuple[TropMatrix, ...]:
    """Images of the letters ``1..rank``."""
    tropical = _tropical()
    one, j, k = blocks.E(1, tropical), blocks.J(tropical), blocks.K(tropical)
    p, q = blocks.P(tropical), blocks.Q(tropical)
    e2, e3 = blocks.E(2, tropical), blocks.E(3, tropical)
    if rank == 1:
        return (p @ q,)
    if rank == 2:
        s = blocks.scalar(1, tropical)
        return (block_diag([s, j, one]), block_diag([one, k, s]))
    if rank == 3:
        return (
            block_diag([p, j, j, e3, e2]),
            block_diag([q, k, k @ j, j, p]),
            block_diag([e2, e3, k, k, q]),
        )
    return tuple(psi_n(RankedWord(rank, (letter,))) for letter in range(1, rank + 1))


def _generator_product(word: RankedWord, generators: Tuple[TropMatrix, ...], dim: int) -> TropMatrix:
    result = blocks.E(dim, _tropical())
    for letter in word:
        result = result @ generators[letter - 1]
    return result


def psi1(word: RankedWord) -> TropMatrix:
    """Rank 1: every letter maps to ``PQ``; ε maps to ``E_2``."""
    _require_rank(word, 1, "psi1")
    return _generator_product(word, psi_generators(1), 2)


def psi2(word: RankedWord) -> TropMatrix:
    _require_rank(word, 2, "psi2")
    return _generator_product(word, psi_generators(2), 5)


def psi3(word: RankedWord) -> TropMatrix:
    _require_rank(word, 3, "psi3")
    return _generator_product(word, psi_generators(3), 13)


# ---------------------------------------------------------------- closed forms


def _counts(word: RankedWord, top: int) -> List[int]:
    return [sum(1 for letter in word if letter == value) for value in range(1, top + 1)]


def psi2_closed(word: RankedWord) -> TropMatrix:
    """
    ``psi2`` read off the word without multiplying:

    ``diag{s^occ(1), J, 1}`` when only 1 occurs, ``diag{1, K, s^occ(2)}`` when
    only 2 occurs, otherwise ``diag{s^occ(1), KJ or JK, s^occ(2)}`` with ``KJ``
    exactly when ``2-1`` is an inversion.
    """
    _require_rank(word, 2, "psi2_closed")
    tropical = _tropical()
    if not len(word):
        return blocks.E(5, tropical)
    occ1, occ2 = _counts(word, 2)
    content = set(word.letters)
    if content == {1}:
        middle = blocks.J(tropical)
    elif content == {2}:
        middle = blocks.K(tropical)
    else:
        middle = blocks.KJ(tropical) if (2, 1) in inver(word) else blocks.JK(tropical)
    return block_diag([blocks.scalar(occ1, tropical), middle, blocks.scalar(occ2, tropical)])


def _pair_block(content: set, inversions, low: int, high: int):
    """The 3x3 block driven by letters ``low < high`` that are adjacent in 1..3."""
    tropical = _tropical()
    present = content & {low, high}
    if not present:
        return blocks.E(3, tropical)
    if present == {low}:
        return blocks.J(tropical)
    if present == {high}:
        return blocks.K(tropical)
    return blocks.KJ(tropical) if (high, low) in inversions else blocks.JK(tropical)


def psi3_closed(word: RankedWord) -> TropMatrix:
    """``psi3`` as ``diag{L1, ..., L5}`` computed from content, counts and inversions."""
    _require_rank(word, 3, "psi3_closed")
    tropical = _tropical()
    if not len(word):
        return blocks.E(13, tropical)
    occ1, occ2, occ3 = _counts(word, 3)
    content = set(word.letters)
    inversions = inver(word)

    if content == {1}:
        third = blocks.J(tropical)
    elif content == {3}:
        third = blocks.K(tropical)
    elif content == {1, 3} and (3, 1) not in inversions:
        third = blocks.JK(tropical)
    else:
        third = blocks.KJ(tropical)

    return block_diag([
        blocks.PQ_power(occ1, occ2, tropical),
        _pair_block(content, inversions, 1, 2),
        third,
        _pair_block(content, inversions, 2, 3),
        blocks.PQ_power(occ2, occ3, tropical),
    ])


# ---------------------------------------------------------------- rank reduction


@dataclass(frozen=True)
class PairElement:
    """An element of ``hypo_3 x hypo_3`` with ``(e1, e2)# = (e2#, e1#)``."""

    first: HypoElement
    second: HypoElement

    @classmethod
    def unit(cls) -> "PairElement":
        return cls(HypoElement.unit(3), HypoElement.unit(3))

    def __mul__(self, other: "PairElement") -> "PairElement":
        return PairElement(self.first * other.first, self.second * other.second)

    def sharp(self) -> "PairElement":
        return PairElement(self.second.sharp(), self.first.sharp())

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


@dataclass(frozen=True)
class IndexSet:
    """The pairs ``i < j`` of ``1..n`` in lexicographic order."""

    n: int
    pairs: Tuple[Tuple[int, int], ...]

    @classmethod
    def of(cls, n: int) -> "IndexSet":
        return cls(n, tuple((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    def __len__(self) -> int:
        return len(self.pairs)


def dispatch_case(n: int, i: int, j: int) -> Tuple[int, Tuple[int, ...]]:
    """
    Which of the three letter maps ``phi_ij`` uses, with its index tuple.

    Case 1 when ``i + j = n + 1``. Otherwise the four indices ``i, j, i#, j#``
    (``k# = n + 1 - k``) are ordered and Case 2 applies when the inner two
    come from the same side, Case 3 when they interleave.

    Raises:
        RankError: If ``(i, j)`` is not a pair of ``I_n`` with ``n >= 4``.
    """
    if n < 4:
        raise RankError(f"phi_ij needs rank at least 4, got {n}")
    if not 1 <= i < j <= n:
        raise RankError(f"({i}, {j}) is not a pair 1 <= i < j <= {n}")
    i_sharp, j_sharp = n + 1 - i, n + 1 - j
    if i + j == n + 1:
        return 1, (i, j)
    if i + j < n + 1:
        if j <= j_sharp:
            return 2, (i, j, j_sharp, i_sharp)
        if i < j_sharp < j < i_sharp:
            return 3, (i, j_sharp, j, i_sharp)
    else:
        if i_sharp <= i:
            return 2, (j_sharp, i_sharp, i, j)
        if j_sharp < i < i_sharp < j:
            return 3, (j_sharp, i, i_sharp, j)
    raise RankError(f"no letter map covers ({i}, {j}) at rank {n}")


@lru_cache(maxsize=None)
def letter_images(n: int, i: int, j: int) -> LetterImages:
    """Rank 3 words that each letter ``1..n`` is sent to by ``phi_ij``."""
    case, indices = dispatch_case(n, i, j)
    logger.debug(f"phi_{i}{j} at rank {n}: case {case} with indices {indices}")
    images: LetterImages = {}
    for k in range(1, n + 1):
        if case == 1:
            lam: Image = (1,) if k == i else (3,) if k == j else (3, 1) if i < k < j else ()
            images[k] = (lam, lam)
        elif case == 2:
            i1, i2, i3, i4 = indices
            theta1: Image = (1,) if k == i1 else (2,) if k == i2 else (2, 1) if i1 < k < i2 else ()
            theta2: Image = (2,) if k == i3 else (3,) if k == i4 else (3, 2) if i3 < k < i4 else ()
            images[k] = (theta1, theta2)
        else:
            i1, i2, i3, i4 = indices
            kappa1: Image = (1,) if k == i1 else (2,) if k == i3 else (2, 1) if i1 < k < i3 else ()
            kappa2: Image = (2,) if k == i2 else (3,) if k == i4 else (3, 2) if i2 < k < i4 else ()
            images[k] = (kappa1, kappa2)
    return images


def phi_ij(word: RankedWord, i: int, j: int) -> PairElement:
    """Image of ``word`` under ``phi_ij``, folded in ``hypo_3``."""
    images = letter_images(word.rank, i, j)
    first = tuple(letter for k in word for letter in images[k][0])
    second = tuple(letter for k in word for letter in images[k][1])
    return PairElement(element_of(RankedWord(3, first)), element_of(RankedWord(3, second)))


def phi_n(word: RankedWord) -> Tuple[PairElement, ...]:
    """All ``phi_ij`` components, in ``I_n`` order."""
    if word.rank < 4:
        raise RankError(f"phi_n needs rank at least 4, got {word.rank}")
    return tuple(phi_ij(word, i, j) for i, j in IndexSet.of(word.rank).pairs)


def psi_n(word: RankedWord) -> TropMatrix:
    """
    The ``26 |I_n|``-dimensional representation for rank ``n >= 4``.

    First components in ``I_n`` order, then second components in reverse
    order, each through ``psi3``.
    """
    components = phi_n(word)
    firsts = [psi3(pair.first.canon) for pair in components]
    seconds = [psi3(pair.second.canon) for pair in reversed(components)]
    return block_diag(firsts + seconds)


def psi(word: RankedWord) -> TropMatrix:
    """Dispatch on the rank of ``word``."""
    if word.rank == 1:
        return psi1(word)
    if word.rank == 2:
        return psi2(word)
    if word.rank == 3:
        return psi3(word)
    return psi_n(word)
