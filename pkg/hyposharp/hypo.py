"""
The hypoplactic monoid of finite rank.

Words over ``1 < 2 < ... < n`` are inserted into quasi-ribbon tableaux with the
Krob-Thibon algorithm. Two words are congruent exactly when they have the same
evaluation and the same inversion set, so an element is stored as that pair
together with a canonical representative word.
"""

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

from hyposharp.errors import ParseError, RankError
from hyposharp.utils.logger import setup_logger

logger = setup_logger(__name__)

Inversion = Tuple[int, int]

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class RankedWord:
    """A word over the ordered alphabet ``1..rank``."""

    rank: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 1:
            raise RankError(f"rank must be at least 1, got {self.rank}")
        for letter in self.letters:
            if not 1 <= letter <= self.rank:
                raise RankError(f"letter {letter} outside 1..{self.rank}")

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None) -> "RankedWord":
        """
        Read a ranked word.

        Contiguous digits are used up to rank 9 (``"36131512665"``); otherwise,
        or whenever separators are present, letters are whitespace or comma
        separated integers. ``""`` and ``"ε"`` are the empty word. When
        ``rank`` is omitted it is the largest letter.

        Raises:
            ParseError: On characters that are not digits or separators.
            RankError: On letters outside ``1..rank``.
        """
        stripped = text.strip()
        if stripped in ("", "ε"):
            return cls(rank or 1)
        bad = re.search(r"[^\d\s,]", stripped)
        if bad:
            raise ParseError(stripped, bad.start(), f"unexpected character {bad.group()!r}")
        if _SEPARATORS.search(stripped) or (rank is not None and rank > 9):
            if rank is not None and rank > 9 and not _SEPARATORS.search(stripped) and len(stripped) > 2:
                logger.warning(f"rank {rank} reads {stripped!r} as a single letter; separate letters with spaces")
            letters = tuple(int(token) for token in _SEPARATORS.split(stripped) if token)
        else:
            letters = tuple(int(char) for char in stripped)
        if rank is None:
            rank = max(max(letters), 1)
        return cls(rank, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __add__(self, other: "RankedWord") -> "RankedWord":
        if other.rank != self.rank:
            raise RankError(f"cannot concatenate words of rank {self.rank} and {other.rank}")
        return RankedWord(self.rank, self.letters + other.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "ε"
        if self.rank <= 9:
            return "".join(str(letter) for letter in self.letters)
        return " ".join(str(letter) for letter in self.letters)


def words_up_to(rank: int, max_length: int, include_empty: bool = False) -> Iterator[RankedWord]:
    """All words over ``1..rank`` by length, then lexicographically."""
    for length in range(0 if include_empty else 1, max_length + 1):
        for letters in itertools.product(range(1, rank + 1), repeat=length):
            yield RankedWord(rank, letters)


# ---------------------------------------------------------------- tableaux


@dataclass(frozen=True)
class QuasiRibbonTableau:
    """
    Rows of weakly increasing letters, top to bottom.

    Each row's first cell sits directly below the previous row's last cell.
    """

    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        self.validate()

    def validate(self) -> None:
        seen: Dict[int, int] = {}
        for index, row in enumerate(self.rows):
            if not row:
                raise ValueError("tableau rows must be nonempty")
            if any(left > right for left, right in zip(row, row[1:])):
                raise ValueError(f"row {index} is not weakly increasing: {row}")
            if index and self.rows[index - 1][-1] >= row[0]:
                raise ValueError(f"glue between rows {index - 1} and {index} is not strict")
            for letter in set(row):
                if seen.setdefault(letter, index) != index:
                    raise ValueError(f"letter {letter} appears in two rows")

    def reading(self) -> Tuple[int, ...]:
        return tuple(letter for row in self.rows for letter in row)

    def insert(self, letter: int) -> "QuasiRibbonTableau":
        """One Krob-Thibon insertion step."""
        # the reading is weakly increasing, so entries <= letter form a prefix
        below = sum(1 for entry in self.reading() if entry <= letter)
        if not below:
            return QuasiRibbonTableau(((letter,),) + self.rows)

        rows: List[Tuple[int, ...]] = []
        consumed = 0
        for row in self.rows:
            if consumed < below <= consumed + len(row):
                cut = below - consumed
                rows.append(row[:cut] + (letter,))
                if row[cut:]:
                    rows.append(row[cut:])
            else:
                rows.append(row)
            consumed += len(row)
        return QuasiRibbonTableau(tuple(rows))

    def row_starts(self) -> List[int]:
        """Column of the first cell of every row."""
        starts = []
        column = 0
        for row in self.rows:
            starts.append(column)
            column += len(row) - 1
        return starts

    def column_reading(self) -> Tuple[int, ...]:
        """Columns left to right, each read bottom to top."""
        columns: Dict[int, List[int]] = {}
        for start, row in zip(self.row_starts(), self.rows):
            for offset, letter in enumerate(row):
                # lower rows are visited later, so prepend to read bottom-up
                columns.setdefault(start + offset, []).insert(0, letter)
        return tuple(letter for column in sorted(columns) for letter in columns[column])

    def render(self, color: bool = False, cell_width: int = 0) -> str:
        """One line per row, indented so that glued cells line up."""
        if not self.rows:
            return "∅"
        width = cell_width or max(len(str(letter)) for letter in self.reading())
        palette = ("\x1b[36m", "\x1b[33m")
        lines = []
        for index, (start, row) in enumerate(zip(self.row_starts(), self.rows)):
            cells = " ".join(str(letter).rjust(width) for letter in row)
            if color:
                cells = f"{palette[index % 2]}{cells}\x1b[0m"
            lines.append(" " * (start * (width + 1)) + cells)
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


def insert(tableau: QuasiRibbonTableau, letter: int) -> QuasiRibbonTableau:
    return tableau.insert(letter)


def tableau_of(word: RankedWord) -> QuasiRibbonTableau:
    """Insert the letters of ``word`` left to right into the empty tableau."""
    tableau = QuasiRibbonTableau()
    for letter in word:
        tableau = tableau.insert(letter)
    return tableau


# ---------------------------------------------------------------- invariants


def ev(word: RankedWord) -> Dict[int, int]:
    """Evaluation: how often each letter occurs."""
    return dict(sorted(Counter(word.letters).items()))


def inver(word: RankedWord) -> FrozenSet[Inversion]:
    """
    Inversions ``(c, b)`` for consecutive content letters ``b < c``.

    ``(c, b)`` is present when some ``c`` occurs before the last ``b``.
    """
    first: Dict[int, int] = {}
    last: Dict[int, int] = {}
    for position, letter in enumerate(word.letters):
        first.setdefault(letter, position)
        last[letter] = position
    content = sorted(first)
    return frozenset(
        (upper, lower) for lower, upper in zip(content, content[1:]) if first[upper] < last[lower]
    )


def format_inversions(inversions: FrozenSet[Inversion]) -> str:
    return "{" + ", ".join(f"{c}-{b}" for c, b in sorted(inversions)) + "}"


def equivalent(u: RankedWord, v: RankedWord) -> bool:
    """Congruence test: equal evaluation and equal inversion set."""
    return ev(u) == ev(v) and inver(u) == inver(v)


def schutzenberger(word: RankedWord) -> RankedWord:
    """Reverse the word and send each letter ``a`` to ``rank + 1 - a``."""
    top = word.rank + 1
    return RankedWord(word.rank, tuple(top - letter for letter in reversed(word.letters)))


# ---------------------------------------------------------------- elements


@dataclass(frozen=True)
class HypoElement:
    """A hypoplactic class: evaluation, inversion set and canonical word."""

    rank: int
    ev: Tuple[Tuple[int, int], ...]
    inver: FrozenSet[Inversion]
    canon: RankedWord

    @classmethod
    def unit(cls, rank: int) -> "HypoElement":
        return element_of(RankedWord(rank))

    def __mul__(self, other: "HypoElement") -> "HypoElement":
        return mult(self, other)

    def sharp(self) -> "HypoElement":
        return element_of(schutzenberger(self.canon))

    def tableau(self) -> QuasiRibbonTableau:
        return tableau_of(self.canon)

    def __str__(self) -> str:
        return f"[{self.canon}]"


def element_of(word: RankedWord, rank: Optional[int] = None) -> HypoElement:
    """The class of ``word``; ``rank`` re-ranks the word when given."""
    if rank is not None and rank != word.rank:
        word = RankedWord(rank, word.letters)
    canon = RankedWord(word.rank, tableau_of(word).column_reading())
    return HypoElement(
        rank=word.rank,
        ev=tuple(ev(word).items()),
        inver=inver(word),
        canon=canon,
    )


def mult(left: HypoElement, right: HypoElement) -> HypoElement:
    """Product of two classes of the same rank."""
    if left.rank != right.rank:
        raise RankError(f"cannot multiply elements of rank {left.rank} and {right.rank}")
    return element_of(left.canon + right.canon)


def product(elements: Sequence[HypoElement], rank: int) -> HypoElement:
    word = RankedWord(rank, tuple(letter for element in elements for letter in element.canon))
    return element_of(word)


# ---------------------------------------------------------------- presentation


def defining_relations(rank: int, bound: Optional[int] = None) -> List[Tuple[RankedWord, RankedWord]]:
    """
    Instances of the four relation families with letters up to ``bound``.

    ``acb = cab`` (a <= b < c), ``bac = bca`` (a < b <= c),
    ``cadb = acbd`` (a <= b < c <= d), ``bdac = dbca`` (a < b <= c < d).
    """
    bound = rank if bound is None else bound
    if not 1 <= bound <= rank:
        raise RankError(f"letter bound {bound} outside 1..{rank}")
    letters = range(1, bound + 1)
    pairs: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], None] = {}
    for a, b, c in itertools.product(letters, repeat=3):
        if a <= b < c:
            pairs[(a, c, b), (c, a, b)] = None
        if a < b <= c:
            pairs[(b, a, c), (b, c, a)] = None
    for a, b, c, d in itertools.product(letters, repeat=4):
        if a <= b < c <= d:
            pairs[(c, a, d, b), (a, c, b, d)] = None
        if a < b <= c < d:
            pairs[(b, d, a, c), (d, b, c, a)] = None
    return [(RankedWord(rank, left), RankedWord(rank, right)) for left, right in pairs]
