"""
Words over an alphabet closed under a formal involution.

A word is a finite sequence of symbols ``x`` or ``x*``. This module holds the
value types (Symbol, InvWord, OccRef, Term, Identity) and the combinatorics the
checkers are built on: content classes, restriction, projection and the
occurrence order.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Tuple, Union

from hyposharp.errors import UndefinedSymbolError


@dataclass(frozen=True, order=True)
class Symbol:
    """A variable ``base`` or its involution image ``base*``."""

    base: str
    starred: bool = False

    def __post_init__(self):
        if not self.base:
            raise ValueError("symbol base must be a nonempty name")

    def star(self) -> "Symbol":
        return Symbol(self.base, not self.starred)

    def __str__(self) -> str:
        return f"{self.base}*" if self.starred else self.base


@dataclass(frozen=True)
class InvWord:
    """An element of the free involution monoid; the empty word is ε."""

    symbols: Tuple[Symbol, ...] = ()

    @classmethod
    def of(cls, *tokens: Union[str, Symbol]) -> "InvWord":
        """Build a word from tokens such as ``"x"``, ``"y*"`` or Symbols."""
        return cls(tuple(_as_symbol(token) for token in tokens))

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return InvWord(self.symbols[index])
        return self.symbols[index]

    def __add__(self, other: "InvWord") -> "InvWord":
        return InvWord(self.symbols + other.symbols)

    def __mul__(self, times: int) -> "InvWord":
        return InvWord(self.symbols * times)

    def star(self) -> "InvWord":
        """The involution image: reverse and star every symbol."""
        return InvWord(tuple(symbol.star() for symbol in reversed(self.symbols)))

    def variables(self) -> FrozenSet[str]:
        return frozenset(symbol.base for symbol in self.symbols)

    def is_plain(self) -> bool:
        return not any(symbol.starred for symbol in self.symbols)

    def __str__(self) -> str:
        return " ".join(str(symbol) for symbol in self.symbols) if self.symbols else "ε"


EMPTY = InvWord()


def _as_symbol(token: Union[str, Symbol]) -> Symbol:
    if isinstance(token, Symbol):
        return token
    if token.endswith("*"):
        return Symbol(token[:-1], True)
    return Symbol(token)


@dataclass(frozen=True, order=True)
class OccRef:
    """The ``ordinal``-th occurrence of ``symbol``, sitting at ``position``."""

    position: int
    symbol: Symbol
    ordinal: int

    def __str__(self) -> str:
        return f"{self.ordinal}{self.symbol}"


# ---------------------------------------------------------------- terms


@dataclass(frozen=True)
class Leaf:
    symbol: Symbol


@dataclass(frozen=True)
class Concat:
    parts: Tuple["Term", ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("concatenation needs at least one factor")


@dataclass(frozen=True)
class Star:
    term: "Term"


Term = Union[Leaf, Concat, Star]


def flatten(term: Term) -> InvWord:
    """
    Convert a term into the unique word it denotes.

    Stars are pushed to the leaves using ``(xy)* = y* x*`` and ``(x*)* = x``.
    """
    out: List[Symbol] = []
    # (term, starred) pairs still to emit, next on top
    stack: List[Tuple[Term, bool]] = [(term, False)]
    while stack:
        node, starred = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.symbol.star() if starred else node.symbol)
        elif isinstance(node, Star):
            stack.append((node.term, not starred))
        else:
            parts = node.parts if starred else tuple(reversed(node.parts))
            stack.extend((part, starred) for part in parts)
    return InvWord(tuple(out))


# ---------------------------------------------------------------- content


@dataclass(frozen=True)
class ContentReport:
    con: FrozenSet[Symbol]
    mix: FrozenSet[Symbol]
    ml: FrozenSet[Symbol]
    lin: FrozenSet[Symbol]
    occ: Mapping[Symbol, int]

    def classes(self) -> Dict[str, FrozenSet[Symbol]]:
        return {"con": self.con, "mix": self.mix, "ml": self.ml, "lin": self.lin}


def analyze(word: InvWord) -> ContentReport:
    """Content, mixed, mixed-linear and linear symbols of a word, with counts."""
    occ = Counter(word.symbols)
    con = frozenset(occ)
    mix = frozenset(symbol for symbol in con if symbol.star() in con)
    return ContentReport(
        con=con,
        mix=mix,
        ml=frozenset(symbol for symbol in mix if occ[symbol] == 1),
        lin=frozenset(symbol for symbol in con - mix if occ[symbol] == 1),
        occ=dict(occ),
    )


def occ(symbol: Symbol, word: InvWord) -> int:
    return sum(1 for current in word if current == symbol)


def restrict(word: InvWord, variables: Iterable[str]) -> InvWord:
    """Keep the symbols whose base variable is listed, starred or not."""
    keep = frozenset(variables)
    return InvWord(tuple(symbol for symbol in word if symbol.base in keep))


def project(word: InvWord) -> InvWord:
    """Drop every star, leaving the plain word."""
    return InvWord(tuple(Symbol(symbol.base) for symbol in word))


# ---------------------------------------------------------------- occurrence order


def occurrence_spans(word: InvWord) -> Dict[Symbol, Tuple[int, int]]:
    """Map each symbol to the positions of its first and last occurrence."""
    spans: Dict[Symbol, Tuple[int, int]] = {}
    for position, symbol in enumerate(word):
        first = spans.get(symbol, (position, position))[0]
        spans[symbol] = (first, position)
    return spans


def precedes(word: InvWord, a: Symbol, b: Symbol) -> bool:
    """
    ``a ≺ b`` in ``word``: the last ``a`` sits strictly before the first ``b``.

    Always false for ``a == b``.

    Raises:
        UndefinedSymbolError: If either symbol does not occur in the word.
    """
    spans = occurrence_spans(word)
    for symbol in (a, b):
        if symbol not in spans:
            raise UndefinedSymbolError(f"{symbol} does not occur in {word}")
    return spans[a][1] < spans[b][0]


def occurrences(word: InvWord) -> List[OccRef]:
    """Every occurrence of the word, left to right."""
    seen: Counter = Counter()
    refs = []
    for position, symbol in enumerate(word):
        seen[symbol] += 1
        refs.append(OccRef(position=position, symbol=symbol, ordinal=seen[symbol]))
    return refs


def occurrence(word: InvWord, symbol: Union[str, Symbol], ordinal: int) -> OccRef:
    """
    The ``ordinal``-th occurrence of ``symbol``.

    Raises:
        UndefinedSymbolError: If the word has fewer occurrences.
    """
    symbol = _as_symbol(symbol)
    count = 0
    for position, current in enumerate(word):
        if current == symbol:
            count += 1
            if count == ordinal:
                return OccRef(position=position, symbol=symbol, ordinal=ordinal)
    raise UndefinedSymbolError(f"{word} has no occurrence {ordinal} of {symbol}")


def occ_precedes(word: InvWord, p: OccRef, q: OccRef) -> bool:
    """Compare two occurrences of the same word by position."""
    for ref in (p, q):
        if occurrence(word, ref.symbol, ref.ordinal).position != ref.position:
            raise UndefinedSymbolError(f"{ref} is not an occurrence of {word}")
    return p.position < q.position


# ---------------------------------------------------------------- identities


@dataclass(frozen=True)
class Identity:
    """A word identity ``lhs ≈ rhs`` between nonempty words."""

    lhs: InvWord
    rhs: InvWord

    def __post_init__(self):
        if not len(self.lhs) or not len(self.rhs):
            raise ValueError("both sides of an identity must be nonempty")

    def mirrored(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def variables(self) -> FrozenSet[str]:
        return self.lhs.variables() | self.rhs.variables()

    def is_plain(self) -> bool:
        return self.lhs.is_plain() and self.rhs.is_plain()

    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def restrict(self, variables: Iterable[str]) -> "Identity":
        keep = frozenset(variables)
        return Identity(restrict(self.lhs, keep), restrict(self.rhs, keep))

    def __str__(self) -> str:
        return f"{self.lhs} ≈ {self.rhs}"


def is_balanced(identity: Identity) -> bool:
    """Every symbol occurs equally often on both sides; ``x`` and ``x*`` count apart."""
    return Counter(identity.lhs.symbols) == Counter(identity.rhs.symbols)
