"""
Word, term and identity parser.

Grammar (whitespace is ignored, so adjacent variables need a space):

    factor   := ident | ident* | ( term ) | ( term )*   optionally followed by ^k
    term     := factor+
    identity := term (≈ | =) term

Identifiers match ``[a-z][a-z0-9_]*``; ``x y`` is two variables, ``xy`` is one.
"""

from functools import lru_cache

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from hyposharp.errors import ParseError
from hyposharp.utils.logger import setup_logger
from hyposharp.words import EMPTY, Concat, Identity, InvWord, Leaf, Star, Symbol, Term, flatten

logger = setup_logger(__name__)

GRAMMAR = r"""
    identity: term SEP term
    term: factor+
    factor: atom STAR? power?
    ?atom: IDENT -> leaf
         | "(" term ")"
    power: "^" INT

    STAR: "*"
    SEP: "≈" | "="
    IDENT: /[a-z][a-z0-9_]*/

    %import common.INT
    %import common.WS
    %ignore WS
"""

EMPTY_SPELLINGS = ("", "ε", "1")


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(GRAMMAR, start=["term", "identity"], parser="lalr")


class _TermBuilder(Transformer):
    """Turns the parse tree into Term values."""

    def __init__(self, text: str):
        super().__init__()
        self.text = text

    def leaf(self, items):
        return Leaf(Symbol(str(items[0])))

    def term(self, items):
        return items[0] if len(items) == 1 else Concat(tuple(items))

    def power(self, items):
        token: Token = items[0]
        exponent = int(token)
        if exponent < 1:
            raise ParseError(self.text, token.start_pos, "exponent must be a positive integer")
        return exponent

    def factor(self, items):
        node = items[0]
        for item in items[1:]:
            if isinstance(item, Token) and item.type == "STAR":
                node = Star(node)
            elif item > 1:
                node = Concat((node,) * item)
        return node

    def identity(self, items):
        return items[0], items[2]


def _parse(text: str, start: str):
    try:
        tree = _parser().parse(text, start=start)
        return _TermBuilder(text).transform(tree)
    except VisitError as error:
        if isinstance(error.orig_exc, ParseError):
            raise error.orig_exc from None
        raise
    except UnexpectedEOF:
        raise ParseError(text, len(text), "unexpected end of input") from None
    except UnexpectedCharacters as error:
        raise ParseError(text, error.pos_in_stream, f"unexpected character {text[error.pos_in_stream]!r}") from None
    except UnexpectedInput as error:
        position = getattr(error, "pos_in_stream", None)
        if position is None or position < 0:
            position = len(text)
        token = getattr(error, "token", None)
        reason = f"unexpected {str(token)!r}" if token is not None and str(token) else "unexpected end of input"
        raise ParseError(text, position, reason) from None


def parse_term(text: str) -> Term:
    """
    Parse a nonempty term.

    Raises:
        ParseError: With the 0-based column of the offending input.
    """
    return _parse(text, "term")


def parse_word(text: str) -> InvWord:
    """Parse a term and flatten it; ``""``, ``"ε"`` and ``"1"`` denote the empty word."""
    if text.strip() in EMPTY_SPELLINGS:
        return EMPTY
    return flatten(parse_term(text))


def parse_identity(text: str) -> Identity:
    """
    Parse ``LHS ≈ RHS`` (or ``LHS = RHS``) into a flattened Identity.

    Raises:
        ParseError: If either side is missing or malformed.
    """
    lhs, rhs = _parse(text, "identity")
    identity = Identity(flatten(lhs), flatten(rhs))
    logger.debug(f"parsed identity {identity}")
    return identity

