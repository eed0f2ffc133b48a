"""The free commutative monoid on ``a, b`` with the involution ``a <-> b``."""

import itertools
from dataclasses import dataclass
from typing import Dict, Mapping

from hyposharp.errors import OracleError
from hyposharp.words import Identity, InvWord, is_balanced


@dataclass(frozen=True)
class ACommElement:
    """The element ``a^m b^n``."""

    m: int = 0
    n: int = 0

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("exponents must be non-negative")

    def __mul__(self, other: "ACommElement") -> "ACommElement":
        return ACommElement(self.m + other.m, self.n + other.n)

    def star(self) -> "ACommElement":
        return ACommElement(self.n, self.m)

    def __str__(self) -> str:
        parts = [f"{name}^{power}" if power > 1 else name for name, power in (("a", self.m), ("b", self.n)) if power]
        return "".join(parts) or "1"


def evaluate(word: InvWord, assignment: Mapping[str, ACommElement]) -> ACommElement:
    result = ACommElement()
    for symbol in word:
        if symbol.base not in assignment:
            raise OracleError(f"variable {symbol.base} is not assigned")
        value = assignment[symbol.base]
        result = result * (value.star() if symbol.starred else value)
    return result


def holds_in_A(identity: Identity) -> bool:
    """Identities of the commutative model are exactly the balanced ones."""
    return is_balanced(identity)


def probe_A(identity: Identity, bound: int = 2) -> bool:
    """Evaluate both sides under every assignment with exponents up to ``bound``."""
    variables = sorted(identity.variables())
    values = [ACommElement(m, n) for m in range(bound + 1) for n in range(bound + 1)]
    for choice in itertools.product(values, repeat=len(variables)):
        assignment: Dict[str, ACommElement] = dict(zip(variables, choice))
        if evaluate(identity.lhs, assignment) != evaluate(identity.rhs, assignment):
            return False
    return True
