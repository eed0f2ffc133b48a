"""
Per-side data every characterization reads.

Both sides are scanned once for content classes and first/last positions;
afterwards each precedence question is a constant time comparison.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from hyposharp.words import ContentReport, Identity, InvWord, Symbol, analyze, occurrence_spans


@dataclass(frozen=True)
class SideProfile:
    word: InvWord
    report: ContentReport
    spans: Dict[Symbol, Tuple[int, int]]

    @classmethod
    def of(cls, word: InvWord) -> "SideProfile":
        return cls(word=word, report=analyze(word), spans=occurrence_spans(word))

    def precedes(self, a: Symbol, b: Symbol) -> bool:
        """Last ``a`` before first ``b``; false when either is absent."""
        if a not in self.spans or b not in self.spans:
            return False
        return self.spans[a][1] < self.spans[b][0]

    def set_precedes(self, before: Iterable[Symbol], after: Iterable[Symbol]) -> bool:
        """Every symbol of ``before`` precedes every symbol of ``after``."""
        after = list(after)
        return all(self.precedes(a, b) for a in set(before) for b in set(after))


@dataclass(frozen=True)
class IdentityProfile:
    identity: Identity
    u: SideProfile
    v: SideProfile

    @classmethod
    def of(cls, identity: Identity) -> "IdentityProfile":
        return cls(identity=identity, u=SideProfile.of(identity.lhs), v=SideProfile.of(identity.rhs))

    def content(self) -> List[Symbol]:
        """``con(u)`` in a fixed order, the iteration order of every clause."""
        return sorted(self.u.report.con)

    def mixed(self) -> List[Symbol]:
        return sorted(self.u.report.mix)

    def agree(self, before: Iterable[Symbol], after: Iterable[Symbol]) -> bool:
        before, after = tuple(before), tuple(after)
        return self.u.set_precedes(before, after) == self.v.set_precedes(before, after)
