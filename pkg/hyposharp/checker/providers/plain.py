"""Checkers for identities without the involution."""

from itertools import chain
from typing import Iterator

from hyposharp.checker import clauses
from hyposharp.checker.base import IdentityChecker
from hyposharp.checker.profile import IdentityProfile
from hyposharp.schemas import FailedCondition


class HypoPlainChecker(IdentityChecker):
    tag = "hypo_plain"
    description = "hypo_n for n >= 2, involution forgotten"
    plain_only = True

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(clauses.balanced(profile, "(i)"), clauses.pairwise_order(profile))


class ReductChecker(IdentityChecker):
    tag = "reduct"
    description = "A01, B and C, involution forgotten"
    plain_only = True

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(
            clauses.same_classes(profile, ("con", "lin")),
            clauses.pairwise_order(profile),
        )
