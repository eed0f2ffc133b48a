"""Checkers for the hypoplactic monoids with the Schützenberger involution."""

from itertools import chain
from typing import Iterator

from hyposharp.checker import clauses
from hyposharp.checker.base import IdentityChecker
from hyposharp.checker.profile import IdentityProfile
from hyposharp.schemas import FailedCondition


class Hypo1Checker(IdentityChecker):
    tag = "hypo1"
    description = "hypo_1: commutative, trivial involution"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return clauses.plain_balanced(profile)


class Hypo2Checker(IdentityChecker):
    tag = "hypo2"
    description = "hypo_2 with #"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(clauses.balanced(profile, "(i)"), clauses.mixed_order(profile))


class Hypo3Checker(IdentityChecker):
    tag = "hypo3"
    description = "hypo_3 with #"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(
            clauses.balanced(profile, "(i)"),
            clauses.mixed_order(profile),
            clauses.mixed_pair_split(profile, "(iii)"),
            clauses.mixed_unmixed_order(profile, "(iii)"),
        )


class HypoNChecker(IdentityChecker):
    tag = "hypoN"
    description = "hypo_n with # for every n >= 4"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(clauses.balanced(profile, "(i)"), clauses.pairwise_order(profile))
