"""Checkers for the witness models A01, A, B and C."""

from itertools import chain
from typing import Iterator

from hyposharp.checker import clauses
from hyposharp.checker.base import IdentityChecker
from hyposharp.checker.profile import IdentityProfile
from hyposharp.schemas import FailedCondition


class A01Checker(IdentityChecker):
    tag = "a01"
    description = "the five element monoid A01 with a* = b"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(
            clauses.same_classes(profile, ("con", "mix", "lin")),
            clauses.mixed_order(profile),
        )


class ACommChecker(IdentityChecker):
    tag = "A"
    description = "the free commutative monoid on a, b with a* = b"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return clauses.balanced(profile)


class BChecker(IdentityChecker):
    tag = "B"
    description = "the fourteen element monoid B with a* = c, b* = b"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(
            clauses.same_classes(profile, ("con", "mix", "lin")),
            clauses.mixed_order(profile),
            clauses.ml_agreement(profile, "(iii)"),
            clauses.mixed_pair_split(profile, "(iv)"),
            clauses.mixed_unmixed_order(profile, "(iv)"),
        )


class CChecker(IdentityChecker):
    tag = "C"
    description = "A01 x A01 with (x, y)* = (y*, x*)"

    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        return chain(
            clauses.same_classes(profile, ("con", "ml", "lin")),
            clauses.pairwise_order(profile),
        )
