"""
Clauses the identity characterizations are assembled from.

Each clause is a generator over an IdentityProfile that yields one
FailedCondition per violation, so a checker can stop at the first.
"""

from collections import Counter
from typing import Iterator, Sequence

from hyposharp.checker.profile import IdentityProfile
from hyposharp.schemas import FailedCondition
from hyposharp.words import Symbol

Failures = Iterator[FailedCondition]


def _names(*symbols: Symbol) -> list:
    return [str(symbol) for symbol in symbols]


def balanced(profile: IdentityProfile, label: str = "balanced") -> Failures:
    """Equal occurrence counts for every symbol."""
    left, right = profile.u.report.occ, profile.v.report.occ
    for symbol in sorted(set(left) | set(right)):
        if left.get(symbol, 0) != right.get(symbol, 0):
            yield FailedCondition(
                clause=label,
                pair=_names(symbol),
                detail=f"occ({symbol}) is {left.get(symbol, 0)} on the left and {right.get(symbol, 0)} on the right",
            )
            return


def plain_balanced(profile: IdentityProfile, label: str = "balanced") -> Failures:
    """Equal counts once stars are forgotten."""
    left = Counter(symbol.base for symbol in profile.identity.lhs)
    right = Counter(symbol.base for symbol in profile.identity.rhs)
    for base in sorted(set(left) | set(right)):
        if left[base] != right[base]:
            yield FailedCondition(
                clause=label,
                pair=[base],
                detail=f"{base} occurs {left[base]} times on the left and {right[base]} on the right, stars ignored",
            )
            return


def same_classes(profile: IdentityProfile, classes: Sequence[str], label: str = "(i)") -> Failures:
    """The named content classes (con, mix, ml, lin) coincide on both sides."""
    left, right = profile.u.report.classes(), profile.v.report.classes()
    for name in classes:
        difference = left[name] ^ right[name]
        if difference:
            symbol = min(difference)
            yield FailedCondition(
                clause=label,
                pair=_names(symbol),
                detail=f"{name} differs: {symbol} belongs to one side only",
            )
            return


def mixed_order(profile: IdentityProfile, prefix: str = "(ii)") -> Failures:
    """
    Orders governed by the mixed symbols.

    (a) ``{x, y} < {x*, y*}`` for mixed ``x, y``; (b) ``x < {x*, y}`` and
    ``{x, y} < x*`` for mixed ``x`` and unmixed ``y``; (c) ``x < y`` for
    unmixed ``x, y``.
    """
    content = profile.content()
    mix = profile.u.report.mix
    mixed = [symbol for symbol in content if symbol in mix]
    unmixed = [symbol for symbol in content if symbol not in mix]

    for x in mixed:
        for y in mixed:
            if not profile.agree((x, y), (x.star(), y.star())):
                yield FailedCondition(
                    clause=f"{prefix}(a)",
                    pair=_names(x, y),
                    detail=f"{{{x}, {y}}} ≺ {{{x.star()}, {y.star()}}} holds on one side only",
                )
                return
    for x in mixed:
        for y in unmixed:
            if not profile.agree((x,), (x.star(), y)):
                yield FailedCondition(
                    clause=f"{prefix}(b)",
                    pair=_names(x, y),
                    detail=f"{x} ≺ {{{x.star()}, {y}}} holds on one side only",
                )
                return
            if not profile.agree((x, y), (x.star(),)):
                yield FailedCondition(
                    clause=f"{prefix}(b)",
                    pair=_names(x, y),
                    detail=f"{{{x}, {y}}} ≺ {x.star()} holds on one side only",
                )
                return
    for x in unmixed:
        for y in unmixed:
            if not profile.agree((x,), (y,)):
                yield FailedCondition(
                    clause=f"{prefix}(c)",
                    pair=_names(x, y),
                    detail=f"{x} ≺ {y} holds on one side only",
                )
                return


def ml_agreement(profile: IdentityProfile, label: str = "(iii)") -> Failures:
    """For mixed ``x`` with ``x < x*``, ``x`` and ``x*`` are linear on both sides or on neither."""
    ml_u, ml_v = profile.u.report.ml, profile.v.report.ml
    for x in profile.mixed():
        if not profile.u.precedes(x, x.star()):
            continue
        for symbol in (x, x.star()):
            if (symbol in ml_u) != (symbol in ml_v):
                yield FailedCondition(
                    clause=label,
                    pair=_names(x, x.star()),
                    detail=f"{symbol} occurs once on one side only",
                )
                return


def mixed_pair_split(profile: IdentityProfile, label: str) -> Failures:
    """``{x, x*} < y`` and ``y < {x, x*}`` agree for mixed ``x`` and every ``y``."""
    for x in profile.mixed():
        for y in profile.content():
            if not profile.agree((x, x.star()), (y,)):
                yield FailedCondition(
                    clause=label,
                    pair=_names(x, y),
                    detail=f"{{{x}, {x.star()}}} ≺ {y} holds on one side only",
                )
                return
            if not profile.agree((y,), (x, x.star())):
                yield FailedCondition(
                    clause=label,
                    pair=_names(x, y),
                    detail=f"{y} ≺ {{{x}, {x.star()}}} holds on one side only",
                )
                return


def mixed_unmixed_order(profile: IdentityProfile, label: str) -> Failures:
    """``x < y`` and ``y < x`` agree for every mixed ``x`` and unmixed ``y``."""
    mix = profile.u.report.mix
    unmixed = [symbol for symbol in profile.content() if symbol not in mix]
    for x in profile.mixed():
        for y in unmixed:
            for before, after in ((x, y), (y, x)):
                if profile.u.precedes(before, after) != profile.v.precedes(before, after):
                    yield FailedCondition(
                        clause=label,
                        pair=_names(x, y),
                        detail=f"{before} ≺ {after} holds on one side only",
                    )
                    return


def pairwise_order(profile: IdentityProfile, label: str = "(ii)") -> Failures:
    """``x < y`` agrees for every ordered pair of content symbols."""
    content = profile.content()
    for x in content:
        for y in content:
            if profile.u.precedes(x, y) != profile.v.precedes(x, y):
                yield FailedCondition(
                    clause=label,
                    pair=_names(x, y),
                    detail=f"{x} ≺ {y} holds on one side only",
                )
                return
