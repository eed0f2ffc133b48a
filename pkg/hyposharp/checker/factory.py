"""Factory for creating identity checkers."""

from typing import Dict, List, Type

from hyposharp.checker.base import IdentityChecker
from hyposharp.checker.providers.hypoplactic import Hypo1Checker, Hypo2Checker, Hypo3Checker, HypoNChecker
from hyposharp.checker.providers.models import A01Checker, ACommChecker, BChecker, CChecker
from hyposharp.checker.providers.plain import HypoPlainChecker, ReductChecker


class CheckerFactory:
    """Factory class for creating identity checkers."""

    _checkers: Dict[str, Type[IdentityChecker]] = {
        checker.tag.lower(): checker
        for checker in (
            A01Checker,
            ACommChecker,
            Hypo1Checker,
            Hypo2Checker,
            BChecker,
            Hypo3Checker,
            CChecker,
            HypoNChecker,
            HypoPlainChecker,
            ReductChecker,
        )
    }

    @classmethod
    def create(cls, tag: str) -> IdentityChecker:
        """
        Create a checker.

        Args:
            tag: Monoid tag such as ``a01``, ``B`` or ``hypoN``; case is ignored.

        Returns:
            IdentityChecker instance

        Raises:
            ValueError: If tag is not supported
        """
        checker_class = cls._checkers.get(tag.lower())
        if not checker_class:
            raise ValueError(f"Unsupported monoid: {tag}. "
                             f"Choose from: {', '.join(cls.tags())}")
        return checker_class()

    @classmethod
    def tags(cls) -> List[str]:
        return [checker.tag for checker in cls._checkers.values()]

    @classmethod
    def register_checker(cls, tag: str, checker_class: Type[IdentityChecker]) -> None:
        """Register a new checker class."""
        cls._checkers[tag.lower()] = checker_class
