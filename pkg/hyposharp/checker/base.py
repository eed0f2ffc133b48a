"""Abstract base class for identity checkers."""

from abc import ABC, abstractmethod
from typing import ClassVar, Iterator, Optional

from hyposharp.checker.profile import IdentityProfile
from hyposharp.errors import InvolutionError
from hyposharp.schemas import FailedCondition, Verdict
from hyposharp.utils.logger import setup_logger
from hyposharp.words import Identity

logger = setup_logger(__name__)


class IdentityChecker(ABC):
    """Decides whether a word identity holds in one involution monoid."""

    tag: ClassVar[str]
    description: ClassVar[str] = ""
    # plain checkers decide identities of the monoid without its involution
    plain_only: ClassVar[bool] = False

    @abstractmethod
    def failures(self, profile: IdentityProfile) -> Iterator[FailedCondition]:
        """
        Yield violated clauses in the characterization's clause order.

        Args:
            profile: Precomputed content classes and spans of both sides.

        Returns:
            Iterator over failures; empty when the identity holds.
        """
        pass

    def validate(self, identity: Identity) -> None:
        """
        Raises:
            InvolutionError: If a plain checker receives starred symbols.
        """
        if self.plain_only and not identity.is_plain():
            raise InvolutionError(f"{self.tag} decides plain identities only; {identity} contains starred symbols")

    def first_failure(self, identity: Identity) -> Optional[FailedCondition]:
        self.validate(identity)
        return next(iter(self.failures(IdentityProfile.of(identity))), None)

    def check(self, identity: Identity) -> Verdict:
        failure = self.first_failure(identity)
        if failure:
            logger.debug(f"{self.tag}: {identity} fails {failure.clause} at {failure.pair}")
        return Verdict(
            holds=failure is None,
            monoid=self.tag,
            identity=str(identity),
            failed_condition=failure,
        )

    def holds(self, identity: Identity) -> bool:
        return self.first_failure(identity) is None
