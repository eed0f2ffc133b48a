"""Entry points for deciding identities by monoid tag."""

from typing import Optional

from hyposharp.checker.factory import CheckerFactory
from hyposharp.schemas import Verdict
from hyposharp.utils.config import load_config
from hyposharp.words import Identity


def default_monoid() -> str:
    return load_config().get("checker.default_monoid", "hypoN")


def check(identity: Identity, monoid: Optional[str] = None) -> Verdict:
    """
    Decide ``identity`` in the monoid named by ``monoid``.

    Args:
        identity: The word identity.
        monoid: Checker tag; defaults to ``checker.default_monoid``.

    Returns:
        Verdict naming the first failed clause when the identity fails.
    """
    return CheckerFactory.create(monoid or default_monoid()).check(identity)


def holds(identity: Identity, monoid: str) -> bool:
    return CheckerFactory.create(monoid).holds(identity)
