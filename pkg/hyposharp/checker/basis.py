"""Identities forming finite bases for (C, *) and for hypo_n with n >= 4."""

from typing import Dict

from hyposharp.words import Identity, InvWord


def _identity(lhs: str, rhs: str) -> Identity:
    return Identity(InvWord.of(*lhs.split()), InvWord.of(*rhs.split()))


def basis_identities() -> Dict[str, Identity]:
    """
    The four basis identities by name.

    ``drop_inner``, ``swap_prefix`` and ``swap_suffix`` axiomatize (C, *);
    ``swap_prefix``, ``swap_suffix`` and ``swap_middle`` axiomatize hypo_n
    with n >= 4.
    """
    return {
        "drop_inner": _identity("x z x t x", "x z t x"),
        "swap_prefix": _identity("x y z x t y", "y x z x t y"),
        "swap_suffix": _identity("x z y t x y", "x z y t y x"),
        "swap_middle": _identity("x z x y t x", "x z y x t x"),
    }


BASES: Dict[str, tuple] = {
    "C": ("drop_inner", "swap_prefix", "swap_suffix"),
    "hypoN": ("swap_prefix", "swap_suffix", "swap_middle"),
}
