"""Polynomial-time identity checkers and the instrumentation around them."""

from hyposharp.checker.base import IdentityChecker
from hyposharp.checker.basis import BASES, basis_identities
from hyposharp.checker.decide import check, default_monoid, holds
from hyposharp.checker.factory import CheckerFactory
from hyposharp.checker.families import build_pk, build_qk, in_Pk, in_Qk
from hyposharp.checker.instability import chaos, find_critical
from hyposharp.checker.isoterm import isoterm_scan
from hyposharp.words import is_balanced

__all__ = [
    "BASES",
    "CheckerFactory",
    "IdentityChecker",
    "basis_identities",
    "build_pk",
    "build_qk",
    "chaos",
    "check",
    "default_monoid",
    "find_critical",
    "holds",
    "in_Pk",
    "in_Qk",
    "is_balanced",
    "isoterm_scan",
]
