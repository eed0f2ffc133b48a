"""
Named constant blocks the representations are assembled from.

    P = diag(s, 1)        Q = diag(1, s)
    J = E_3 with 1 at (2, 3)
    K = E_3 with 1 at (1, 2)

Here ``1`` and ``0`` are the semiring's one and zero. ``J`` and ``K`` only
use those two values, so they also exist over the boolean semiring.
"""

from typing import Optional

from hyposharp.semiring.base import Semiring
from hyposharp.semiring.matrix import TropMatrix, default_semiring


def _resolve(semiring: Optional[Semiring]) -> Semiring:
    return semiring or default_semiring()


def E(n: int, semiring: Optional[Semiring] = None) -> TropMatrix:
    return TropMatrix.identity(n, _resolve(semiring))


def scalar(exponent: int, semiring: Optional[Semiring] = None) -> TropMatrix:
    """The 1x1 block ``s^exponent``."""
    semiring = _resolve(semiring)
    return TropMatrix([[semiring.power(semiring.s, exponent)]], semiring)


def P(semiring: Optional[Semiring] = None) -> TropMatrix:
    semiring = _resolve(semiring)
    return TropMatrix.diagonal([semiring.s, semiring.one], semiring)


def Q(semiring: Optional[Semiring] = None) -> TropMatrix:
    semiring = _resolve(semiring)
    return TropMatrix.diagonal([semiring.one, semiring.s], semiring)


def PQ_power(first: int, second: int, semiring: Optional[Semiring] = None) -> TropMatrix:
    """``diag(s^first, s^second)``, i.e. ``P^first Q^second``."""
    semiring = _resolve(semiring)
    return TropMatrix.diagonal([semiring.power(semiring.s, first), semiring.power(semiring.s, second)], semiring)


def J(semiring: Optional[Semiring] = None) -> TropMatrix:
    semiring = _resolve(semiring)
    grid = semiring.identity(3)
    grid[1, 2] = semiring.one
    return TropMatrix(grid, semiring)


def K(semiring: Optional[Semiring] = None) -> TropMatrix:
    semiring = _resolve(semiring)
    grid = semiring.identity(3)
    grid[0, 1] = semiring.one
    return TropMatrix(grid, semiring)


def JK(semiring: Optional[Semiring] = None) -> TropMatrix:
    return J(semiring) @ K(semiring)


def KJ(semiring: Optional[Semiring] = None) -> TropMatrix:
    return K(semiring) @ J(semiring)
