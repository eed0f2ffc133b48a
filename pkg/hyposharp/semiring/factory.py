"""Factory for creating semiring instances."""

from typing import Dict, Type

from hyposharp.semiring.base import Semiring
from hyposharp.semiring.providers.boolean import BooleanSemiring
from hyposharp.semiring.providers.tropical import TropicalSemiring


class SemiringFactory:
    """Factory class for creating semirings."""

    _semirings: Dict[str, Type[Semiring]] = {
        "tropical": TropicalSemiring,
        "boolean": BooleanSemiring,
    }
    _instances: Dict[str, Semiring] = {}

    @classmethod
    def create(cls, name: str = "tropical") -> Semiring:
        """
        Return the shared instance of a semiring.

        Args:
            name: Name of the semiring.

        Returns:
            Semiring instance

        Raises:
            ValueError: If name is not supported
        """
        key = name.lower()
        semiring_class = cls._semirings.get(key)
        if not semiring_class:
            raise ValueError(f"Unsupported semiring: {name}. "
                             f"Choose from: {', '.join(cls._semirings.keys())}")
        if key not in cls._instances:
            cls._instances[key] = semiring_class()
        return cls._instances[key]

    @classmethod
    def register_semiring(cls, name: str, semiring_class: Type[Semiring]) -> None:
        """Register a new semiring class."""
        cls._semirings[name.lower()] = semiring_class
        cls._instances.pop(name.lower(), None)
