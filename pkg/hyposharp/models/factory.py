"""Factory for the named finite witness models."""

from typing import Callable, Dict

from hyposharp.models.builders import build_a01, build_b, build_c, build_c_circ
from hyposharp.models.monoid import FiniteInvMonoid

Builder = Callable[[], FiniteInvMonoid]


class MonoidFactory:
    """Factory class for finite models; each model is built once."""

    _builders: Dict[str, Builder] = {
        "a01": build_a01,
        "b": build_b,
        "c": build_c,
        "c_circ": build_c_circ,
    }
    _instances: Dict[str, FiniteInvMonoid] = {}

    @classmethod
    def create(cls, name: str) -> FiniteInvMonoid:
        """
        Return the shared table of a model.

        Args:
            name: Name of the model.

        Returns:
            FiniteInvMonoid instance

        Raises:
            ValueError: If name is not supported
        """
        key = name.lower()
        builder = cls._builders.get(key)
        if not builder:
            raise ValueError(f"Unsupported model: {name}. "
                             f"Choose from: {', '.join(cls._builders.keys())}")
        if key not in cls._instances:
            cls._instances[key] = builder()
        return cls._instances[key]

    @classmethod
    def names(cls):
        return list(cls._builders.keys())

    @classmethod
    def register_model(cls, name: str, builder: Builder) -> None:
        """Register a new model builder."""
        cls._builders[name.lower()] = builder
        cls._instances.pop(name.lower(), None)
