"""
The witness models A01, B, C and C with the componentwise involution.

A01 and B are closed from their boolean matrix realizations; C is the
direct product A01 x A01 with ``(x, y)* = (y*, x*)``.
"""

import itertools
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from hyposharp.errors import RankError
from hyposharp.hypo import RankedWord
from hyposharp.models.closure import build_from_matrices, matrix_realization
from hyposharp.models.monoid import FiniteInvMonoid, direct_product
from hyposharp.utils.logger import setup_logger

logger = setup_logger(__name__)

Relation = Tuple[str, str]

A01_RELATIONS: List[Relation] = [
    ("aa", "a"), ("bb", "b"), ("aba", "ba"), ("bab", "ba"),
]

B_RELATIONS: List[Relation] = [
    ("aa", "a"), ("bb", "b"), ("cc", "c"),
    ("aba", "ba"), ("bab", "ba"),
    ("aca", "ca"), ("cac", "ca"),
    ("bcb", "cb"), ("cbc", "cb"),
    ("acb", "cab"), ("bac", "bca"), ("bcab", "cba"),
]

# letter -> generator of the model that hypo_n maps onto
HYPO_IMAGES: Dict[str, Dict[int, str]] = {
    "a01": {1: "a", 2: "b"},
    "b": {1: "a", 2: "b", 3: "c"},
    "c": {1: "(a,1)", 2: "(b,1)", 3: "(1,a)", 4: "(1,b)"},
}


def build_a01() -> FiniteInvMonoid:
    """The five element monoid ``{1, a, b, ab, ba}`` with ``a* = b``."""
    model = build_from_matrices("a01", matrix_realization("a01"), expected_size=5)
    model.verify()
    logger.info(f"built a01 with {model.size} elements")
    return model


def build_b() -> FiniteInvMonoid:
    """The fourteen element monoid with ``a* = c`` and ``b* = b``."""
    model = build_from_matrices("b", matrix_realization("b"), expected_size=14)
    model.verify()
    logger.info(f"built b with {model.size} elements")
    return model


def build_c() -> FiniteInvMonoid:
    """``A01 x A01`` with ``(x, y)* = (y*, x*)``, 25 elements."""
    a01 = build_a01()
    model = direct_product("c", a01, a01, involution="swap")
    model.verify()
    logger.info(f"built c with {model.size} elements")
    return model


def build_c_circ() -> FiniteInvMonoid:
    """``A01 x A01`` with the componentwise involution ``(x, y) -> (x*, y*)``."""
    a01 = build_a01()
    model = direct_product("c_circ", a01, a01, involution="componentwise")
    model.verify()
    logger.info(f"built c_circ with {model.size} elements")
    return model


def verify_relations(model: FiniteInvMonoid, relations: Sequence[Relation]) -> List[Relation]:
    """
    Evaluate presentation relations in a table.

    Returns:
        The relations that fail; empty when all hold.
    """
    failing = [
        (left, right) for left, right in relations
        if model.evaluate_label(left) != model.evaluate_label(right)
    ]
    for left, right in failing:
        logger.debug(f"{model.name}: relation {left} = {right} fails")
    return failing


def _extend(src: FiniteInvMonoid, dst: FiniteInvMonoid, images: Dict[str, int]) -> Optional[np.ndarray]:
    words = src.generator_words()
    if len(words) != src.size:
        return None
    mapping = np.empty(src.size, dtype=np.int64)
    for element, word in words.items():
        mapping[element] = dst.multiply(*(images[name] for name in word))
    return mapping


def is_embedding(src: FiniteInvMonoid, dst: FiniteInvMonoid, mapping: np.ndarray) -> bool:
    """Injective, unit preserving, multiplicative and compatible with the involutions."""
    return (
        len(set(mapping.tolist())) == src.size
        and mapping[src.unit] == dst.unit
        and np.array_equal(dst.mul[mapping[:, None], mapping[None, :]], mapping[src.mul])
        and np.array_equal(dst.inv[mapping], mapping[src.inv])
    )


def find_embedding(
    src: FiniteInvMonoid,
    dst: FiniteInvMonoid,
    images: Optional[Dict[str, str]] = None,
) -> Optional[Dict[str, str]]:
    """
    Search for an embedding of involution monoids ``src -> dst``.

    Args:
        src: The monoid to embed; it must be generated by its generators.
        dst: The target monoid.
        images: Fixed generator images (labels of ``dst``); when omitted
            every assignment of generators is tried.

    Returns:
        Label of every ``src`` element -> label of its image, or None.
    """
    names = sorted(src.generators)
    if images is not None:
        candidates = [tuple(dst.element(images[name]) for name in names)]
    else:
        candidates = itertools.product(range(dst.size), repeat=len(names))
    for choice in candidates:
        mapping = _extend(src, dst, dict(zip(names, choice)))
        if mapping is not None and is_embedding(src, dst, mapping):
            return {src.label(i): dst.label(int(mapping[i])) for i in range(src.size)}
    return None


def hypo_image(model: FiniteInvMonoid, word: RankedWord) -> int:
    """
    Image of a hypoplactic word in its witness model.

    ``hypo_2 -> A01``, ``hypo_3 -> B`` and ``hypo_4 -> C`` send letters to
    generators; each map turns the Schützenberger involution into ``*``.

    Raises:
        RankError: If the model has no image for a letter of the word.
    """
    letters = HYPO_IMAGES.get(model.name)
    if letters is None:
        raise ValueError(f"Unsupported model for hypo images: {model.name}. "
                         f"Choose from: {', '.join(HYPO_IMAGES.keys())}")
    if word.rank > len(letters):
        raise RankError(f"{model.name} receives words of rank at most {len(letters)}, got {word.rank}")
    return model.multiply(*(letters[letter] for letter in word))
