from hypothesis import strategies as st

from hyposharp.hypo import RankedWord
from hyposharp.semiring.factory import SemiringFactory
from hyposharp.semiring.matrix import TropMatrix
from hyposharp.semiring.providers.tropical import NEG_INF
from hyposharp.words import Concat, Identity, InvWord, Leaf, Star, Symbol

BASES = ("x", "y", "z")


def symbols(bases=BASES):
    return st.builds(Symbol, st.sampled_from(bases), st.booleans())


def plain_symbols(bases=BASES):
    return st.sampled_from(bases).map(Symbol)


def inv_words(min_size=0, max_size=6, bases=BASES, plain=False):
    elements = plain_symbols(bases) if plain else symbols(bases)
    return st.lists(elements, min_size=min_size, max_size=max_size).map(lambda items: InvWord(tuple(items)))


def terms(bases=BASES):
    leaves = symbols(bases).map(Leaf)
    return st.recursive(
        leaves,
        lambda children: st.one_of(
            st.lists(children, min_size=1, max_size=3).map(lambda parts: Concat(tuple(parts))),
            children.map(Star),
        ),
        max_leaves=8,
    )


@st.composite
def balanced_identities(draw, max_size=6, bases=BASES, plain=False):
    lhs = draw(inv_words(1, max_size, bases, plain))
    rhs = draw(st.permutations(lhs.symbols))
    return Identity(lhs, InvWord(tuple(rhs)))


@st.composite
def free_identities(draw, max_size=6, bases=BASES, plain=False):
    lhs = draw(inv_words(1, max_size, bases, plain))
    rhs = draw(inv_words(1, max_size, bases, plain))
    return Identity(lhs, rhs)


def identities(max_size=6, bases=BASES, plain=False):
    """Half balanced, since random pairs are almost never balanced."""
    return st.one_of(
        free_identities(max_size, bases, plain),
        balanced_identities(max_size, bases, plain),
    )


def ranked_words(rank, min_size=0, max_size=8):
    return st.lists(
        st.integers(min_value=1, max_value=rank), min_size=min_size, max_size=max_size
    ).map(lambda letters: RankedWord(rank, tuple(letters)))


def tropical_values():
    return st.one_of(st.just(NEG_INF), st.integers(min_value=-50, max_value=50).map(float))


@st.composite
def upper_triangular(draw, dim=None):
    """Upper triangular tropical matrices with integer entries on and above the diagonal."""
    size = dim if dim is not None else draw(st.integers(min_value=1, max_value=5))
    tropical = SemiringFactory.create("tropical")
    grid = tropical.zeros(size)
    for i in range(size):
        for j in range(i, size):
            grid[i, j] = draw(tropical_values())
    return TropMatrix(grid, tropical)
