import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hyposharp.errors import ParseError, RankError
from hyposharp.hypo import (
    HypoElement,
    QuasiRibbonTableau,
    RankedWord,
    defining_relations,
    element_of,
    equivalent,
    ev,
    format_inversions,
    insert,
    inver,
    mult,
    schutzenberger,
    tableau_of,
    words_up_to,
)
from tests.strategies import ranked_words

FIGURE = RankedWord.parse("36131512665")


def _word(text, rank=None):
    return RankedWord.parse(text, rank)


class TestRankedWord:
    def test_contiguous_digits(self):
        assert FIGURE.letters == (3, 6, 1, 3, 1, 5, 1, 2, 6, 6, 5)
        assert FIGURE.rank == 6

    def test_separated_letters_above_nine(self):
        word = _word("1 2 10")
        assert word.letters == (1, 2, 10)
        assert word.rank == 10
        assert str(word) == "1 2 10"

    def test_explicit_rank(self):
        assert _word("12", 4).rank == 4

    def test_letter_outside_rank(self):
        with pytest.raises(RankError):
            _word("5", 3)

    def test_bad_character(self):
        with pytest.raises(ParseError):
            _word("12a")

    def test_empty_word(self):
        assert len(_word("ε", 3)) == 0
        assert str(_word("", 2)) == "ε"

    def test_concatenation_needs_equal_ranks(self):
        with pytest.raises(RankError):
            _word("1", 2) + _word("1", 3)

    def test_words_up_to_counts(self):
        assert sum(1 for _ in words_up_to(2, 7)) == 254
        assert sum(1 for _ in words_up_to(3, 5)) == 363
        assert sum(1 for _ in words_up_to(4, 4)) == 340


class TestInsertion:
    def test_figure_tableau(self):
        assert tableau_of(FIGURE).rows == ((1, 1, 1, 2), (3, 3, 5, 5), (6, 6, 6))

    def test_insert_into_empty(self):
        assert insert(QuasiRibbonTableau(), 3).rows == ((3,),)

    def test_insert_appends_to_row(self):
        assert insert(QuasiRibbonTableau(((1, 1, 1),)), 2).rows == ((1, 1, 1, 2),)

    def test_smallest_letter_starts_a_new_top_row(self):
        assert insert(QuasiRibbonTableau(((6, 6, 6),)), 3).rows == ((3,), (6, 6, 6))

    def test_descent_splits_rows(self):
        assert tableau_of(_word("21")).rows == ((1,), (2,))
        assert tableau_of(_word("12")).rows == ((1, 2),)

    def test_invalid_rows_are_rejected(self):
        with pytest.raises(ValueError):
            QuasiRibbonTableau(((2, 1),))
        with pytest.raises(ValueError):
            QuasiRibbonTableau(((1, 2), (2, 3)))

    @given(ranked_words(5, max_size=12))
    def test_every_insertion_keeps_the_shape(self, word):
        tableau = QuasiRibbonTableau()
        for letter in word:
            tableau = insert(tableau, letter)
            tableau.validate()
        assert sorted(tableau.reading()) == sorted(word.letters)

    def test_render_aligns_glued_cells(self):
        lines = tableau_of(FIGURE).render().splitlines()
        assert lines[0] == "1 1 1 2"
        assert lines[1] == " " * 6 + "3 3 5 5"
        assert lines[2] == " " * 12 + "6 6 6"

    def test_render_with_color_wraps_rows(self):
        rendered = tableau_of(_word("21")).render(color=True)
        assert "\x1b[0m" in rendered


class TestInvariants:
    def test_figure_evaluation(self):
        assert ev(FIGURE) == {1: 3, 2: 1, 3: 2, 5: 2, 6: 3}

    def test_figure_inversions(self):
        assert inver(FIGURE) == {(3, 2), (6, 5)}
        assert format_inversions(inver(FIGURE)) == "{3-2, 6-5}"

    def test_equivalent_examples(self):
        assert equivalent(_word("121"), _word("211"))
        assert equivalent(_word("132"), _word("312"))
        assert not equivalent(_word("12"), _word("21"))

    def test_tableau_equality_matches_congruence(self):
        words = list(words_up_to(3, 5))
        for u, v in itertools.combinations(words[:120], 2):
            assert equivalent(u, v) == (tableau_of(u) == tableau_of(v))


class TestSchutzenberger:
    def test_examples(self):
        assert schutzenberger(_word("12", 2)) == _word("12", 2)
        assert schutzenberger(_word("1", 3)) == _word("3", 3)
        assert len(schutzenberger(_word("", 4))) == 0

    @given(ranked_words(4))
    def test_is_an_involution(self, word):
        assert schutzenberger(schutzenberger(word)) == word

    @given(ranked_words(4), ranked_words(4))
    def test_reverses_products(self, u, v):
        assert schutzenberger(u + v) == schutzenberger(v) + schutzenberger(u)

    @given(ranked_words(4), ranked_words(4))
    def test_respects_congruence(self, u, v):
        if equivalent(u, v):
            assert equivalent(schutzenberger(u), schutzenberger(v))


class TestElements:
    def test_figure_canonical_word(self):
        assert str(element_of(FIGURE).canon) == "11132356566"

    @pytest.mark.parametrize("rank, length", [(2, 7), (3, 5), (4, 5)])
    def test_canonical_word_represents_its_class(self, rank, length):
        for word in words_up_to(rank, length, include_empty=True):
            element = element_of(word)
            assert equivalent(element.canon, word)
            assert element_of(element.canon) == element

    @given(ranked_words(4), ranked_words(4), ranked_words(4))
    def test_multiplication_is_associative(self, u, v, w):
        a, b, c = element_of(u), element_of(v), element_of(w)
        assert (a * b) * c == a * (b * c)

    @given(ranked_words(4))
    def test_unit(self, word):
        element = element_of(word)
        assert HypoElement.unit(4) * element == element == element * HypoElement.unit(4)

    @given(ranked_words(4), ranked_words(4))
    def test_sharp_is_an_anti_automorphism(self, u, v):
        a, b = element_of(u), element_of(v)
        assert (a * b).sharp() == b.sharp() * a.sharp()
        assert a.sharp().sharp() == a

    def test_ranks_must_agree(self):
        with pytest.raises(RankError):
            mult(element_of(_word("1", 2)), element_of(_word("1", 3)))

    def test_rerank(self):
        assert element_of(_word("12"), 4).rank == 4


class TestCongruence:
    @given(ranked_words(4), ranked_words(4), ranked_words(4), ranked_words(4))
    def test_compatible_with_concatenation(self, u, v, w, t):
        if equivalent(u, v):
            assert equivalent(w + u + t, w + v + t)

    def test_relations_include_small_instances(self):
        relations = {(str(left), str(right)) for left, right in defining_relations(2)}
        assert ("121", "211") in relations
        assert ("212", "221") in relations

    @pytest.mark.parametrize("rank", [2, 3, 4])
    def test_every_relation_is_a_congruence(self, rank):
        for left, right in defining_relations(rank):
            assert equivalent(left, right)

    def test_rank_one_has_no_relations(self):
        assert defining_relations(1) == []

    def test_bound_outside_rank(self):
        with pytest.raises(RankError):
            defining_relations(3, 4)

    @given(st.integers(min_value=2, max_value=4))
    def test_bound_restricts_letters(self, rank):
        for left, right in defining_relations(rank, 2):
            assert max(left.letters + right.letters) <= 2
