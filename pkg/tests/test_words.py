import pytest
from hypothesis import assume, given

from hyposharp.errors import UndefinedSymbolError
from hyposharp.parser import parse_term, parse_word
from hyposharp.words import (
    EMPTY,
    Identity,
    InvWord,
    Star,
    Symbol,
    analyze,
    flatten,
    is_balanced,
    occ,
    occ_precedes,
    occurrence,
    occurrences,
    precedes,
    project,
    restrict,
)
from tests.strategies import balanced_identities, inv_words, terms

X, Y, Z = Symbol("x"), Symbol("y"), Symbol("z")


class TestFlatten:
    def test_nested_stars(self):
        word = flatten(parse_term("x^2 (x (y x*)*)* z y*"))
        assert word == InvWord.of("x", "x", "y", "x*", "x*", "z", "y*")

    def test_star_of_single_variable(self):
        assert flatten(parse_term("(x)*")) == InvWord.of("x*")

    def test_double_star_cancels(self):
        assert flatten(parse_term("((x y)*)*")) == InvWord.of("x", "y")

    @given(terms())
    def test_star_commutes_with_flatten(self, term):
        assert flatten(Star(term)) == flatten(term).star()

    @given(terms())
    def test_flatten_is_idempotent_on_words(self, term):
        word = flatten(term)
        assert parse_word(str(word)) == word


class TestInvWord:
    @given(inv_words())
    def test_star_is_an_involution(self, word):
        assert word.star().star() == word

    @given(inv_words(), inv_words())
    def test_star_reverses_products(self, u, v):
        assert (u + v).star() == v.star() + u.star()

    def test_empty_word_renders_as_epsilon(self):
        assert str(EMPTY) == "ε"
        assert len(EMPTY) == 0

    def test_symbol_needs_a_name(self):
        with pytest.raises(ValueError):
            Symbol("")


class TestContent:
    def test_classes(self):
        report = analyze(parse_word("x* z^2 x y* x"))
        assert report.con == {X, Z, X.star(), Y.star()}
        assert report.mix == {X, X.star()}
        assert report.ml == {X.star()}
        assert report.lin == {Y.star()}
        assert report.occ[X] == 2

    @given(inv_words())
    def test_classes_are_nested(self, word):
        report = analyze(word)
        assert report.ml <= report.mix <= report.con
        assert report.lin <= report.con - report.mix
        assert all((symbol.star() in report.mix) for symbol in report.mix)
        assert sum(report.occ.values()) == len(word)

    @given(inv_words())
    def test_occ_matches_report(self, word):
        report = analyze(word)
        assert all(occ(symbol, word) == count for symbol, count in report.occ.items())


class TestRestrictAndProject:
    def test_restrict(self):
        word = parse_word("x* z x y* x")
        assert restrict(word, ["x"]) == InvWord.of("x*", "x", "x")
        assert restrict(word, ["x", "y"]) == InvWord.of("x*", "x", "y*", "x")

    def test_project(self):
        assert project(parse_word("x* z x y* x")) == InvWord.of("x", "z", "x", "y", "x")

    @given(inv_words())
    def test_restrict_is_idempotent(self, word):
        once = restrict(word, ["x", "y"])
        assert restrict(once, ["x", "y"]) == once

    @given(inv_words())
    def test_project_forgets_stars(self, word):
        assert project(word).is_plain()
        assert project(word.star()) == InvWord(tuple(reversed(project(word).symbols)))


class TestOccurrenceOrder:
    def test_precedes(self):
        assert precedes(parse_word("x y x*"), X, X.star())
        assert not precedes(parse_word("x y x"), X, Y)
        assert precedes(parse_word("x* z x y* x"), Z, Y.star())

    def test_precedes_is_irreflexive(self):
        assert not precedes(parse_word("x"), X, X)

    def test_absent_symbol_raises(self):
        with pytest.raises(UndefinedSymbolError):
            precedes(parse_word("x y"), X, Z)

    @given(inv_words(min_size=1))
    def test_precedes_is_antisymmetric(self, word):
        present = sorted(set(word.symbols))
        for a in present:
            for b in present:
                assert not (precedes(word, a, b) and precedes(word, b, a))

    def test_occurrence_refs(self):
        word = parse_word("x y x")
        assert occ_precedes(word, occurrence(word, "x", 1), occurrence(word, "y", 1))
        assert not occ_precedes(word, occurrence(word, "x", 2), occurrence(word, "y", 1))
        assert str(occurrence(word, "x", 2)) == "2x"

    def test_occurrence_beyond_count_raises(self):
        with pytest.raises(UndefinedSymbolError):
            occurrence(parse_word("x y x"), "y", 2)

    def test_occurrence_precedes_across_stars(self):
        word = parse_word("x* z x y* x")
        assert occ_precedes(word, occurrence(word, "x", 1), occurrence(word, "y*", 1))

    @given(inv_words())
    def test_occurrences_number_each_symbol(self, word):
        refs = occurrences(word)
        assert [ref.position for ref in refs] == list(range(len(word)))
        assert all(occurrence(word, ref.symbol, ref.ordinal) == ref for ref in refs)


class TestIdentity:
    def test_sides_must_be_nonempty(self):
        with pytest.raises(ValueError):
            Identity(EMPTY, InvWord.of("x"))

    def test_balance(self):
        assert is_balanced(Identity(parse_word("x y x*"), parse_word("x* y x")))
        assert not is_balanced(Identity(parse_word("x x*"), parse_word("x x")))

    @given(balanced_identities())
    def test_balance_survives_mirroring_and_restriction(self, identity):
        assert is_balanced(identity.mirrored())
        kept = sorted(identity.variables())[:1]
        restricted_lhs = restrict(identity.lhs, kept)
        assume(len(restricted_lhs))
        assert is_balanced(identity.restrict(kept))

    def test_rendering(self):
        assert str(Identity(parse_word("x y*"), parse_word("y* x"))) == "x y* ≈ y* x"
