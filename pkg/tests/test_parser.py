import pytest

from hyposharp.errors import ParseError
from hyposharp.parser import parse_identity, parse_term, parse_word
from hyposharp.words import EMPTY, Concat, InvWord, Leaf, Star, Symbol


class TestParseTerm:
    def test_single_variable(self):
        assert parse_term("x") == Leaf(Symbol("x"))

    def test_starred_group(self):
        assert parse_term("(x y)*") == Star(Concat((Leaf(Symbol("x")), Leaf(Symbol("y")))))

    def test_power_repeats_factor(self):
        assert parse_word("(x y*)^2") == InvWord.of("x", "y*", "x", "y*")

    def test_multi_letter_identifiers(self):
        assert parse_word("xy x1 y_2") == InvWord.of("xy", "x1", "y_2")

    def test_zero_exponent_is_rejected(self):
        with pytest.raises(ParseError, match="exponent"):
            parse_term("x^0")

    def test_uppercase_is_rejected_with_position(self):
        with pytest.raises(ParseError) as info:
            parse_term("x Y")
        assert info.value.position == 2

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError):
            parse_term("(x y")


class TestParseWord:
    @pytest.mark.parametrize("text", ["", "ε", "1", "  "])
    def test_empty_spellings(self, text):
        assert parse_word(text) == EMPTY


class TestParseIdentity:
    def test_both_separators(self):
        assert parse_identity("x y ≈ y x") == parse_identity("x y = y x")

    def test_stars_are_flattened(self):
        identity = parse_identity("(x y)* ≈ y* x*")
        assert identity.lhs == identity.rhs

    @pytest.mark.parametrize("text", ["x ≈", "≈ x", "x y", "x ≈ y ≈ z"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_identity(text)

    def test_parse_error_is_a_value_error(self):
        with pytest.raises(ValueError):
            parse_identity("x ≈")

    def test_message_points_at_column(self):
        with pytest.raises(ParseError) as info:
            parse_identity("x ≈ y#")
        assert info.value.position == 5
        assert "column 6" in str(info.value)
