"""Text front end for words, terms and identities."""

from hyposharp.parser.word_parser import parse_identity, parse_term, parse_word

__all__ = ["parse_identity", "parse_term", "parse_word"]
