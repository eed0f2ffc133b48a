import pytest
from hypothesis import given, settings

from hyposharp.checker import basis_identities, chaos, find_critical
from hyposharp.errors import UnbalancedIdentityError
from hyposharp.parser import parse_identity
from tests.strategies import balanced_identities


def _named(pairs):
    return {(str(p), str(q)) for p, q in pairs}


class TestChaos:
    def test_trivial_identity_is_stable(self):
        assert chaos(parse_identity("x y x* ≈ x y x*")) == frozenset()

    def test_single_swap(self):
        assert _named(chaos(parse_identity("x y ≈ y x"))) == {("1x", "1y")}

    def test_swap_prefix(self):
        assert _named(chaos(basis_identities()["swap_prefix"])) == {("1x", "1y")}

    def test_reversal_flips_every_pair(self):
        unstable = chaos(parse_identity("x y z ≈ z y x"))
        assert _named(unstable) == {("1x", "1y"), ("1x", "1z"), ("1y", "1z")}

    def test_unbalanced(self):
        with pytest.raises(UnbalancedIdentityError):
            chaos(parse_identity("x ≈ x x"))

    @given(balanced_identities())
    def test_pairs_are_in_left_order(self, identity):
        for p, q in chaos(identity):
            assert p.position < q.position

    @given(balanced_identities())
    def test_mirroring_keeps_the_count(self, identity):
        assert len(chaos(identity)) == len(chaos(identity.mirrored()))


class TestCritical:
    def test_examples(self):
        p, q = find_critical(parse_identity("x y ≈ y x"))
        assert (str(p), str(q)) == ("1x", "1y")
        assert find_critical(parse_identity("x ≈ x")) is None

    def test_leftmost_adjacent_pair(self):
        p, q = find_critical(parse_identity("x y z ≈ z y x"))
        assert (str(p), str(q)) == ("1x", "1y")

    def test_unbalanced(self):
        with pytest.raises(UnbalancedIdentityError):
            find_critical(parse_identity("x y ≈ x"))

    @settings(max_examples=500)
    @given(balanced_identities())
    def test_critical_exists_exactly_when_unstable(self, identity):
        critical = find_critical(identity)
        unstable = chaos(identity)
        assert (critical is None) == (not unstable)
        if critical is not None:
            assert critical in unstable
            assert critical[1].position == critical[0].position + 1
