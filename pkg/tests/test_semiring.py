import numpy as np
import pytest
from hypothesis import given

from hyposharp.errors import DimensionError
from hyposharp.semiring import SemiringFactory, TropMatrix, block_diag, mat_mul, skew_transpose
from hyposharp.semiring import blocks
from hyposharp.semiring.providers.tropical import NEG_INF, TropicalSemiring
from tests.strategies import tropical_values, upper_triangular

tropical = SemiringFactory.create("tropical")
boolean = SemiringFactory.create("boolean")


class TestTropicalAxioms:
    @given(tropical_values(), tropical_values(), tropical_values())
    def test_addition_is_associative_and_commutative(self, a, b, c):
        assert tropical.add(tropical.add(a, b), c) == tropical.add(a, tropical.add(b, c))
        assert tropical.add(a, b) == tropical.add(b, a)

    @given(tropical_values(), tropical_values(), tropical_values())
    def test_multiplication_distributes(self, a, b, c):
        assert tropical.mul(a, tropical.add(b, c)) == tropical.add(tropical.mul(a, b), tropical.mul(a, c))

    @given(tropical_values())
    def test_units_and_zero(self, a):
        assert tropical.add(a, tropical.zero) == a
        assert tropical.mul(a, tropical.one) == a
        assert tropical.mul(a, tropical.zero) == tropical.zero
        assert tropical.add(a, a) == a

    def test_s_has_infinite_order(self):
        powers = [tropical.power(tropical.s, exponent) for exponent in range(64)]
        assert len(set(powers)) == 64

    def test_s_must_be_positive(self):
        with pytest.raises(ValueError):
            TropicalSemiring(s=0)

    def test_encoding(self):
        assert tropical.encode(NEG_INF) == "-inf"
        assert tropical.encode(3.0) == 3
        assert tropical.decode("-inf") == NEG_INF

    def test_boolean_has_no_s(self):
        with pytest.raises(ValueError):
            boolean.s


class TestFactory:
    def test_unsupported(self):
        with pytest.raises(ValueError, match="Choose from"):
            SemiringFactory.create("minplus")

    def test_instances_are_shared(self):
        assert SemiringFactory.create("Tropical") is tropical


class TestBlocks:
    def test_j_and_k_do_not_commute(self):
        jk, kj = blocks.JK(), blocks.KJ()
        assert jk != kj
        assert kj.entries[0, 2] == tropical.one
        assert jk.entries[0, 2] == tropical.zero

    def test_j_and_k_are_idempotent(self):
        assert blocks.J() @ blocks.J() == blocks.J()
        assert blocks.K() @ blocks.K() == blocks.K()

    def test_pq_is_scalar_s(self):
        assert blocks.P() @ blocks.Q() == TropMatrix.diagonal([tropical.s, tropical.s])
        assert blocks.PQ_power(2, 3) == TropMatrix.diagonal([2.0, 3.0])

    def test_skew_transpose_swaps_j_and_k(self):
        assert skew_transpose(blocks.J()) == blocks.K()
        assert skew_transpose(blocks.P()) == blocks.Q()
        assert skew_transpose(blocks.E(4)) == blocks.E(4)

    def test_boolean_blocks(self):
        j = blocks.J(boolean)
        assert j.entries.dtype == np.bool_
        assert j @ j == j


class TestMatrices:
    @given(upper_triangular(dim=4), upper_triangular(dim=4), upper_triangular(dim=4))
    def test_product_is_associative(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @given(upper_triangular(dim=3), upper_triangular(dim=3))
    def test_upper_triangular_is_closed(self, a, b):
        assert mat_mul(a, b).is_upper_triangular()

    @given(upper_triangular(dim=4), upper_triangular(dim=4))
    def test_skew_transpose_reverses_products(self, a, b):
        assert skew_transpose(a @ b) == skew_transpose(b) @ skew_transpose(a)

    @given(upper_triangular())
    def test_skew_transpose_is_an_involution(self, a):
        assert skew_transpose(skew_transpose(a)) == a
        assert a @ TropMatrix.identity(a.dim) == a

    @given(upper_triangular(dim=2), upper_triangular(dim=3))
    def test_skew_transpose_reverses_blocks(self, a, b):
        assert skew_transpose(block_diag([a, b])) == block_diag([skew_transpose(b), skew_transpose(a)])

    def test_block_diag_layout(self):
        matrix = block_diag([blocks.scalar(1), blocks.J(), blocks.E(1)])
        assert matrix.dim == 5
        assert matrix.entries[0, 0] == 1.0
        assert matrix.entries[2, 3] == tropical.one
        assert matrix.entries[0, 4] == tropical.zero

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            blocks.E(2) @ blocks.E(3)

    def test_semiring_mismatch(self):
        with pytest.raises(DimensionError):
            blocks.J() @ blocks.J(boolean)

    def test_non_square(self):
        with pytest.raises(DimensionError):
            TropMatrix([[0.0, 1.0]])

    def test_entries_are_read_only(self):
        with pytest.raises(ValueError):
            blocks.J().entries[0, 0] = 5.0

    def test_json_entries(self):
        matrix = blocks.P()
        assert matrix.to_entries() == [[1, "-inf"], ["-inf", 0]]
        assert TropMatrix.from_entries(matrix.to_entries()) == matrix

    def test_render_marks_zero(self):
        assert blocks.Q().render() == "0 .\n. 1"

    def test_key_separates_matrices(self):
        assert blocks.J().key() != blocks.K().key()
        assert blocks.J().key() == blocks.J().key()
        assert hash(blocks.J()) == hash(blocks.J())
