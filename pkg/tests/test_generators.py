from fractions import Fraction

import pytest

from qlatin.algebraic import sqrt_rational
from qlatin.generators import (
    J_MATRICES,
    X_MATRICES,
    GeneratorId,
    block_elements,
    columns_as_vectors,
    make_H,
    make_Hprime,
    make_V,
    make_W,
    make_W0,
    make_Wk,
    make_alpha_basis,
    make_block_A,
    make_block_B,
    make_block_C,
    make_block_D,
    mat_is_orthonormal,
    parse_generator_id,
    product_construct,
    realize_generator,
    wk_row_matrices,
    y_matrices,
)
from qlatin.qls_core import cardinality, distinct_elements, verify_qls, verify_row_qlr
from qlatin.vectors import QVector, ket, phase_equal, vec_add, vec_scale

F = Fraction


class TestBlocks:
    def test_a0_is_the_identity_block(self):
        (v0, v1), (w0, w1) = make_block_A(F(0))
        assert (v0, v1, w0, w1) == (ket("00"), ket("01"), ket("01"), ket("00"))

    def test_a2_cells(self):
        norm = sqrt_rational(F(1, 5))
        expect0 = vec_scale(vec_add(ket("00"), vec_scale(ket("01"), 2)), norm)
        (v0, v1), _ = make_block_A(F(2))
        assert v0 == expect0

    def test_b_lives_in_the_bottom_plane(self):
        for v in block_elements(make_block_B(F(3))):
            assert v.entries[0].is_zero and v.entries[1].is_zero

    def test_alpha_basis_values(self):
        a1, a2, a3, a4 = make_alpha_basis()
        assert a1 == ket("00")
        assert a2 == QVector([0, F(1, 3), F(2, 3), F(2, 3)])
        assert a3 == QVector([0, F(-2, 3), F(-1, 3), F(2, 3)])
        assert a4 == QVector([0, F(2, 3), F(-2, 3), F(1, 3)])

    def test_c_and_d_blocks_are_orthonormal_pairs(self):
        from qlatin.vectors import inner_product, is_unit

        for maker in (make_block_C, make_block_D):
            (v0, v1), (w0, w1) = maker(F(1, 2))
            assert is_unit(v0) and is_unit(v1)
            assert inner_product(v0, v1).is_zero
            assert (w0, w1) == (v1, v0)


class TestFixedMatrices:
    def test_all_orthonormal(self):
        for m in J_MATRICES + X_MATRICES:
            assert mat_is_orthonormal(m)

    def test_w0_rows_are_x_columns(self):
        g = make_W0()
        for i, m in enumerate(X_MATRICES):
            assert g.cells[i] == columns_as_vectors(m)

    def test_wk_products_stay_orthonormal(self):
        for k in range(1, 5):
            for m in wk_row_matrices(k):
                assert mat_is_orthonormal(m)
        with pytest.raises(ValueError):
            wk_row_matrices(5)


class TestHFamilies:
    def test_h_table_verifies_and_counts(self):
        expected_cards = {0: 4, 1: 8, 2: 6, 3: 4, 4: 8, 5: 6, 6: 8, 7: 8, 8: 8}
        for ell, card in expected_cards.items():
            g = make_H(ell)
            assert verify_qls(g).ok
            assert cardinality(g).cardinality == card

    def test_hprime_verifies(self):
        for ell in (2, 4, 6, 8):
            assert verify_qls(make_Hprime(ell)).ok

    def test_range_errors(self):
        with pytest.raises(ValueError):
            make_H(9)
        with pytest.raises(ValueError):
            make_Hprime(3)


class TestProductRule:
    def test_v_rectangle(self):
        v = make_V(0, 1)
        assert verify_row_qlr(v).ok
        with pytest.raises(ValueError):
            make_V(2, 2)

    def test_w_matches_row_matrix_display_cell_by_cell(self):
        a, b = F(1), F(2)
        grid = make_W(a, b)
        for i, y in enumerate(y_matrices(a, b)):
            for j, expected in enumerate(columns_as_vectors(y)):
                assert phase_equal(grid.cells[i][j], expected)

    def test_w0_equals_product_form_as_a_set(self):
        w0 = make_W0()
        prod = product_construct(make_V(0, F(4, 3)), make_V(0, F(12, 5)), "cross-check")
        assert distinct_elements(w0) == distinct_elements(prod)
        assert cardinality(w0).cardinality == 16

    def test_product_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            product_construct(make_V(0, 1), make_V(2, 3).__class__([[ket("0"), ket("1")]]), "bad")

    def test_wk_grids_verify_with_cardinality_16(self):
        for k in range(1, 5):
            g = make_Wk(k)
            assert verify_qls(g).ok
            assert cardinality(g).cardinality == 16


class TestGeneratorIds:
    @pytest.mark.parametrize(
        "text",
        ["H(0)", "H(8)", "Hprime(4)", "W0", "Wk(3)", "W(5,6)", "W(1/2,-3)", "A(2)", "D(4/3)"],
    )
    def test_parse_and_realize_round_trip(self, text):
        gid = parse_generator_id(text)
        assert isinstance(gid, GeneratorId)
        g = realize_generator(gid)
        assert verify_qls(g).ok
        assert realize_generator(gid.canonical()) is g  # realization is cached

    @pytest.mark.parametrize(
        "text",
        ["H(9)", "Hprime(1)", "Wk(0)", "Wk(5)", "W(2,2)", "W0(1)", "Q(1)", "H", "H(1,2)", "A(x)"],
    )
    def test_invalid_ids_rejected(self, text):
        with pytest.raises(ValueError):
            parse_generator_id(text)

    def test_block_ids_realize_in_subspace_coordinates(self):
        g = realize_generator("A(2)")
        assert g.order == 2
        assert verify_qls(g).ok
        # the block repeats its two cells on the anti-diagonal
        assert cardinality(g).cardinality == 2
