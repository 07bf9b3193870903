import numpy as np
import pytest

from framerep import (
    CoefficientMatrix,
    DimensionMismatch,
    FormulaMismatch,
    NotBijective,
    canonical_dual,
    coefficient_projector,
    compose_rep,
    frame_bounds,
    frame_operator,
    gen_frame,
    gram,
    invert_from_matrix,
    is_representable,
    make_frame,
    matrix_rep,
    multiplier,
    op_properties_from_matrix,
    operator_synth,
    pinv,
    pseudo_matrix_of_inverse,
    rank_of,
    rank_one_expansion,
    rel_frobenius_error,
    riesz_equivalence_check,
)


def _randc(rng, *shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def _rand_invertible(rng, d):
    while True:
        m = _randc(rng, d, d)
        s = np.linalg.svd(m, compute_uv=False)
        if s[-1] > 1e-3 * s[0]:
            return m


class TestMatrixRep:
    def test_identity_on_onb(self, onb2):
        m = matrix_rep(np.eye(2), onb2, onb2)
        assert np.allclose(m.matrix, np.eye(2))

    def test_identity_on_psi1_is_gram(self, psi1):
        m = matrix_rep(np.eye(2), psi1, psi1)
        assert np.allclose(m.matrix, gram(psi1, psi1).matrix)

    def test_onb_representation_is_the_matrix(self, onb2):
        swap = np.array([[0, 1], [1, 0]], dtype=complex)
        assert np.allclose(matrix_rep(swap, onb2, onb2).matrix, swap)

    def test_entries_are_inner_products(self, rng, psi1, mercedes):
        o = _randc(rng, 2, 2)
        m = matrix_rep(o, mercedes, psi1).matrix
        expected = np.vdot(mercedes.matrix[:, 1], o @ psi1.matrix[:, 2])
        assert m[1, 2] == pytest.approx(np.conj(expected))  # <O psi_n, phi_m>

    def test_norm_bound(self, rng):
        phi = gen_frame("random", seed=1, dim=3, size=6)
        psi = gen_frame("random", seed=2, dim=2, size=5)
        o = _randc(rng, 3, 2)
        m = matrix_rep(o, phi, psi).matrix
        factor = np.sqrt(frame_bounds(phi).upper * frame_bounds(psi).upper)
        assert np.linalg.norm(m, 2) <= factor * np.linalg.norm(o, 2) * (1 + 1e-12)

    def test_dimension_mismatch(self, psi1, onb3):
        with pytest.raises(DimensionMismatch):
            matrix_rep(np.eye(2), onb3, psi1)


class TestOperatorSynth:
    def test_identity_on_onb(self, onb2):
        assert np.allclose(operator_synth(np.eye(2), onb2, onb2).matrix, np.eye(2))

    def test_identity_matrix_gives_frame_operator(self, psi1):
        o = operator_synth(np.eye(3), psi1, psi1)
        assert np.allclose(o.matrix, [[2, 1], [1, 2]])

    def test_identity_against_dual_pair(self, psi1):
        o = operator_synth(np.eye(3), psi1, canonical_dual(psi1))
        assert np.allclose(o.matrix, np.eye(2))

    def test_norm_bound(self, rng):
        phi = gen_frame("random", seed=3, dim=3, size=5)
        psi = gen_frame("random", seed=4, dim=3, size=7)
        m = _randc(rng, 5, 7)
        o = operator_synth(m, phi, psi).matrix
        factor = np.sqrt(frame_bounds(phi).upper * frame_bounds(psi).upper)
        assert np.linalg.norm(o, 2) <= factor * np.linalg.norm(m, 2) * (1 + 1e-12)

    def test_size_mismatch(self, psi1, onb2):
        with pytest.raises(DimensionMismatch):
            operator_synth(np.eye(2), psi1, onb2)


class TestRoundTrip:
    def test_dual_synthesis_inverts_representation(self, rng):
        phi = gen_frame("random", seed=5, dim=3, size=6)
        psi = gen_frame("random", seed=6, dim=2, size=5)
        o = _randc(rng, 3, 2)
        m = matrix_rep(o, canonical_dual(phi), canonical_dual(psi))
        assert rel_frobenius_error(operator_synth(m, phi, psi).matrix, o) <= 1e-9
        m2 = matrix_rep(o, phi, psi)
        back = operator_synth(m2, canonical_dual(phi), canonical_dual(psi)).matrix
        assert rel_frobenius_error(back, o) <= 1e-9

    def test_representation_is_injective(self, rng, psi1):
        o1 = _randc(rng, 2, 2)
        o2 = _randc(rng, 2, 2)
        m1 = matrix_rep(o1, psi1, psi1).matrix
        m2 = matrix_rep(o2, psi1, psi1).matrix
        assert np.linalg.norm(m1 - m2) > 0


class TestRankOneExpansion:
    def test_single_entry_on_onb(self, onb2):
        m = np.zeros((2, 2), dtype=complex)
        m[0, 0] = 1
        o = rank_one_expansion(m, onb2, onb2).matrix
        assert np.allclose(o, [[1, 0], [0, 0]])

    def test_identity_matrix_gives_frame_operator(self, psi1):
        o = rank_one_expansion(np.eye(3), psi1, psi1).matrix
        assert np.allclose(o, [[2, 1], [1, 2]])

    def test_matches_operator_synth(self, rng):
        phi = gen_frame("random", seed=7, dim=3, size=5)
        psi = gen_frame("random", seed=8, dim=3, size=5)
        m = _randc(rng, 5, 5)
        a = rank_one_expansion(m, phi, psi).matrix
        b = operator_synth(m, phi, psi).matrix
        assert rel_frobenius_error(a, b) <= 1e-10


class TestRepresentability:
    def test_onb_everything_representable(self, rng, onb2):
        rep = is_representable(_randc(rng, 2, 2), onb2, onb2)
        assert rep.representable and rep.cond_range_kernel and rep.cond_gram_sandwich

    def test_doubled_unit_vector_not_representable(self):
        # projector is the rank-one averaging matrix, so the sandwich moves E00
        f = make_frame(1, [[1], [1]])
        rep = is_representable(np.array([[1, 0], [0, 0]]), f, f)
        assert not rep.representable
        assert not rep.cond_range_kernel and not rep.cond_gram_sandwich
        assert rep.witness_operator is None
        sandwich = np.full((2, 2), 0.25)
        assert rep.sandwich_residual == pytest.approx(
            np.linalg.norm(sandwich - np.array([[1, 0], [0, 0]]))
        )

    def test_all_ones_representable_with_identity_witness(self):
        f = make_frame(1, [[1], [1]])
        rep = is_representable(np.ones((2, 2)), f, f)
        assert rep.representable
        assert np.allclose(rep.witness_operator.matrix, [[1]])
        again = matrix_rep(rep.witness_operator, f, f).matrix
        assert np.allclose(again, np.ones((2, 2)))

    def test_witness_reproduces_matrix(self, rng):
        phi = gen_frame("random", seed=9, dim=2, size=5)
        psi = gen_frame("random", seed=10, dim=3, size=4)
        m = matrix_rep(_randc(rng, 2, 3), phi, psi)
        rep = is_representable(m, phi, psi)
        assert rep.representable
        again = matrix_rep(rep.witness_operator, phi, psi).matrix
        assert rel_frobenius_error(again, m.matrix) <= 1e-9

    def test_out_of_range_perturbation_flips_verdict(self, rng):
        phi = gen_frame("random", seed=11, dim=2, size=5)
        psi = gen_frame("random", seed=12, dim=2, size=4)
        m = matrix_rep(_randc(rng, 2, 2), phi, psi).matrix
        off = (np.eye(5) - coefficient_projector(phi)) @ _randc(rng, 5, 4)
        rep = is_representable(m + off, phi, psi)
        assert not rep.representable and not rep.cond_range_kernel


class TestJectivity:
    def test_identity_on_onb(self, onb2):
        rep = op_properties_from_matrix(np.eye(2), onb2, onb2)
        assert rep.injective and rep.surjective and rep.bijective

    def test_dual_gram_is_bijective(self, psi1):
        dual = canonical_dual(psi1)
        m = gram(dual, dual).matrix
        rep = op_properties_from_matrix(m, psi1, psi1)
        assert rep.bijective
        assert rank_of(m) == 2  # the coefficient matrix itself is singular

    def test_zero_matrix(self, psi1):
        rep = op_properties_from_matrix(np.zeros((3, 3)), psi1, psi1)
        assert not rep.injective and not rep.surjective and not rep.bijective

    def test_agrees_with_direct_ranks(self, rng):
        phi = gen_frame("random", seed=13, dim=3, size=5)
        psi = gen_frame("random", seed=14, dim=2, size=4)
        rep = op_properties_from_matrix(_randc(rng, 5, 4), phi, psi)
        assert rep.residuals["rank_disagreement"] == 0.0

    def test_rectangular_operator(self, rng, onb2, onb3):
        # a full-rank 3x2 operator is injective but never surjective
        m = matrix_rep(_randc(rng, 3, 2), onb3, onb2)
        rep = op_properties_from_matrix(m, onb3, onb2)
        assert rep.injective and not rep.surjective and not rep.bijective


class TestInvertFromMatrix:
    def test_identity_on_onb(self, onb2):
        inv = invert_from_matrix(np.eye(2), onb2, onb2)
        assert np.allclose(inv.matrix, np.eye(2))

    def test_frame_operator_representation(self, psi1):
        # oracle: dense inversion of the synthesized operator
        s = frame_operator(psi1)
        m = matrix_rep(s, psi1, psi1)
        synthesized = operator_synth(m, psi1, psi1).matrix
        assert np.allclose(synthesized, s @ s @ s)
        inv = invert_from_matrix(m, psi1, psi1)
        expected = np.array([[14, -13], [-13, 14]]) / 27.0
        assert np.allclose(inv.matrix, np.linalg.inv(synthesized))
        assert np.allclose(inv.matrix, expected)
        assert rel_frobenius_error(inv.matrix @ synthesized, np.eye(2)) <= 1e-9

    def test_random_bijective_fixture(self, rng):
        phi = gen_frame("random", seed=15, dim=3, size=6)
        o = _rand_invertible(rng, 3)
        m = matrix_rep(o, canonical_dual(phi), canonical_dual(phi))
        inv = invert_from_matrix(m, phi, phi)
        assert rel_frobenius_error(inv.matrix, np.linalg.inv(o)) <= 1e-8

    def test_not_bijective(self, psi1):
        with pytest.raises(NotBijective):
            invert_from_matrix(np.zeros((3, 3)), psi1, psi1)

    def test_formula_mismatch_on_disjoint_ranges(self):
        # equal-size frames whose analysis ranges differ: the cross-operator
        # sandwich cannot reproduce the other formulas
        phi = make_frame(1, [[1], [1]])
        psi = make_frame(1, [[1], [1j]])
        m = matrix_rep(np.eye(1), canonical_dual(phi), canonical_dual(psi))
        with pytest.raises(FormulaMismatch):
            invert_from_matrix(m, phi, psi)

    def test_dual_pair_ranges_coincide(self, rng, psi1):
        o = _rand_invertible(rng, 2)
        psi = canonical_dual(psi1)
        m = matrix_rep(o, canonical_dual(psi1), canonical_dual(psi))
        inv = invert_from_matrix(m, psi1, psi)
        assert rel_frobenius_error(inv.matrix, np.linalg.inv(o)) <= 1e-8


class TestPseudoMatrixOfInverse:
    def test_identity_on_onb(self, onb2):
        m = pseudo_matrix_of_inverse(np.eye(2), onb2, onb2)
        assert np.allclose(m.matrix, np.eye(2))

    def test_identity_on_psi1(self, psi1):
        # oracle: pseudo-inverse of the Gram matrix [[1,0,1],[0,1,1],[1,1,2]]
        m = pseudo_matrix_of_inverse(np.eye(2), psi1, psi1)
        oracle = pinv(gram(psi1, psi1).matrix)
        assert np.allclose(m.matrix, oracle)
        dual = canonical_dual(psi1)
        assert np.allclose(m.matrix, gram(dual, dual).matrix)

    def test_equals_pinv_of_restricted_representation(self, rng):
        phi = gen_frame("random", seed=16, dim=3, size=7)
        psi = gen_frame("random", seed=17, dim=3, size=5)
        o = _rand_invertible(rng, 3)
        m_dagger = pseudo_matrix_of_inverse(o, phi, psi)
        m = matrix_rep(o, phi, psi).matrix
        oracle = pinv(coefficient_projector(phi) @ m @ coefficient_projector(psi))
        assert rel_frobenius_error(m_dagger.matrix, oracle) <= 1e-8

    def test_rejects_singular(self, onb2):
        with pytest.raises(NotBijective):
            pseudo_matrix_of_inverse(np.array([[1, 0], [0, 0]]), onb2, onb2)

    def test_rejects_rectangular(self, onb2, onb3):
        with pytest.raises(NotBijective):
            pseudo_matrix_of_inverse(np.ones((3, 2)), onb3, onb2)


class TestComposeRep:
    def test_identities_on_onb(self, onb2):
        m = compose_rep(np.eye(2), np.eye(2), onb2, onb2, onb2)
        assert np.allclose(m.matrix, np.eye(2))

    def test_swap_after_scaling(self, onb2, psi1):
        o = np.array([[0, 1], [1, 0]], dtype=complex)
        p = np.diag([2.0, 3.0]).astype(complex)
        m = compose_rep(o, p, onb2, psi1, onb2)
        assert np.allclose(m.matrix, [[0, 3], [2, 0]])

    def test_arbitrary_middle_frames(self, rng):
        phi = gen_frame("random", seed=18, dim=3, size=3)
        xi = gen_frame("random", seed=19, dim=3, size=5)
        psi = gen_frame("random", seed=20, dim=3, size=7)
        o = _randc(rng, 3, 3)
        p = _randc(rng, 3, 3)
        m = compose_rep(o, p, phi, xi, psi)
        direct = matrix_rep(o @ p, phi, psi).matrix
        assert rel_frobenius_error(m.matrix, direct) <= 1e-9

    def test_chain_mismatch(self, onb2, onb3):
        with pytest.raises(DimensionMismatch):
            compose_rep(np.eye(2), np.eye(3), onb2, onb3, onb3)


class TestMultiplier:
    def test_all_ones_gives_frame_operator(self, psi1):
        o = multiplier(np.ones(3), psi1, psi1)
        assert np.allclose(o.matrix, [[2, 1], [1, 2]])

    def test_all_ones_on_dual_pair_gives_identity(self, psi1):
        o = multiplier(np.ones(3), canonical_dual(psi1), psi1)
        assert np.allclose(o.matrix, np.eye(2))

    def test_one_hot_on_onb(self, onb2):
        o = multiplier([1, 0], onb2, onb2)
        assert np.allclose(o.matrix, [[1, 0], [0, 0]])

    def test_equals_diagonal_synthesis(self, rng):
        phi = gen_frame("random", seed=21, dim=2, size=4)
        psi = gen_frame("random", seed=22, dim=2, size=4)
        sym = _randc(rng, 4)
        a = multiplier(sym, phi, psi).matrix
        b = operator_synth(np.diag(sym), phi, psi).matrix
        assert np.allclose(a, b)

    def test_size_mismatch(self, psi1, onb2):
        with pytest.raises(DimensionMismatch):
            multiplier(np.ones(3), psi1, onb2)


class TestRieszEquivalence:
    def test_onb_pair_confirmed(self, onb2):
        rep = riesz_equivalence_check(onb2, onb2, trials=20, seed=1)
        assert rep.both_riesz and rep.check_passed and rep.disagreements == 0

    def test_redundant_pair_witness(self, psi1):
        rep = riesz_equivalence_check(psi1, psi1)
        assert not rep.both_riesz
        assert rep.witness_rank == 2
        assert rep.witness_identity_residual <= 1e-10
        assert not rep.witness_bijective
        assert rep.check_passed

    def test_mixed_riesz_pair(self, onb2):
        skew = make_frame(2, [(1, 0), (1, 1)])
        rep = riesz_equivalence_check(skew, onb2, trials=15, seed=2)
        assert rep.both_riesz and rep.check_passed

    def test_different_spaces_rejected(self, onb2, onb3):
        with pytest.raises(DimensionMismatch):
            riesz_equivalence_check(onb2, onb3)


class TestCoefficientMatrixType:
    def test_shape_validated(self, psi1, onb2):
        with pytest.raises(DimensionMismatch):
            CoefficientMatrix(np.eye(2), row_frame=psi1, col_frame=onb2)

    def test_accepts_matching_frames(self, psi1, onb2):
        m = CoefficientMatrix(np.ones((3, 2)), row_frame=psi1, col_frame=onb2)
        assert m.matrix.shape == (3, 2)
