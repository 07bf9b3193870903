import numpy as np
import pytest

from framerep import (
    DimensionMismatch,
    Frame,
    IllConditioned,
    NotBijective,
    canonical_dual,
    frame_operator,
    gen_frame,
    solve,
    solve_via_duals,
)


def _randc(rng, *shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def _rand_invertible(rng, d):
    while True:
        m = _randc(rng, d, d)
        s = np.linalg.svd(m, compute_uv=False)
        if s[-1] > 1e-3 * s[0]:
            return m


def test_identity_operator(onb2, psi1):
    rep = solve(np.eye(2), [1, 2], psi1, psi1)
    assert np.allclose(rep.solution, [1, 2])
    assert rep.residual <= 1e-12
    assert not rep.ill_conditioned


def test_hand_derived_frame_operator_case(psi1):
    # S f = (1,1) has the unique solution f = (1/3, 1/3)
    s = frame_operator(psi1)
    rep = solve(s, [1, 1], psi1, psi1)
    assert np.allclose(rep.solution, [1 / 3, 1 / 3])
    assert rep.residual <= 1e-12
    assert rep.dense_agreement <= 1e-12


def test_matches_dense_solve(rng):
    phi = gen_frame("random", seed=31, dim=4, size=9)
    psi = gen_frame("random", seed=32, dim=4, size=9)
    o = _rand_invertible(rng, 4)
    g = _randc(rng, 4)
    rep = solve(o, g, phi, psi)
    assert rep.dense_agreement <= 1e-8
    assert np.allclose(o @ rep.solution, g, atol=1e-8)


def test_dense_reference_method(rng):
    phi = gen_frame("random", seed=33, dim=3, size=5)
    o = _rand_invertible(rng, 3)
    g = _randc(rng, 3)
    rep = solve(o, g, phi, phi, method="dense_reference")
    assert rep.method == "dense_reference"
    assert np.allclose(rep.solution, np.linalg.solve(o, g))


def test_invariant_under_dual_pipeline(rng):
    phi = gen_frame("random", seed=34, dim=3, size=6)
    psi = gen_frame("random", seed=35, dim=3, size=4)
    o = _rand_invertible(rng, 3)
    g = _randc(rng, 3)
    a = solve(o, g, phi, psi).solution
    b = solve_via_duals(o, g, phi, psi).solution
    assert np.linalg.norm(a - b) <= 1e-9 * max(1.0, np.linalg.norm(b))


def test_singular_operator_rejected(psi1):
    with pytest.raises(NotBijective):
        solve(np.array([[1, 0], [0, 0]]), [1, 1], psi1, psi1)


def test_rectangular_operator_rejected(psi1):
    with pytest.raises(NotBijective):
        solve(np.ones((3, 2)), [1, 1, 1], psi1, psi1)


def test_dimension_mismatch(onb3, psi1):
    with pytest.raises(DimensionMismatch):
        solve(np.eye(3), [1, 1, 1], psi1, psi1)


def test_near_degenerate_frame_refused():
    # spans, but with conditioning far below the 1e-8 floor
    bad = Frame(np.array([[1.0, 0.0], [0.0, 1e-6]], dtype=complex))
    with pytest.raises(IllConditioned):
        solve(np.eye(2), [1, 1], bad, bad)


def test_unknown_method_rejected(psi1):
    with pytest.raises(ValueError):
        solve(np.eye(2), [1, 1], psi1, psi1, method="qr")


def test_solution_invariant_when_only_one_frame_dualized(rng, psi1):
    # the pipeline is covariant pairwise, not per frame; both full-dual and
    # primal pipelines solve the same equation
    o = _rand_invertible(rng, 2)
    g = _randc(rng, 2)
    a = solve(o, g, psi1, canonical_dual(psi1)).solution
    b = solve(o, g, canonical_dual(psi1), psi1).solution
    assert np.allclose(o @ a, g, atol=1e-9)
    assert np.allclose(o @ b, g, atol=1e-9)
