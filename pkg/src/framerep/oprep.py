"""Coefficient-domain representation of operators between framed spaces.

With frames Psi (size N_psi) on the domain and Phi (size N_phi) on the
codomain, an operator O maps to the coefficient matrix

    matrix_rep(O) = C_phi @ O @ D_psi          (N_phi x N_psi)

and a coefficient matrix M maps back to the operator

    operator_synth(M) = D_phi @ M @ C_psi.

Synthesis against the canonical duals inverts representation exactly, and
representation against the duals inverts synthesis. The remaining operations
diagnose which coefficient matrices represent operators, transfer
injectivity/surjectivity/bijectivity between the two pictures, realize the
inverse of an operator through the coefficient domain, and settle when a
product of coefficient matrices factors through a middle frame.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, FormulaMismatch, NotBijective, XiIsRiesz
from .frames import (
    Frame,
    canonical_dual,
    coefficient_projector,
    frame_operator,
    gram,
    is_riesz_basis,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_complex_matrix,
    as_complex_vector,
    frobenius_norm,
    kernel_basis,
    pinv,
    projector_onto_range,
    range_contained,
    rank_of,
    rel_frobenius_error,
)

__all__ = [
    "AmbientOperator",
    "CoefficientMatrix",
    "RepresentabilityReport",
    "JectivityReport",
    "DecompositionReport",
    "RieszEquivalenceReport",
    "matrix_rep",
    "operator_synth",
    "rank_one_expansion",
    "is_representable",
    "op_properties_from_matrix",
    "invert_from_matrix",
    "pseudo_matrix_of_inverse",
    "compose_rep",
    "decompose_check",
    "build_decomposition_counterexample",
    "multiplier",
    "riesz_equivalence_check",
]


@dataclass(frozen=True, eq=False)
class AmbientOperator:
    """Bounded operator in canonical coordinates: a d2 x d1 complex matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix).copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def domain_dim(self) -> int:
        return self.matrix.shape[1]

    @property
    def codomain_dim(self) -> int:
        return self.matrix.shape[0]

    def __repr__(self) -> str:
        return f"AmbientOperator({self.codomain_dim}x{self.domain_dim})"


@dataclass(frozen=True, eq=False)
class CoefficientMatrix:
    """Matrix acting on coefficient space, with its registered frames.

    Rows are indexed by the codomain frame (``row_frame``), columns by the
    domain frame (``col_frame``).
    """

    matrix: np.ndarray
    row_frame: Frame
    col_frame: Frame

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix)
        expected = (self.row_frame.size, self.col_frame.size)
        if m.shape != expected:
            raise DimensionMismatch(
                f"coefficient matrix shape {m.shape} does not match frame sizes {expected}"
            )
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    def __repr__(self) -> str:
        return f"CoefficientMatrix({self.matrix.shape[0]}x{self.matrix.shape[1]})"


@dataclass(frozen=True, eq=False)
class RepresentabilityReport:
    """Verdict on whether a coefficient matrix represents an operator.

    ``cond_range_kernel`` is the range/kernel inclusion test,
    ``cond_gram_sandwich`` the projector-sandwich identity; the two are
    equivalent and ``representable`` follows the quantitative sandwich test.
    ``sandwich_residual`` is the Frobenius norm of the sandwich defect.
    """

    representable: bool
    cond_range_kernel: bool
    cond_gram_sandwich: bool
    sandwich_residual: float
    witness_operator: AmbientOperator | None


@dataclass(frozen=True, eq=False)
class JectivityReport:
    """Injectivity/surjectivity/bijectivity of the operator synthesized from
    a coefficient matrix, with the ranks that decided the verdicts."""

    injective: bool
    surjective: bool
    bijective: bool
    residuals: dict[str, float]


@dataclass(frozen=True)
class DecompositionReport:
    """Whether a product of coefficient matrices factors through a middle frame.

    ``gap`` is the Frobenius norm of the difference between the directly
    synthesized product and the factored composition; ``gap_normalized``
    rescales it by the larger of the two operator norms (1.0 means the
    factored side vanished while the direct side did not). In pair mode
    ``xi_is_riesz`` reports biorthogonality of the two middle frames.
    """

    xi_is_riesz: bool
    cond_a: bool
    cond_b: bool
    equality_holds: bool
    gap: float
    gap_normalized: float
    pair_mode: bool


@dataclass(frozen=True, eq=False)
class RieszEquivalenceReport:
    """Outcome of testing whether bijectivity transfers between coefficient
    matrices and synthesized operators.

    For a pair of Riesz bases the transfer is exercised on random trials;
    for a redundant pair the dual cross-Gram witness synthesizes to the
    identity while failing to be bijective, refuting the transfer.
    """

    both_riesz: bool
    trials_run: int
    disagreements: int
    witness_identity_residual: float | None
    witness_rank: int | None
    witness_bijective: bool | None
    check_passed: bool


def _coeff_array(m) -> np.ndarray:
    if isinstance(m, CoefficientMatrix):
        return m.matrix
    return as_complex_matrix(m)


def _operator_array(o) -> np.ndarray:
    if isinstance(o, AmbientOperator):
        return o.matrix
    return as_complex_matrix(o)


def _check_coeff_shape(m: np.ndarray, row_frame: Frame, col_frame: Frame) -> None:
    expected = (row_frame.size, col_frame.size)
    if m.shape != expected:
        raise DimensionMismatch(
            f"coefficient matrix shape {m.shape} does not match frame sizes {expected}"
        )


def matrix_rep(o, row_frame: Frame, col_frame: Frame) -> CoefficientMatrix:
    """Represent an operator as a coefficient matrix: C_row @ O @ D_col.

    Entry (m, n) is <O psi_n, phi_m>. The spectral norm of the result is at
    most sqrt(B_col * B_row) times the spectral norm of the operator.
    """
    om = _operator_array(o)
    if col_frame.dim != om.shape[1] or row_frame.dim != om.shape[0]:
        raise DimensionMismatch(
            f"operator is {om.shape[0]}x{om.shape[1]} but frames have dims "
            f"(codomain {row_frame.dim}, domain {col_frame.dim})"
        )
    return CoefficientMatrix(
        matrix=row_frame.analysis @ om @ col_frame.synthesis,
        row_frame=row_frame,
        col_frame=col_frame,
    )


def operator_synth(m, row_frame: Frame, col_frame: Frame) -> AmbientOperator:
    """Synthesize the operator D_row @ M @ C_col from a coefficient matrix.

    The frames need only match the matrix in index sizes, so a matrix built
    against one frame pair may be synthesized against another (typically the
    canonical duals, which inverts representation).
    """
    mm = _coeff_array(m)
    _check_coeff_shape(mm, row_frame, col_frame)
    return AmbientOperator(row_frame.synthesis @ mm @ col_frame.analysis)


def rank_one_expansion(m, row_frame: Frame, col_frame: Frame) -> AmbientOperator:
    """Synthesize the same operator as ``operator_synth`` by explicitly
    summing M[k, j] times the rank-one operator x -> <x, psi_j> phi_k.

    Deliberately a second, elementwise code path so the two can be compared.
    """
    mm = _coeff_array(m)
    _check_coeff_shape(mm, row_frame, col_frame)
    total = np.zeros((row_frame.dim, col_frame.dim), dtype=np.complex128)
    for k in range(row_frame.size):
        phi_k = row_frame.matrix[:, k]
        for j in range(col_frame.size):
            total += mm[k, j] * np.outer(phi_k, np.conj(col_frame.matrix[:, j]))
    return AmbientOperator(total)


def is_representable(m, phi: Frame, psi: Frame, tol: Tolerance = DEFAULT_TOL) -> RepresentabilityReport:
    """Decide whether a coefficient matrix equals matrix_rep of some operator.

    Two independent criteria are evaluated: the range/kernel inclusions
    (range(M) inside the analysis range of phi, kernel of psi-synthesis
    inside kernel of M) and the projector sandwich identity
    P_phi @ M @ P_psi == M. When representable, the witness operator is the
    synthesis of M against the canonical duals, which reproduces M under
    matrix_rep.
    """
    mm = _coeff_array(m)
    _check_coeff_shape(mm, phi, psi)

    range_ok = range_contained(mm, phi.analysis, tol)
    kernel = kernel_basis(psi.synthesis, tol)
    if kernel.shape[1] == 0:
        kernel_ok = True
    else:
        kernel_ok = frobenius_norm(mm @ kernel) <= tol.eq_rel * max(1.0, frobenius_norm(mm))
    cond_range_kernel = range_ok and kernel_ok

    sandwich = coefficient_projector(phi) @ mm @ coefficient_projector(psi)
    sandwich_residual = frobenius_norm(sandwich - mm)
    cond_gram_sandwich = rel_frobenius_error(sandwich, mm) <= tol.eq_rel

    witness = None
    if cond_gram_sandwich:
        witness = operator_synth(mm, canonical_dual(phi), canonical_dual(psi))
    return RepresentabilityReport(
        representable=cond_gram_sandwich,
        cond_range_kernel=cond_range_kernel,
        cond_gram_sandwich=cond_gram_sandwich,
        sandwich_residual=sandwich_residual,
        witness_operator=witness,
    )


def op_properties_from_matrix(m, phi: Frame, psi: Frame, tol: Tolerance = DEFAULT_TOL) -> JectivityReport:
    """Decide injectivity/surjectivity/bijectivity of the synthesized operator.

    The verdicts come from the rank of the restricted coefficient map
    P_phi @ M @ C_psi (injective iff rank equals the domain dimension,
    surjective iff it equals the codomain dimension); the rank of the
    directly synthesized operator matrix is recorded alongside and always
    agrees for well-conditioned inputs.
    """
    mm = _coeff_array(m)
    _check_coeff_shape(mm, phi, psi)
    d_dom, d_cod = psi.dim, phi.dim

    restricted = projector_onto_range(phi.analysis, tol) @ mm @ psi.analysis
    rank_restricted = rank_of(restricted, tol)
    rank_direct = rank_of(phi.synthesis @ mm @ psi.analysis, tol)

    injective = rank_restricted == d_dom
    surjective = rank_restricted == d_cod
    return JectivityReport(
        injective=injective,
        surjective=surjective,
        bijective=injective and surjective,
        residuals={
            "rank_restricted": float(rank_restricted),
            "rank_direct": float(rank_direct),
            "rank_disagreement": float(abs(rank_restricted - rank_direct)),
        },
    )


def _restricted_pinv(mm: np.ndarray, phi: Frame, psi: Frame, tol: Tolerance) -> np.ndarray:
    """Pseudo-inverse of P_phi @ M @ P_psi: inverts the coefficient map
    between the two analysis ranges and vanishes on their complements."""
    return pinv(
        projector_onto_range(phi.analysis, tol) @ mm @ projector_onto_range(psi.analysis, tol),
        tol,
    )


def invert_from_matrix(m, phi: Frame, psi: Frame, tol: Tolerance = DEFAULT_TOL) -> AmbientOperator:
    """Invert the synthesized operator through the coefficient domain.

    Requires the restricted coefficient map to be bijective between the two
    analysis ranges (NotBijective otherwise). The inverse is assembled by
    three routes and cross-checked pairwise:

      f1: synthesis of the restricted pseudo-inverse against the swapped
          canonical duals,
      f2: synthesis, against the original frames, of the restricted
          pseudo-inverse sandwiched between dual cross-Gram matrices,
      f3: the dual cross operator D_psi~ @ C_phi~ applied around the
          synthesis of the restricted pseudo-inverse (only formed when the
          frames have equal size).

    f1 and f2 coincide for arbitrary frames; f3 additionally requires the
    two analysis ranges to coincide (equal frames, frame/dual pairs, or
    bases) and FormulaMismatch is raised when the routes disagree.
    """
    mm = _coeff_array(m)
    _check_coeff_shape(mm, phi, psi)
    jectivity = op_properties_from_matrix(mm, phi, psi, tol)
    if not jectivity.bijective:
        raise NotBijective(
            "restricted coefficient map is not bijective between the analysis ranges "
            f"(ranks: {jectivity.residuals})"
        )

    phi_dual = canonical_dual(phi)
    psi_dual = canonical_dual(psi)
    m_dagger = _restricted_pinv(mm, phi, psi, tol)

    candidates: dict[str, np.ndarray] = {}
    candidates["dual_synthesis"] = (psi_dual.synthesis @ m_dagger @ phi_dual.analysis)
    cross_gram = gram(phi_dual, psi_dual).matrix
    candidates["gram_sandwich"] = (
        phi.synthesis @ (cross_gram @ m_dagger @ cross_gram) @ psi.analysis
    )
    if phi.size == psi.size:
        cross_op = psi_dual.synthesis @ phi_dual.analysis
        candidates["cross_operator_sandwich"] = (
            cross_op @ (phi.synthesis @ m_dagger @ psi.analysis) @ cross_op
        )

    names = sorted(candidates)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            err = rel_frobenius_error(candidates[a], candidates[b])
            if err > tol.eq_rel:
                raise FormulaMismatch(
                    f"inversion formulas '{a}' and '{b}' disagree "
                    f"(relative Frobenius error {err:.3e})"
                )

    result = candidates["dual_synthesis"]
    synthesized = phi.synthesis @ mm @ psi.analysis
    err = rel_frobenius_error(result @ synthesized, np.eye(psi.dim))
    if err > tol.eq_rel:
        raise FormulaMismatch(
            f"inverse fails to invert the synthesized operator (residual {err:.3e})"
        )
    return AmbientOperator(result)


def _inverse_frame_operator_matrix(f: Frame) -> np.ndarray:
    w, u = np.linalg.eigh(frame_operator(f))
    return u @ (u.conj().T / w[:, None])


def pseudo_matrix_of_inverse(o, phi: Frame, psi: Frame, tol: Tolerance = DEFAULT_TOL) -> CoefficientMatrix:
    """Coefficient matrix of the inverse of a bijective operator.

    Computed three ways and cross-checked: representation of the dense
    inverse against the swapped duals; the dual cross-Gram sandwich of its
    representation against the original frames; and representation, against
    the swapped original frames, of the inverse conjugated by the inverse
    frame operators. The result is the Moore-Penrose pseudo-inverse of the
    restricted representation of the operator itself.
    """
    om = _operator_array(o)
    if phi.dim != om.shape[0] or psi.dim != om.shape[1]:
        raise DimensionMismatch(
            f"operator is {om.shape[0]}x{om.shape[1]} but frames have dims "
            f"(codomain {phi.dim}, domain {psi.dim})"
        )
    if om.shape[0] != om.shape[1] or rank_of(om, tol) < om.shape[0]:
        raise NotBijective("operator is not square with full rank")
    o_inv = np.linalg.inv(om)

    phi_dual = canonical_dual(phi)
    psi_dual = canonical_dual(psi)

    candidates: dict[str, np.ndarray] = {}
    candidates["dual_representation"] = psi_dual.analysis @ o_inv @ phi_dual.synthesis
    cross_gram = gram(psi_dual, phi_dual).matrix
    candidates["gram_sandwich"] = (
        cross_gram @ (phi.analysis @ o_inv @ psi.synthesis) @ cross_gram
    )
    s_phi_inv = _inverse_frame_operator_matrix(phi)
    s_psi_inv = _inverse_frame_operator_matrix(psi)
    candidates["frame_operator_conjugation"] = (
        psi.analysis @ (s_psi_inv @ o_inv @ s_phi_inv) @ phi.synthesis
    )

    names = sorted(candidates)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            err = rel_frobenius_error(candidates[a], candidates[b])
            if err > tol.eq_rel:
                raise FormulaMismatch(
                    f"pseudo-inverse formulas '{a}' and '{b}' disagree "
                    f"(relative Frobenius error {err:.3e})"
                )
    return CoefficientMatrix(
        matrix=candidates["dual_representation"], row_frame=psi, col_frame=phi
    )


def compose_rep(o, p, phi: Frame, xi: Frame, psi: Frame, tol: Tolerance = DEFAULT_TOL) -> CoefficientMatrix:
    """Coefficient matrix of a composition, factored through a middle frame.

    Returns matrix_rep(O, phi, xi) @ matrix_rep(P, dual(xi), psi) and checks
    it against the direct representation of O @ P; the identity holds for an
    arbitrary middle frame, so disagreement raises FormulaMismatch.
    """
    om = _operator_array(o)
    pm = _operator_array(p)
    if pm.shape[0] != om.shape[1]:
        raise DimensionMismatch(
            f"cannot compose {om.shape[0]}x{om.shape[1]} with {pm.shape[0]}x{pm.shape[1]}"
        )
    if psi.dim != pm.shape[1] or xi.dim != pm.shape[0] or phi.dim != om.shape[0]:
        raise DimensionMismatch("frame dimensions do not match the composition chain")

    left = matrix_rep(om, phi, xi).matrix
    right = matrix_rep(pm, canonical_dual(xi), psi).matrix
    product = left @ right
    direct = matrix_rep(om @ pm, phi, psi).matrix
    err = rel_frobenius_error(product, direct)
    if err > tol.eq_rel:
        raise FormulaMismatch(
            f"factored representation disagrees with the direct one (error {err:.3e})"
        )
    return CoefficientMatrix(matrix=product, row_frame=phi, col_frame=psi)


def decompose_check(
    m1,
    m2,
    phi: Frame,
    xi: Frame,
    psi: Frame,
    tol: Tolerance = DEFAULT_TOL,
    xi2: Frame | None = None,
) -> DecompositionReport:
    """Test whether synthesizing a product of coefficient matrices equals the
    composition of the individually synthesized operators.

    The direct side is D_phi @ (M1 @ M2) @ C_psi; the factored side routes
    M2's output through the middle frame, inserting C_xi @ D_xi~ (or
    C_xi @ D_xi2 when a second middle frame is supplied). Sufficient
    conditions reported: the middle frame is a Riesz basis (pair mode: the
    two middle frames are biorthogonal), M2 maps the psi-analysis range into
    the xi-analysis range (cond_a), or the middle factor acts as the
    identity on the row space of D_phi @ M1 (cond_b).
    """
    m1m = _coeff_array(m1)
    m2m = _coeff_array(m2)
    pair_mode = xi2 is not None
    middle_right = xi2 if pair_mode else canonical_dual(xi)
    if xi.dim != middle_right.dim:
        raise DimensionMismatch("middle frames live in different spaces")
    if m1m.shape != (phi.size, xi.size):
        raise DimensionMismatch(
            f"left matrix shape {m1m.shape} does not match frame sizes {(phi.size, xi.size)}"
        )
    if m2m.shape != (middle_right.size, psi.size):
        raise DimensionMismatch(
            f"right matrix shape {m2m.shape} does not match frame sizes "
            f"{(middle_right.size, psi.size)}"
        )

    middle = gram(xi, middle_right).matrix
    if middle.shape[0] != middle.shape[1]:
        raise DimensionMismatch("pair-variant middle frames must have equal size")

    direct = phi.synthesis @ (m1m @ m2m) @ psi.analysis
    factored = phi.synthesis @ (m1m @ middle @ m2m) @ psi.analysis
    gap = frobenius_norm(direct - factored)
    scale = max(frobenius_norm(direct), frobenius_norm(factored))
    gap_normalized = gap / scale if scale > 0.0 else 0.0
    equality_holds = gap <= tol.eq_rel * max(1.0, scale)

    if pair_mode:
        resolves_identity = (
            float(np.max(np.abs(middle - np.eye(middle.shape[0])))) <= tol.eq_rel
        )
    else:
        resolves_identity = is_riesz_basis(xi, tol).is_riesz

    # cond_a: M2 maps the psi-analysis range into the xi-analysis range
    reached = m2m @ psi.analysis
    if pair_mode:
        cond_a = (
            frobenius_norm(middle @ reached - reached)
            <= tol.eq_rel * max(1.0, frobenius_norm(reached))
        )
    else:
        cond_a = range_contained(reached, xi.analysis, tol)

    # cond_b: the middle factor is transparent to D_phi @ M1 from the right
    row_side = phi.synthesis @ m1m
    if pair_mode:
        cond_b = (
            frobenius_norm(row_side @ middle - row_side)
            <= tol.eq_rel * max(1.0, frobenius_norm(row_side))
        )
    else:
        cond_b = range_contained(row_side.conj().T, xi.analysis, tol)

    return DecompositionReport(
        xi_is_riesz=resolves_identity,
        cond_a=cond_a,
        cond_b=cond_b,
        equality_holds=equality_holds,
        gap=gap,
        gap_normalized=gap_normalized,
        pair_mode=pair_mode,
    )


def build_decomposition_counterexample(
    phi: Frame, xi: Frame, psi: Frame, seed: int = 0
) -> tuple[CoefficientMatrix, CoefficientMatrix]:
    """Construct coefficient matrices whose product does not factor through a
    redundant middle frame.

    Uses a unit vector u in the kernel of the middle synthesis operator
    (orthogonal to the xi-analysis range): M1 = (C_phi g0) u* and
    M2 = u (C_psi f0)* with seeded random nonzero g0, f0. The middle
    projector annihilates u, so the factored side vanishes while the direct
    side is a nonzero rank-one operator. Raises XiIsRiesz when the middle
    frame has no kernel to exploit.
    """
    if is_riesz_basis(xi).is_riesz:
        raise XiIsRiesz("middle frame is a Riesz basis; the factorization always holds")
    u = kernel_basis(xi.synthesis)[:, 0]
    rng = np.random.default_rng(seed)
    g0 = (rng.standard_normal(phi.dim) + 1j * rng.standard_normal(phi.dim)) / np.sqrt(2.0)
    f0 = (rng.standard_normal(psi.dim) + 1j * rng.standard_normal(psi.dim)) / np.sqrt(2.0)
    g0 /= np.linalg.norm(g0)
    f0 /= np.linalg.norm(f0)
    v = phi.analysis @ g0
    w = psi.analysis @ f0
    m1 = CoefficientMatrix(np.outer(v, np.conj(u)), row_frame=phi, col_frame=xi)
    m2 = CoefficientMatrix(np.outer(u, np.conj(w)), row_frame=xi, col_frame=psi)
    return m1, m2


def multiplier(symbol, phi: Frame, psi: Frame) -> AmbientOperator:
    """Operator induced by a diagonal coefficient matrix:
    D_phi @ diag(symbol) @ C_psi."""
    if phi.size != psi.size:
        raise DimensionMismatch(
            f"multiplier frames must have equal size, got {phi.size} and {psi.size}"
        )
    sym = as_complex_vector(symbol, phi.size)
    return AmbientOperator((phi.synthesis * sym) @ psi.analysis)


def riesz_equivalence_check(
    phi: Frame,
    psi: Frame,
    tol: Tolerance = DEFAULT_TOL,
    trials: int = 20,
    seed: int = 0,
) -> RieszEquivalenceReport:
    """Test whether bijectivity transfers between coefficient matrices and
    their synthesized operators.

    When both frames are Riesz bases, the transfer holds for every matrix;
    it is exercised on seeded random trials, every third of which is made
    deliberately singular. When at least one frame is redundant, the dual
    cross-Gram matrix synthesizes to the identity operator despite being
    rank-deficient, exhibiting the failure of the transfer.
    """
    if phi.dim != psi.dim:
        raise DimensionMismatch("both frames must live on the same space")
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    both_riesz = is_riesz_basis(phi, tol).is_riesz and is_riesz_basis(psi, tol).is_riesz

    if both_riesz:
        n = phi.size
        d = phi.dim
        rng = np.random.default_rng(seed)
        disagreements = 0
        for t in range(trials):
            m = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
            if t % 3 == 2 and n > 1:
                # force a rank drop via a product of thin factors
                a = m[:, : n - 1]
                b = (rng.standard_normal((n - 1, n)) + 1j * rng.standard_normal((n - 1, n)))
                m = a @ b
            matrix_bijective = rank_of(m, tol) == n
            op_bijective = rank_of(phi.synthesis @ m @ psi.analysis, tol) == d
            if matrix_bijective != op_bijective:
                disagreements += 1
        return RieszEquivalenceReport(
            both_riesz=True,
            trials_run=trials,
            disagreements=disagreements,
            witness_identity_residual=None,
            witness_rank=None,
            witness_bijective=None,
            check_passed=disagreements == 0,
        )

    witness = gram(canonical_dual(phi), canonical_dual(psi)).matrix
    synthesized = phi.synthesis @ witness @ psi.analysis
    residual = rel_frobenius_error(synthesized, np.eye(phi.dim))
    witness_rank = rank_of(witness, tol)
    witness_bijective = (
        witness.shape[0] == witness.shape[1] and witness_rank == witness.shape[0]
    )
    return RieszEquivalenceReport(
        both_riesz=False,
        trials_run=0,
        disagreements=0,
        witness_identity_residual=residual,
        witness_rank=witness_rank,
        witness_bijective=witness_bijective,
        check_passed=(residual <= tol.eq_rel) and not witness_bijective,
    )
