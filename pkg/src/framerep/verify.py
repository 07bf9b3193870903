"""Executable verification suite over every identity the package implements.

``run_suite`` builds a deterministic fixture matrix (named and seeded random
frames over the configured dimensions), runs each named check across it, and
returns a structured report: one record per check with the number of
fixtures exercised, the worst residual observed, and a pass/fail verdict.
Failures are report entries, never exceptions, and the same seed always
produces a byte-identical report.
"""

from __future__ import annotations

import zlib
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import FormulaMismatch, XiIsRiesz
from .frames import (
    Frame,
    canonical_dual,
    coefficient_projector,
    frame_bounds,
    frame_operator,
    gen_frame,
    gram,
    is_riesz_basis,
)
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    frobenius_norm,
    pinv,
    projector_onto_range,
    rel_frobenius_error,
    spectral_norm,
)
from .oprep import (
    build_decomposition_counterexample,
    compose_rep,
    decompose_check,
    invert_from_matrix,
    is_representable,
    matrix_rep,
    multiplier,
    op_properties_from_matrix,
    operator_synth,
    pseudo_matrix_of_inverse,
    rank_one_expansion,
    riesz_equivalence_check,
)
from .solver import solve, solve_via_duals

__all__ = ["SuiteConfig", "CheckRecord", "SuiteReport", "run_suite"]


@dataclass(frozen=True)
class SuiteConfig:
    """Suite parameters: everything random flows from ``seed``.

    ``dims`` lists (domain, codomain, middle) space dimensions; every entry
    of ``frame_sizes`` must be at least as large as every listed dimension.
    ``corrupt_representation`` deliberately mis-pairs frames and duals inside
    the operator round-trip check, as a sensitivity control: with it set the
    round-trip check must fail.
    """

    seed: int = 7
    dims: tuple[tuple[int, int, int], ...] = ((2, 2, 2), (3, 3, 3))
    frame_sizes: tuple[int, ...] = (3, 4, 5)
    trials: int = 10
    tolerance: Tolerance = DEFAULT_TOL
    corrupt_representation: bool = False

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not self.dims or not self.frame_sizes:
            raise ValueError("dims and frame_sizes must be nonempty")
        max_dim = max(max(t) for t in self.dims)
        if any(d < 1 for t in self.dims for d in t):
            raise ValueError("all dimensions must be >= 1")
        if min(self.frame_sizes) < max_dim:
            raise ValueError(
                f"every frame size must be >= every dimension "
                f"(sizes {self.frame_sizes}, max dim {max_dim})"
            )


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one named check: worst residual over all fixtures run."""

    check_name: str
    statement: str
    fixtures_run: int
    max_residual: float
    verdict: str


@dataclass(frozen=True)
class SuiteReport:
    seed: int
    trials: int
    dims: tuple[tuple[int, int, int], ...]
    frame_sizes: tuple[int, ...]
    records: tuple[CheckRecord, ...]

    @property
    def passed(self) -> bool:
        return all(r.verdict == "pass" for r in self.records)

    def to_obj(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "dims": [list(t) for t in self.dims],
            "frame_sizes": list(self.frame_sizes),
            "all_passed": self.passed,
            "checks": [
                {
                    "check_name": r.check_name,
                    "statement": r.statement,
                    "fixtures_run": r.fixtures_run,
                    "max_residual": r.max_residual,
                    "verdict": r.verdict,
                }
                for r in self.records
            ],
        }

    def to_text_table(self) -> str:
        width = max(len(r.check_name) for r in self.records)
        lines = [f"{'check':<{width}}  fixtures  max_residual  verdict"]
        for r in self.records:
            lines.append(
                f"{r.check_name:<{width}}  {r.fixtures_run:>8d}  {r.max_residual:>12.3e}  {r.verdict}"
            )
        lines.append(
            f"{len(self.records)} checks, "
            f"{sum(1 for r in self.records if r.verdict == 'pass')} passed"
        )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# fixture construction


class _Context:
    def __init__(self, config: SuiteConfig):
        self.config = config
        self.tol = config.tolerance
        self.trials = config.trials
        self.pools: dict[int, list[Frame]] = {}
        for d in sorted({d for t in config.dims for d in t}):
            self.pools[d] = self._build_pool(d, config.frame_sizes, config.seed)

    def _build_pool(self, d: int, sizes, seed: int) -> list[Frame]:
        frames = [gen_frame("onb", dim=d)]
        if d == 2:
            frames.append(gen_frame("mercedes"))
        frames.append(gen_frame("perturbed_riesz", seed=seed + d, dim=d))
        frames.append(gen_frame("union_onb", seed=seed + 7 * d, dim=d, copies=2))
        a = max(k for k in range(1, d + 1) if d % k == 0 and k * k <= d)
        frames.append(gen_frame("gabor", dim=d, a=a, b=1))
        for i, n in enumerate(sizes):
            if n >= d:
                frames.append(gen_frame("harmonic", dim=d, size=n))
                frames.append(gen_frame("random", seed=seed + 13 * d + i, dim=d, size=n))
        return frames

    def rng(self, label: str) -> np.random.Generator:
        # stable per-check stream: independent of check execution order
        key = zlib.crc32(label.encode("utf-8"))
        return np.random.default_rng(
            np.random.SeedSequence(entropy=self.config.seed, spawn_key=(key,))
        )

    def frame_pairs(self, d_dom: int, d_cod: int, limit: int = 24):
        pairs = list(product(self.pools[d_cod], self.pools[d_dom]))
        stride = max(1, len(pairs) // limit)
        return pairs[::stride][:limit]

    def riesz_frames(self, d: int) -> list[Frame]:
        return [f for f in self.pools[d] if f.size == f.dim]

    def redundant_frames(self, d: int) -> list[Frame]:
        return [f for f in self.pools[d] if f.size > f.dim]


def _rand_op(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)


def _rand_invertible(rng: np.random.Generator, d: int) -> np.ndarray:
    while True:
        m = _rand_op(rng, d, d)
        s = np.linalg.svd(m, compute_uv=False)
        if s[-1] > 1e-3 * s[0]:
            return m


def _rand_unit(rng: np.random.Generator, d: int) -> np.ndarray:
    v = _rand_op(rng, d, 1).reshape(-1)
    return v / np.linalg.norm(v)


# ---------------------------------------------------------------------------
# checks: each returns (fixtures_run, max_residual, passed)

_CHECKS: list[tuple[str, str, object]] = []


def _check(name: str, statement: str):
    def register(fn):
        _CHECKS.append((name, statement, fn))
        return fn

    return register


@_check(
    "frame_inequality",
    "A||f||^2 <= sum_k |<f, psi_k>|^2 <= B||f||^2 with (A, B) the extreme "
    "eigenvalues of the frame operator; the extremes are attained by its eigenvectors",
)
def _chk_frame_inequality(ctx: _Context):
    rng = ctx.rng("frame_inequality")
    worst, count, ok = 0.0, 0, True
    for d, pool in ctx.pools.items():
        for f in pool:
            b = frame_bounds(f)
            s = frame_operator(f)
            w, u = np.linalg.eigh(s)
            for _ in range(ctx.trials):
                x = _rand_unit(rng, d)
                q = float(np.sum(np.abs(f.analysis @ x) ** 2))
                violation = max(0.0, (b.lower - q) / max(1.0, b.lower), (q - b.upper) / max(1.0, b.upper))
                worst = max(worst, violation)
            q_min = float(np.sum(np.abs(f.analysis @ u[:, 0]) ** 2))
            q_max = float(np.sum(np.abs(f.analysis @ u[:, -1]) ** 2))
            worst = max(
                worst,
                abs(q_min - b.lower) / max(1.0, b.lower),
                abs(q_max - b.upper) / max(1.0, b.upper),
            )
            count += 1
    ok = worst <= 1e-9
    return count, worst, ok


@_check(
    "dual_frame_bounds",
    "the canonical dual frame has bounds (1/B, 1/A)",
)
def _chk_dual_bounds(ctx: _Context):
    worst, count = 0.0, 0
    for pool in ctx.pools.values():
        for f in pool:
            b = frame_bounds(f)
            bd = frame_bounds(canonical_dual(f))
            worst = max(
                worst,
                abs(bd.lower - 1.0 / b.upper) / max(1.0, 1.0 / b.upper),
                abs(bd.upper - 1.0 / b.lower) / max(1.0, 1.0 / b.lower),
            )
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "reconstruction_expansions",
    "f = sum_k <f, dual_k> psi_k and f = sum_k <f, psi_k> dual_k for every vector",
)
def _chk_reconstruction(ctx: _Context):
    rng = ctx.rng("reconstruction_expansions")
    worst, count = 0.0, 0
    for d, pool in ctx.pools.items():
        for f in pool:
            dual = canonical_dual(f)
            for _ in range(ctx.trials):
                x = _rand_unit(rng, d)
                r1 = f.synthesis @ (dual.analysis @ x)
                r2 = dual.synthesis @ (f.analysis @ x)
                worst = max(
                    worst,
                    float(np.linalg.norm(r1 - x)),
                    float(np.linalg.norm(r2 - x)),
                )
                count += 1
    return count, worst, worst <= 1e-9


@_check(
    "analysis_synthesis_adjointness",
    "analysis and synthesis matrices are conjugate transposes with operator "
    "norm at most sqrt(B)",
)
def _chk_adjointness(ctx: _Context):
    worst, count = 0.0, 0
    for pool in ctx.pools.values():
        for f in pool:
            b = frame_bounds(f)
            worst = max(worst, rel_frobenius_error(f.analysis.conj().T, f.synthesis))
            norm_d = spectral_norm(f.synthesis)
            norm_c = spectral_norm(f.analysis)
            worst = max(worst, abs(norm_d - norm_c) / max(1.0, norm_c))
            overshoot = max(0.0, norm_d - np.sqrt(b.upper) * (1.0 + 1e-12))
            worst = max(worst, overshoot)
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "dual_involution",
    "the canonical dual of the canonical dual is the original frame, entrywise",
)
def _chk_involution(ctx: _Context):
    worst, count = 0.0, 0
    for pool in ctx.pools.values():
        for f in pool:
            back = canonical_dual(canonical_dual(f))
            worst = max(worst, float(np.max(np.abs(back.matrix - f.matrix))))
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "gram_projection",
    "the frame/dual cross-Gram matrix is the orthogonal projector onto the "
    "analysis range, equal to its swapped adjoint and shared with the dual frame",
)
def _chk_gram_projection(ctx: _Context):
    worst, count = 0.0, 0
    for pool in ctx.pools.values():
        for f in pool:
            dual = canonical_dual(f)
            g1 = gram(f, dual).matrix
            g2 = gram(dual, f).matrix
            proj = projector_onto_range(f.analysis, ctx.tol)
            worst = max(
                worst,
                rel_frobenius_error(g1, g2.conj().T),
                rel_frobenius_error(g1, proj),
                rel_frobenius_error(coefficient_projector(dual), coefficient_projector(f)),
            )
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "riesz_report_consistency",
    "the equivalent Riesz-basis conditions always agree, and hold exactly "
    "when the frame has as many vectors as dimensions",
)
def _chk_riesz_consistency(ctx: _Context):
    worst, count = 0.0, 0
    for pool in ctx.pools.values():
        for f in pool:
            rep = is_riesz_basis(f, ctx.tol)
            flags = {
                rep.cond_synthesis_injective,
                rep.cond_analysis_surjective,
                rep.cond_biorthogonal_dual,
            }
            consistent = len(flags) == 1 and rep.is_riesz == (f.size == f.dim)
            worst = max(worst, 0.0 if consistent else 1.0)
            count += 1
    return count, worst, worst == 0.0


@_check(
    "operator_roundtrip",
    "synthesizing the dual-frame representation of an operator against the "
    "original frames returns the operator, and vice versa",
)
def _chk_roundtrip(ctx: _Context):
    rng = ctx.rng("operator_roundtrip")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=12):
            o = _rand_op(rng, d_cod, d_dom)
            if ctx.config.corrupt_representation:
                rep_frames = (phi, psi)  # deliberately wrong pairing
            else:
                rep_frames = (canonical_dual(phi), canonical_dual(psi))
            m = matrix_rep(o, *rep_frames)
            back = operator_synth(m, phi, psi).matrix
            worst = max(worst, rel_frobenius_error(back, o))
            m2 = matrix_rep(o, phi, psi)
            back2 = operator_synth(m2, canonical_dual(phi), canonical_dual(psi)).matrix
            worst = max(worst, rel_frobenius_error(back2, o))
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "representation_injectivity",
    "distinct operators have distinct coefficient matrices; the operator norm "
    "is controlled by the matrix norm through the dual bounds",
)
def _chk_rep_injectivity(ctx: _Context):
    rng = ctx.rng("representation_injectivity")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=8):
            b_phi = frame_bounds(phi)
            b_psi = frame_bounds(psi)
            o1 = _rand_op(rng, d_cod, d_dom)
            o2 = _rand_op(rng, d_cod, d_dom)
            m1 = matrix_rep(o1, phi, psi).matrix
            m2 = matrix_rep(o2, phi, psi).matrix
            if frobenius_norm(m1 - m2) == 0.0:
                worst = max(worst, 1.0)
            lower_factor = np.sqrt(b_phi.lower * b_psi.lower)
            overshoot = max(
                0.0, spectral_norm(o1) - spectral_norm(m1) / lower_factor * (1.0 + 1e-12)
            )
            worst = max(worst, overshoot)
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "synthesis_surjectivity",
    "every operator is the synthesis of some coefficient matrix, witnessed by "
    "its dual-frame representation",
)
def _chk_synth_surjectivity(ctx: _Context):
    rng = ctx.rng("synthesis_surjectivity")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=8):
            o = _rand_op(rng, d_cod, d_dom)
            witness = matrix_rep(o, canonical_dual(phi), canonical_dual(psi))
            worst = max(
                worst, rel_frobenius_error(operator_synth(witness, phi, psi).matrix, o)
            )
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "representation_norm_bounds",
    "representation and synthesis are bounded by sqrt(B * B') in operator norm",
)
def _chk_norm_bounds(ctx: _Context):
    rng = ctx.rng("representation_norm_bounds")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=12):
            factor = np.sqrt(frame_bounds(phi).upper * frame_bounds(psi).upper)
            o = _rand_op(rng, d_cod, d_dom)
            m = matrix_rep(o, phi, psi).matrix
            worst = max(
                worst, max(0.0, spectral_norm(m) - factor * spectral_norm(o) * (1.0 + 1e-12))
            )
            raw = _rand_op(rng, phi.size, psi.size)
            synth = operator_synth(raw, phi, psi).matrix
            worst = max(
                worst,
                max(0.0, spectral_norm(synth) - factor * spectral_norm(raw) * (1.0 + 1e-12)),
            )
            count += 1
    return count, worst, worst == 0.0


@_check(
    "rank_one_expansion_agreement",
    "summing M[k, j] times the rank-one operators x -> <x, psi_j> phi_k equals "
    "the matrix-product synthesis",
)
def _chk_rank_one(ctx: _Context):
    rng = ctx.rng("rank_one_expansion_agreement")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=6):
            raw = _rand_op(rng, phi.size, psi.size)
            a = rank_one_expansion(raw, phi, psi).matrix
            b = operator_synth(raw, phi, psi).matrix
            worst = max(worst, rel_frobenius_error(a, b))
            count += 1
    return count, worst, worst <= 1e-10


@_check(
    "representability_equivalence",
    "range/kernel inclusion and the projector-sandwich identity agree on "
    "representable matrices, whose witness operator reproduces them",
)
def _chk_representability(ctx: _Context):
    rng = ctx.rng("representability_equivalence")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=8):
            o = _rand_op(rng, d_cod, d_dom)
            m = matrix_rep(o, phi, psi)
            rep = is_representable(m, phi, psi, ctx.tol)
            if not (rep.representable and rep.cond_range_kernel and rep.cond_gram_sandwich):
                worst = max(worst, 1.0)
            else:
                again = matrix_rep(rep.witness_operator, phi, psi).matrix
                worst = max(worst, rel_frobenius_error(again, m.matrix))
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "nonrepresentable_perturbation",
    "adding a component outside the codomain analysis range makes a matrix "
    "non-representable, with the reported residual equal to the sandwich defect",
)
def _chk_nonrepresentable(ctx: _Context):
    rng = ctx.rng("nonrepresentable_perturbation")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=8):
            if phi.size == phi.dim:
                continue  # a basis has full analysis range: nothing lies outside
            o = _rand_op(rng, d_cod, d_dom)
            m = matrix_rep(o, phi, psi).matrix
            proj = coefficient_projector(phi)
            off_range = (np.eye(phi.size) - proj) @ _rand_op(rng, phi.size, psi.size)
            if frobenius_norm(off_range) == 0.0:
                continue
            bad = m + off_range
            rep = is_representable(bad, phi, psi, ctx.tol)
            if rep.representable or rep.cond_range_kernel or rep.cond_gram_sandwich:
                worst = max(worst, 1.0)
            expected = frobenius_norm(
                coefficient_projector(phi) @ bad @ coefficient_projector(psi) - bad
            )
            worst = max(
                worst, abs(rep.sandwich_residual - expected) / max(1.0, expected)
            )
            count += 1
    return count, worst, worst <= 1e-12


@_check(
    "jectivity_agreement",
    "injectivity and surjectivity verdicts from the restricted coefficient map "
    "agree with direct rank tests on the synthesized operator",
)
def _chk_jectivity(ctx: _Context):
    rng = ctx.rng("jectivity_agreement")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=8):
            for t in range(3):
                if t == 0:
                    raw = np.zeros((phi.size, psi.size), dtype=np.complex128)
                elif t == 1:
                    raw = matrix_rep(_rand_op(rng, d_cod, d_dom), phi, psi).matrix
                else:
                    raw = _rand_op(rng, phi.size, psi.size)
                rep = op_properties_from_matrix(raw, phi, psi, ctx.tol)
                direct_rank = int(rep.residuals["rank_direct"])
                agree = (
                    rep.residuals["rank_disagreement"] == 0.0
                    and rep.injective == (direct_rank == psi.dim)
                    and rep.surjective == (direct_rank == phi.dim)
                    and rep.bijective == (rep.injective and rep.surjective)
                )
                if t == 0 and (rep.injective or rep.surjective or rep.bijective):
                    agree = False
                worst = max(worst, 0.0 if agree else 1.0)
                count += 1
    return count, worst, worst == 0.0


@_check(
    "inverse_formula_coherence",
    "the coefficient-domain inversion routes agree pairwise and invert the "
    "synthesized operator, on frame pairs whose analysis ranges coincide",
)
def _chk_inverse_coherence(ctx: _Context):
    rng = ctx.rng("inverse_formula_coherence")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        if d_dom != d_cod:
            continue
        d = d_dom
        pairs = [(f, f) for f in ctx.pools[d]]
        pairs += [(f, canonical_dual(f)) for f in ctx.redundant_frames(d)]
        riesz = ctx.riesz_frames(d)
        pairs += list(product(riesz, riesz))[:4]
        for phi, psi in pairs:
            o = _rand_invertible(rng, d)
            m = matrix_rep(o, canonical_dual(phi), canonical_dual(psi))
            try:
                inv = invert_from_matrix(m, phi, psi, ctx.tol)
            except FormulaMismatch:
                worst = max(worst, 1.0)
                count += 1
                continue
            synthesized = operator_synth(m, phi, psi).matrix
            worst = max(
                worst,
                rel_frobenius_error(inv.matrix @ synthesized, np.eye(d)),
                rel_frobenius_error(inv.matrix, np.linalg.inv(synthesized)),
            )
            count += 1
    return count, worst, worst <= 1e-8


@_check(
    "pseudoinverse_formula_coherence",
    "the three coefficient matrices of a dense inverse agree pairwise and "
    "equal the pseudo-inverse of the operator's restricted representation",
)
def _chk_pseudoinverse_coherence(ctx: _Context):
    rng = ctx.rng("pseudoinverse_formula_coherence")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        if d_dom != d_cod:
            continue
        d = d_dom
        for phi, psi in ctx.frame_pairs(d, d, limit=10):
            o = _rand_invertible(rng, d)
            try:
                m_dagger = pseudo_matrix_of_inverse(o, phi, psi, ctx.tol)
            except FormulaMismatch:
                worst = max(worst, 1.0)
                count += 1
                continue
            m = matrix_rep(o, phi, psi).matrix
            oracle = pinv(
                projector_onto_range(phi.analysis, ctx.tol)
                @ m
                @ projector_onto_range(psi.analysis, ctx.tol),
                ctx.tol,
            )
            worst = max(worst, rel_frobenius_error(m_dagger.matrix, oracle))
            count += 1
    return count, worst, worst <= 1e-8


@_check(
    "identity_representation",
    "synthesizing the identity coefficient matrix against a frame and its "
    "canonical dual yields the identity operator",
)
def _chk_identity_representation(ctx: _Context):
    worst, count = 0.0, 0
    for pool in ctx.pools.values():
        for f in pool:
            dual = canonical_dual(f)
            eye_n = np.eye(f.size, dtype=np.complex128)
            a = operator_synth(eye_n, f, dual).matrix
            b = operator_synth(eye_n, dual, f).matrix
            eye_d = np.eye(f.dim)
            worst = max(
                worst, rel_frobenius_error(a, eye_d), rel_frobenius_error(b, eye_d)
            )
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "composition_rule",
    "the representation of a composition factors through any middle frame as "
    "a product of representations (dual on the middle analysis side)",
)
def _chk_composition(ctx: _Context):
    rng = ctx.rng("composition_rule")
    worst, count = 0.0, 0
    for d_dom, d_cod, d_mid in ctx.config.dims:
        for phi, psi in ctx.frame_pairs(d_dom, d_cod, limit=4):
            for xi in ctx.pools[d_mid][:4]:
                o = _rand_op(rng, d_cod, d_mid)
                p = _rand_op(rng, d_mid, d_dom)
                try:
                    factored = compose_rep(o, p, phi, xi, psi, ctx.tol)
                except FormulaMismatch:
                    worst = max(worst, 1.0)
                    count += 1
                    continue
                direct = matrix_rep(o @ p, phi, psi).matrix
                worst = max(worst, rel_frobenius_error(factored.matrix, direct))
                count += 1
    return count, worst, worst <= 1e-9


@_check(
    "bijectivity_transfer_riesz",
    "for a pair of Riesz bases, a coefficient matrix is bijective exactly when "
    "its synthesized operator is",
)
def _chk_transfer_riesz(ctx: _Context):
    rng = ctx.rng("bijectivity_transfer_riesz")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        if d_dom != d_cod:
            continue
        riesz = ctx.riesz_frames(d_dom)
        for phi, psi in list(product(riesz, riesz))[:6]:
            seed = int(rng.integers(0, 2**31))
            rep = riesz_equivalence_check(phi, psi, ctx.tol, trials=ctx.trials, seed=seed)
            worst = max(worst, 0.0 if rep.check_passed else 1.0)
            count += 1
    return count, worst, worst == 0.0


@_check(
    "bijectivity_transfer_redundant",
    "for a redundant pair, the dual cross-Gram matrix synthesizes to the "
    "identity operator while being rank-deficient, refuting the transfer",
)
def _chk_transfer_redundant(ctx: _Context):
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        if d_dom != d_cod:
            continue
        d = d_dom
        redundant = ctx.redundant_frames(d)
        pairs = [(r, r) for r in redundant] + [
            (r, ctx.pools[d][0]) for r in redundant[:3]
        ]
        for phi, psi in pairs:
            rep = riesz_equivalence_check(phi, psi, ctx.tol, trials=1, seed=0)
            if rep.both_riesz or rep.witness_bijective or rep.witness_rank != d:
                worst = max(worst, 1.0)
            else:
                worst = max(worst, rep.witness_identity_residual)
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "decomposition_riesz_middle",
    "with a Riesz middle frame, synthesizing a product of coefficient matrices "
    "equals the composition of the individually synthesized operators",
)
def _chk_decomposition_riesz(ctx: _Context):
    rng = ctx.rng("decomposition_riesz_middle")
    worst, count = 0.0, 0
    for d_dom, d_cod, d_mid in ctx.config.dims:
        phi = ctx.pools[d_cod][0]
        psi = ctx.pools[d_dom][0]
        for xi in ctx.riesz_frames(d_mid):
            for _ in range(ctx.trials):
                m1 = _rand_op(rng, phi.size, xi.size)
                m2 = _rand_op(rng, xi.size, psi.size)
                rep = decompose_check(m1, m2, phi, xi, psi, ctx.tol)
                if not (rep.xi_is_riesz and rep.equality_holds):
                    worst = max(worst, 1.0)
                worst = max(worst, rep.gap_normalized)
                count += 1
    return count, worst, worst <= 1e-10


@_check(
    "decomposition_counterexample",
    "for every redundant middle frame there are coefficient matrices whose "
    "product does not factor through it",
)
def _chk_decomposition_counterexample(ctx: _Context):
    rng = ctx.rng("decomposition_counterexample")
    worst, count, ok = 0.0, 0, True
    for d_dom, d_cod, d_mid in ctx.config.dims:
        phi = ctx.pools[d_cod][0]
        psi = ctx.pools[d_dom][0]
        for xi in ctx.redundant_frames(d_mid):
            seed = int(rng.integers(0, 2**31))
            m1, m2 = build_decomposition_counterexample(phi, xi, psi, seed=seed)
            rep = decompose_check(m1, m2, phi, xi, psi, ctx.tol)
            if rep.equality_holds or rep.gap_normalized < 1e-3 or rep.xi_is_riesz:
                ok = False
            worst = max(worst, 1.0 - rep.gap_normalized)
            count += 1
        for xi in ctx.riesz_frames(d_mid)[:1]:
            try:
                build_decomposition_counterexample(phi, xi, psi, seed=0)
                ok = False
            except XiIsRiesz:
                pass
            count += 1
    return count, worst, ok


@_check(
    "decomposition_range_condition",
    "when the right matrix maps the domain analysis range into the middle "
    "analysis range, the factorization holds even for a redundant middle frame",
)
def _chk_decomposition_range(ctx: _Context):
    rng = ctx.rng("decomposition_range_condition")
    worst, count, ok = 0.0, 0, True
    for d_dom, d_cod, d_mid in ctx.config.dims:
        phi = ctx.pools[d_cod][0]
        psi = ctx.pools[d_dom][0]
        for xi in ctx.redundant_frames(d_mid)[:4]:
            proj = coefficient_projector(xi)
            m1 = _rand_op(rng, phi.size, xi.size)
            m2 = proj @ _rand_op(rng, xi.size, psi.size)
            rep = decompose_check(m1, m2, phi, xi, psi, ctx.tol)
            if not (rep.cond_a and rep.equality_holds):
                ok = False
            worst = max(worst, rep.gap_normalized)
            count += 1
    return count, worst, ok and worst <= 1e-10


@_check(
    "decomposition_kernel_condition",
    "when the middle factor is transparent to the left synthesized matrix from "
    "the right, the factorization holds even for a redundant middle frame",
)
def _chk_decomposition_kernel(ctx: _Context):
    rng = ctx.rng("decomposition_kernel_condition")
    worst, count, ok = 0.0, 0, True
    for d_dom, d_cod, d_mid in ctx.config.dims:
        phi = ctx.pools[d_cod][0]
        psi = ctx.pools[d_dom][0]
        for xi in ctx.redundant_frames(d_mid)[:4]:
            proj = coefficient_projector(xi)
            m1 = _rand_op(rng, phi.size, xi.size) @ proj
            m2 = _rand_op(rng, xi.size, psi.size)
            rep = decompose_check(m1, m2, phi, xi, psi, ctx.tol)
            if not (rep.cond_b and rep.equality_holds):
                ok = False
            worst = max(worst, rep.gap_normalized)
            count += 1
    return count, worst, ok and worst <= 1e-10


@_check(
    "decomposition_pair_variant",
    "with two middle frames, the factorization holds when their cross-Gram "
    "matrix acts as the identity on the relevant subspace",
)
def _chk_decomposition_pair(ctx: _Context):
    rng = ctx.rng("decomposition_pair_variant")
    worst, count, ok = 0.0, 0, True
    for d_dom, d_cod, d_mid in ctx.config.dims:
        phi = ctx.pools[d_cod][0]
        psi = ctx.pools[d_dom][0]
        for xi in ctx.pools[d_mid][:4]:
            xi2 = canonical_dual(xi)
            proj = coefficient_projector(xi)
            m1 = _rand_op(rng, phi.size, xi.size)
            m2 = proj @ _rand_op(rng, xi2.size, psi.size)
            paired = decompose_check(m1, m2, phi, xi, psi, ctx.tol, xi2=xi2)
            single = decompose_check(m1, m2, phi, xi, psi, ctx.tol)
            if not (paired.pair_mode and paired.cond_a and paired.equality_holds):
                ok = False
            if paired.xi_is_riesz != single.xi_is_riesz:
                ok = False
            worst = max(worst, paired.gap_normalized, abs(paired.gap - single.gap))
            count += 1
    return count, worst, ok and worst <= 1e-10


@_check(
    "multiplier_diagonal_representation",
    "the operator induced by a diagonal symbol equals the synthesis of the "
    "diagonal matrix; the all-ones symbol yields the frame operator on a "
    "frame with itself and the identity on a dual pair",
)
def _chk_multiplier(ctx: _Context):
    rng = ctx.rng("multiplier_diagonal_representation")
    worst, count = 0.0, 0
    for pool in ctx.pools.values():
        for f in pool:
            dual = canonical_dual(f)
            sym = _rand_op(rng, f.size, 1).reshape(-1)
            a = multiplier(sym, f, f).matrix
            b = operator_synth(np.diag(sym), f, f).matrix
            ones = np.ones(f.size)
            worst = max(
                worst,
                rel_frobenius_error(a, b),
                rel_frobenius_error(multiplier(ones, f, f).matrix, frame_operator(f)),
                rel_frobenius_error(multiplier(ones, dual, f).matrix, np.eye(f.dim)),
            )
            count += 1
    return count, worst, worst <= 1e-9


@_check(
    "galerkin_vs_dense",
    "the coefficient-domain solve of an operator equation matches the dense "
    "reference solve",
)
def _chk_galerkin(ctx: _Context):
    rng = ctx.rng("galerkin_vs_dense")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        if d_dom != d_cod:
            continue
        d = d_dom
        for phi, psi in ctx.frame_pairs(d, d, limit=8):
            o = _rand_invertible(rng, d)
            g = _rand_unit(rng, d)
            rep = solve(o, g, phi, psi, ctx.tol)
            worst = max(worst, rep.dense_agreement, rep.residual)
            count += 1
    return count, worst, worst <= 1e-8


@_check(
    "galerkin_dual_pipeline_invariance",
    "replacing the frame pair by its canonical duals leaves the solve "
    "solution unchanged",
)
def _chk_galerkin_duals(ctx: _Context):
    rng = ctx.rng("galerkin_dual_pipeline_invariance")
    worst, count = 0.0, 0
    for d_dom, d_cod, _ in ctx.config.dims:
        if d_dom != d_cod:
            continue
        d = d_dom
        for phi, psi in ctx.frame_pairs(d, d, limit=6):
            o = _rand_invertible(rng, d)
            g = _rand_unit(rng, d)
            a = solve(o, g, phi, psi, ctx.tol).solution
            b = solve_via_duals(o, g, phi, psi, ctx.tol).solution
            worst = max(
                worst, float(np.linalg.norm(a - b) / max(1.0, np.linalg.norm(b)))
            )
            count += 1
    return count, worst, worst <= 1e-9


def run_suite(config: SuiteConfig = SuiteConfig()) -> SuiteReport:
    """Run every registered check over the configured fixture matrix.

    Deterministic given the seed; check records are assembled in check-name
    order. Failures become "fail" verdicts in the report, not exceptions.
    """
    ctx = _Context(config)
    records = []
    for name, statement, fn in sorted(_CHECKS, key=lambda item: item[0]):
        try:
            fixtures_run, max_residual, passed = fn(ctx)
        except Exception:
            fixtures_run, max_residual, passed = 0, float("inf"), False
        records.append(
            CheckRecord(
                check_name=name,
                statement=statement,
                fixtures_run=fixtures_run,
                max_residual=float(max_residual),
                verdict="pass" if passed else "fail",
            )
        )
    return SuiteReport(
        seed=config.seed,
        trials=config.trials,
        dims=tuple(tuple(t) for t in config.dims),
        frame_sizes=tuple(config.frame_sizes),
        records=tuple(records),
    )
