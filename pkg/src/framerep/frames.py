"""Frames in finite-dimensional complex spaces and their basic operators.

A frame is an ordered spanning family of N vectors in C^d (N >= d allowed;
redundancy is the point). With V the d x N matrix whose columns are the
frame vectors, the synthesis operator is D = V, the analysis operator is
C = V* (so (C f)_k = <f, psi_k> with the inner product linear in its first
argument), and the frame operator is S = V V*. All operations here are pure;
Frame instances are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BadGeneratorParams, DimensionMismatch, NotAFrame
from .linalg import (
    DEFAULT_TOL,
    Tolerance,
    as_complex_matrix,
    as_complex_vector,
    rank_of,
)

__all__ = [
    "Frame",
    "FrameBounds",
    "GramMatrix",
    "RieszReport",
    "make_frame",
    "frame_bounds",
    "analysis",
    "synthesis",
    "frame_operator",
    "canonical_dual",
    "gram",
    "coefficient_projector",
    "is_riesz_basis",
    "gen_frame",
    "GENERATOR_KINDS",
]


@dataclass(frozen=True, eq=False)
class Frame:
    """Spanning family of vectors, stored as the columns of a d x N matrix."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix)
        d, n = m.shape
        if n < d:
            raise NotAFrame(f"{n} vectors cannot span a {d}-dimensional space")
        if rank_of(m) < d:
            raise NotAFrame("vectors do not span the ambient space (lower frame bound is 0)")
        m = m.copy()
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        """Ambient space dimension d."""
        return self.matrix.shape[0]

    @property
    def size(self) -> int:
        """Number of frame vectors N."""
        return self.matrix.shape[1]

    @property
    def synthesis(self) -> np.ndarray:
        """Synthesis matrix D (d x N): coefficients to vectors."""
        return self.matrix

    @property
    def analysis(self) -> np.ndarray:
        """Analysis matrix C = D* (N x d): vectors to coefficients."""
        return self.matrix.conj().T

    @property
    def vectors(self) -> list[np.ndarray]:
        return [self.matrix[:, k] for k in range(self.size)]

    def __repr__(self) -> str:
        return f"Frame(dim={self.dim}, size={self.size})"


@dataclass(frozen=True)
class FrameBounds:
    """Optimal frame constants: extreme eigenvalues of the frame operator."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not (0.0 < self.lower <= self.upper):
            raise ValueError(f"bounds must satisfy 0 < A <= B, got ({self.lower}, {self.upper})")


@dataclass(frozen=True, eq=False)
class GramMatrix:
    """Cross-Gram matrix of two frames on the same space.

    Entry (j, m) is <phi_m, psi_j> where psi indexes rows (the ``left``
    frame) and phi indexes columns (the ``right`` frame); as a matrix it
    equals C_left @ D_right.
    """

    matrix: np.ndarray
    left: Frame
    right: Frame


@dataclass(frozen=True)
class RieszReport:
    """Equivalent Riesz-basis conditions, each evaluated independently.

    The three condition flags always coincide for an actual frame; the
    report keeps them separate so the equivalence itself is checkable.
    ``max_residual`` is the largest entrywise deviation of the
    frame/canonical-dual cross-Gram matrix from the identity.
    """

    is_riesz: bool
    cond_synthesis_injective: bool
    cond_analysis_surjective: bool
    cond_biorthogonal_dual: bool
    max_residual: float


def make_frame(dim: int, vectors, tol: Tolerance = DEFAULT_TOL) -> Frame:
    """Build a Frame from an ordered list of d-vectors, validating that it spans.

    Raises NotAFrame if the family has rank < dim, DimensionMismatch if any
    vector has the wrong length.
    """
    if dim < 1:
        raise DimensionMismatch(f"dimension must be positive, got {dim}")
    cols = [as_complex_vector(v, dim) for v in vectors]
    if not cols:
        raise NotAFrame("empty vector family")
    m = np.column_stack(cols)
    if rank_of(m, tol) < dim:
        raise NotAFrame("vectors do not span the ambient space (lower frame bound is 0)")
    return Frame(m)


def frame_operator(f: Frame) -> np.ndarray:
    """Frame operator S = D C = V V*, Hermitian positive definite."""
    s = f.synthesis @ f.analysis
    return (s + s.conj().T) / 2.0


def frame_bounds(f: Frame) -> FrameBounds:
    """Optimal bounds (A, B) = extreme eigenvalues of the frame operator."""
    w = np.linalg.eigvalsh(frame_operator(f))
    return FrameBounds(lower=float(w[0]), upper=float(w[-1]))


def analysis(f: Frame, x) -> np.ndarray:
    """Coefficients (<x, psi_k>)_k of a vector against the frame."""
    return f.analysis @ as_complex_vector(x, f.dim)


def synthesis(f: Frame, c) -> np.ndarray:
    """Linear combination sum_k c_k psi_k from a coefficient vector."""
    return f.synthesis @ as_complex_vector(c, f.size)


def _apply_inverse_frame_operator(f: Frame, m: np.ndarray) -> np.ndarray:
    # Hermitian eigendecomposition keeps S^{-1} positive and exposes the bounds.
    w, u = np.linalg.eigh(frame_operator(f))
    return u @ ((u.conj().T @ m) / w[:, None])


def canonical_dual(f: Frame) -> Frame:
    """Canonical dual frame (S^{-1} psi_k)_k; its bounds are (1/B, 1/A)."""
    return Frame(_apply_inverse_frame_operator(f, f.synthesis))


def gram(left: Frame, right: Frame) -> GramMatrix:
    """Cross-Gram matrix C_left @ D_right; frames must share the ambient space."""
    if left.dim != right.dim:
        raise DimensionMismatch(f"frames live in different spaces: dim {left.dim} vs {right.dim}")
    return GramMatrix(matrix=left.analysis @ right.synthesis, left=left, right=right)


def coefficient_projector(f: Frame) -> np.ndarray:
    """Orthogonal projector onto the analysis range, computed as the
    frame/canonical-dual cross-Gram matrix C D~ = V* S^{-1} V."""
    p = gram(f, canonical_dual(f)).matrix
    return (p + p.conj().T) / 2.0


def is_riesz_basis(f: Frame, tol: Tolerance = DEFAULT_TOL) -> RieszReport:
    """Evaluate the equivalent Riesz-basis conditions independently.

    Checks injectivity of synthesis (trivial kernel), surjectivity of
    analysis (full coefficient rank), and biorthogonality to the canonical
    dual (cross-Gram equals the identity entrywise). In finite dimensions
    all three hold exactly when N == d.
    """
    n = f.size
    synth_injective = rank_of(f.synthesis, tol) == n
    analysis_surjective = rank_of(f.analysis, tol) == n
    cross = gram(canonical_dual(f), f).matrix
    residual = float(np.max(np.abs(cross - np.eye(n))))
    biorthogonal = residual <= tol.eq_rel
    flags = (synth_injective, analysis_surjective, biorthogonal)
    return RieszReport(
        is_riesz=all(flags),
        cond_synthesis_injective=synth_injective,
        cond_analysis_surjective=analysis_surjective,
        cond_biorthogonal_dual=biorthogonal,
        max_residual=residual,
    )


# ---------------------------------------------------------------------------
# deterministic frame generators (test fixtures)

# random draws are rejected while lambda_min(S) < _RANDOM_COND_FLOOR * lambda_max(S)
_RANDOM_COND_FLOOR = 1e-6
_MAX_REDRAWS = 200


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def _require(params: dict, key: str, kind: str):
    if key not in params:
        raise BadGeneratorParams(f"generator '{kind}' requires parameter '{key}'")
    return params[key]


def _as_positive_int(value, name: str) -> int:
    k = int(value)
    if k < 1:
        raise BadGeneratorParams(f"{name} must be a positive integer, got {value!r}")
    return k


def _gen_onb(rng, params):
    d = _as_positive_int(_require(params, "dim", "onb"), "dim")
    return np.eye(d, dtype=np.complex128)


def _gen_random(rng, params):
    d = _as_positive_int(_require(params, "dim", "random"), "dim")
    n = _as_positive_int(_require(params, "size", "random"), "size")
    if n < d:
        raise BadGeneratorParams(f"random frame needs size >= dim, got size={n} < dim={d}")
    for _ in range(_MAX_REDRAWS):
        v = _complex_gaussian(rng, (d, n))
        w = np.linalg.eigvalsh(v @ v.conj().T)
        if w[0] > _RANDOM_COND_FLOOR * w[-1]:
            return v
    raise BadGeneratorParams("could not draw a well-conditioned random frame")


def _gen_harmonic(rng, params):
    d = _as_positive_int(_require(params, "dim", "harmonic"), "dim")
    n = _as_positive_int(_require(params, "size", "harmonic"), "size")
    if n < d:
        raise BadGeneratorParams(f"harmonic frame needs size >= dim, got size={n} < dim={d}")
    # rows of the N-point character table truncated to d coordinates,
    # unit-normalized; tight with A = B = N/d
    j = np.arange(d).reshape(-1, 1)
    k = np.arange(n).reshape(1, -1)
    return np.exp(2j * np.pi * j * k / n) / np.sqrt(d)


def _periodized_gaussian(d: int) -> np.ndarray:
    t = np.arange(d, dtype=np.float64)
    g = np.zeros(d)
    for k in range(-3, 4):
        g += np.exp(-np.pi * (t + k * d) ** 2 / d)
    return g / np.linalg.norm(g)


def _gen_gabor(rng, params):
    d = _as_positive_int(_require(params, "dim", "gabor"), "dim")
    a = _as_positive_int(params.get("a", 1), "a")
    b = _as_positive_int(params.get("b", 1), "b")
    if d % a != 0 or d % b != 0:
        raise BadGeneratorParams(f"lattice parameters must divide dim: d={d}, a={a}, b={b}")
    if (d // a) * (d // b) < d:
        raise BadGeneratorParams(
            f"lattice too sparse: (d/a)(d/b) = {(d // a) * (d // b)} < d = {d}"
        )
    window = params.get("window")
    g = as_complex_vector(window, d) if window is not None else _periodized_gaussian(d)
    t = np.arange(d)
    cols = []
    for shift in range(d // a):
        translated = np.roll(g, shift * a)
        for mod in range(d // b):
            cols.append(np.exp(2j * np.pi * mod * b * t / d) * translated)
    return np.column_stack(cols)


def _gen_mercedes(rng, params):
    r3 = np.sqrt(3.0)
    return np.array(
        [[0.0, -r3 / 2.0, r3 / 2.0], [1.0, -0.5, -0.5]], dtype=np.complex128
    )


def _gen_union_onb(rng, params):
    d = _as_positive_int(_require(params, "dim", "union_onb"), "dim")
    copies = _as_positive_int(params.get("copies", 2), "copies")
    blocks = [np.eye(d, dtype=np.complex128)]
    for _ in range(copies - 1):
        q, r = np.linalg.qr(_complex_gaussian(rng, (d, d)))
        # fix the QR phase ambiguity so the draw is a function of the seed alone
        q = q * (np.diag(r) / np.abs(np.diag(r)))
        blocks.append(q)
    return np.hstack(blocks)


def _gen_perturbed_riesz(rng, params):
    d = _as_positive_int(_require(params, "dim", "perturbed_riesz"), "dim")
    eps = float(params.get("epsilon", 0.1))
    if not (0.0 <= eps < 1.0):
        raise BadGeneratorParams(f"epsilon must lie in [0, 1), got {eps}")
    for _ in range(_MAX_REDRAWS):
        v = np.eye(d, dtype=np.complex128) + eps * _complex_gaussian(rng, (d, d))
        s = np.linalg.svd(v, compute_uv=False)
        if s[-1] > 1e-3 * s[0]:
            return v
    raise BadGeneratorParams("could not draw a well-conditioned perturbed basis")


_GENERATORS = {
    "onb": _gen_onb,
    "random": _gen_random,
    "harmonic": _gen_harmonic,
    "gabor": _gen_gabor,
    "mercedes": _gen_mercedes,
    "union_onb": _gen_union_onb,
    "perturbed_riesz": _gen_perturbed_riesz,
}

GENERATOR_KINDS = tuple(sorted(_GENERATORS))


def gen_frame(kind: str, seed: int = 0, **params) -> Frame:
    """Generate a deterministic named frame fixture.

    Supported kinds: onb(dim), random(dim, size), harmonic(dim, size),
    gabor(dim, a=1, b=1, window=None), mercedes, union_onb(dim, copies=2),
    perturbed_riesz(dim, epsilon=0.1). The same (kind, seed, params) always
    yields the same frame; random draws are rejected until well conditioned.
    """
    try:
        generator = _GENERATORS[kind]
    except KeyError:
        raise BadGeneratorParams(
            f"unknown generator kind {kind!r}; expected one of {', '.join(GENERATOR_KINDS)}"
        ) from None
    rng = np.random.default_rng(seed)
    matrix = generator(rng, dict(params))
    try:
        return Frame(matrix)
    except NotAFrame as exc:
        raise BadGeneratorParams(f"generator '{kind}' produced a non-spanning family: {exc}") from exc
