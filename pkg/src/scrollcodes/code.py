"""SAGS codes: evaluation generator, structural parity check, parameters.

The parity-check matrix is built from the dual scroll, not as a kernel:
for a dual section g (component j of degree <= s - 2 - e_j) the block of
fiber i is ``(1 / P_D'(x_i)) * B_i^{-T} g(x_i)`` with ``P_D = prod(z - x_i)``.
Orthogonality to the generator is the residue theorem
``sum_i h(x_i) / P_D'(x_i) = 0`` for ``deg h <= s - 2``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from scrollcodes._backend import kernels
from scrollcodes.gf import FieldSpec
from scrollcodes.linalg import Matrix, kernel_basis, same_row_space
from scrollcodes.scroll import (
    EvaluationSet,
    ScrollError,
    ScrollPoint,
    ScrollSpec,
    apply_bases,
    dual_scroll,
    evaluation_matrix,
    monomial_values,
)

BRUTE_FORCE_GUARD = 10**7


class ConstructionError(RuntimeError):
    """An internal consistency check failed while building a code."""


class GuardExceeded(RuntimeError):
    """A brute-force enumeration would exceed its size guard."""


def residue_weights(field: FieldSpec, points: Sequence[int]) -> np.ndarray:
    """``1 / P_D'(x_i)`` where ``P_D'(x_i) = prod_{l != i} (x_i - x_l)``."""
    t = field.tables
    out = np.zeros(len(points), dtype=np.int64)
    for i, x in enumerate(points):
        d = 1
        for l, y in enumerate(points):
            if l != i:
                d = int(t.mul[d, t.sub(x, y)])
        out[i] = t.inv[d]
    return out


def sags_inequality(spec: ScrollSpec, s: int) -> bool:
    """Genus-0 form ``-2r < f < rs``."""
    return -2 * spec.r < spec.f < spec.r * s


@dataclass(frozen=True, eq=False)
class SagsCode:
    scroll: ScrollSpec
    es: EvaluationSet
    G: Matrix
    R: Matrix
    weights: np.ndarray = dc_field(repr=False)

    @property
    def field(self) -> FieldSpec:
        return self.scroll.field

    @property
    def r(self) -> int:
        return self.scroll.r

    @property
    def s(self) -> int:
        return self.es.s

    @property
    def n(self) -> int:
        return self.es.s * self.scroll.r

    @property
    def k(self) -> int:
        return self.scroll.k

    @property
    def designed_guarantee(self) -> int:
        return self.es.s - 2 - self.scroll.exponents[0]

    @property
    def dual(self) -> ScrollSpec:
        return dual_scroll(self.scroll, self.es.s)

    @property
    def coordinate_weights(self) -> np.ndarray:
        """Residue weight of every coordinate (repeated r times per fiber)."""
        return np.repeat(self.weights, self.r)

    def fiber_columns(self, i: int) -> Matrix:
        return self.R.columns(range(i * self.r, (i + 1) * self.r))

    def summary(self) -> dict:
        from scrollcodes.decode import fiber_correction_radius

        return {
            "n": self.n,
            "k": self.k,
            "radius": fiber_correction_radius(self),
            "guarantee": self.designed_guarantee,
            "sags": sags_inequality(self.scroll, self.s),
        }


def _check_inputs(spec: ScrollSpec, es: EvaluationSet, require_ample: bool):
    if es.field != spec.field:
        raise ScrollError("scroll and evaluation set use different fields")
    if es.r != spec.r:
        raise ScrollError(f"fiber bases are {es.r} x {es.r}, scroll has rank {spec.r}")
    if require_ample and not spec.very_ample:
        raise ScrollError(f"exponents {spec.exponents} must all be >= 1")
    if es.s < spec.exponents[0] + 2:
        raise ScrollError(f"need s >= e_1 + 2 = {spec.exponents[0] + 2}, got s = {es.s}")


def build_parity(spec: ScrollSpec, es: EvaluationSet, *, require_ample: bool = True) -> Matrix:
    """Structural parity-check matrix, rows in the section order of the dual scroll.

    The sorted dual scroll lists the components of E in reverse, so dual
    component j' pairs with component r - 1 - j' of E.
    """
    _check_inputs(spec, es, require_ample)
    R = _parity(spec, es)
    G = evaluation_matrix(spec, es)
    if (R @ G.T).data.any():
        raise ConstructionError("parity matrix is not orthogonal to the generator")
    return R


def _parity(spec: ScrollSpec, es: EvaluationSet) -> Matrix:
    dual = dual_scroll(spec, es.s)
    vals = monomial_values(spec.field, dual.exponents, es.points)[:, :, ::-1]
    R = Matrix(spec.field, apply_bases(spec.field, np.ascontiguousarray(vals), es.dual_bases()))
    return R.scale_columns(np.repeat(residue_weights(spec.field, es.points), spec.r))


def build_code(spec: ScrollSpec, es: EvaluationSet, *, require_ample: bool = True) -> SagsCode:
    _check_inputs(spec, es, require_ample)
    G = evaluation_matrix(spec, es)
    R = _parity(spec, es)
    n, k = es.s * spec.r, spec.k
    if G.rank() != k:
        raise ConstructionError(f"generator has rank {G.rank()}, expected k = {k}")
    if R.rows != n - k or R.rank() != n - k:
        raise ConstructionError(f"parity matrix has rank {R.rank()}, expected n - k = {n - k}")
    if (R @ G.T).data.any():
        raise ConstructionError("parity matrix is not orthogonal to the generator")
    r = spec.r
    for i in range(es.s):
        if R.columns(range(i * r, (i + 1) * r)).rank() != r:
            raise ConstructionError(f"fiber {i} spans less than r dimensions of syndrome space")
    return SagsCode(spec, es, G, R, residue_weights(spec.field, es.points))


def encode(code: SagsCode, message: Sequence[int]) -> np.ndarray:
    m = np.asarray(message, dtype=np.int64)
    if m.shape != (code.k,):
        raise ValueError(f"message must have length k = {code.k}")
    return code.G.T @ m


def _generator(code) -> Matrix:
    return code.G if isinstance(code, SagsCode) else code.generator if isinstance(code, ParityCode) else code


def min_distance_bruteforce(code, guard: int = BRUTE_FORCE_GUARD) -> int:
    """Minimum weight over all nonzero codewords; ``code`` may be a code or a generator matrix."""
    G = _generator(code)
    q = G.field.q
    if q ** G.rows > guard:
        raise GuardExceeded(f"q^k = {q}^{G.rows} exceeds guard {guard}")
    t = G.field.tables
    return kernels.min_weight(np.ascontiguousarray(G.data), t.add, t.mul, t.neg)


def gaussian_binomial(k: int, i: int, q: int) -> int:
    if i < 0 or i > k:
        return 0
    num = den = 1
    for a in range(i):
        num *= q ** (k - a) - 1
        den *= q ** (a + 1) - 1
    return num // den


def _rref_subspaces(k: int, i: int, q: int):
    """Yield (pivots, free positions) patterns of i x k reduced echelon matrices."""
    for piv in itertools.combinations(range(k), i):
        free = [(a, c) for a, p in enumerate(piv) for c in range(p + 1, k) if c not in piv]
        yield piv, free


def weight_hierarchy_bruteforce(code, up_to: int | None = None, guard: int = BRUTE_FORCE_GUARD) -> list[int]:
    """Generalized Hamming weights d_1..d_up_to by enumerating subcodes.

    ``d_i`` is the smallest support of an i-dimensional subcode; every such
    subcode is the row space of ``M G`` for a unique reduced echelon M.
    """
    G = _generator(code)
    k, n, q = G.rows, G.cols, G.field.q
    up_to = k if up_to is None else up_to
    if not 1 <= up_to <= k:
        raise ValueError(f"up_to must lie in 1..{k}")
    total = sum(gaussian_binomial(k, i, q) for i in range(2, up_to + 1))
    if q**k > guard or total > guard:
        raise GuardExceeded(f"subspace enumeration of size {max(q**k, total)} exceeds guard {guard}")
    t = G.field.tables
    Gd = np.ascontiguousarray(G.data)
    out = [min_distance_bruteforce(G, guard)]
    for i in range(2, up_to + 1):
        best = n + 1
        for piv, free in _rref_subspaces(k, i, q):
            base = np.zeros((i, k), dtype=np.int64)
            base[np.arange(i), list(piv)] = 1
            nfree = len(free)
            rows_idx = np.array([a for a, _ in free], dtype=np.int64)
            cols_idx = np.array([c for _, c in free], dtype=np.int64)
            for chunk_start in range(0, q**nfree, 4096):
                idx = np.arange(chunk_start, min(q**nfree, chunk_start + 4096), dtype=np.int64)
                fills = (idx[:, None] // (q ** np.arange(nfree, dtype=np.int64))[None, :]) % q
                msgs = np.broadcast_to(base, (idx.size, i, k)).copy()
                if nfree:
                    msgs[:, rows_idx, cols_idx] = fills
                words = kernels.matmul(np.ascontiguousarray(msgs.reshape(-1, k)), Gd, t.add, t.mul)
                support = (words.reshape(idx.size, i, n) != 0).any(axis=1).sum(axis=1)
                best = min(best, int(support.min()))
        out.append(best)
    return out


@dataclass(frozen=True)
class DualCheck:
    ok: bool
    witness: np.ndarray
    dual_code: SagsCode | None
    message: str = ""


def dual_bases_for_sorted_dual(es: EvaluationSet) -> tuple[Matrix, ...]:
    """``B_i^{-T}`` with columns reversed, matching the sorted dual component order."""
    return tuple(Matrix(es.field, D.data[:, ::-1]) for D in es.dual_bases())


def dual_code_check(code: SagsCode) -> DualCheck:
    """Check that C^perp is the SAGS code of the dual scroll up to the residue diagonal."""
    dual = code.dual
    es_dual = EvaluationSet(code.field, code.es.points, dual_bases_for_sorted_dual(code.es))
    witness = code.coordinate_weights
    if not witness.all():
        return DualCheck(False, witness, None, "zero residue weight")
    try:
        dcode = build_code(dual, es_dual, require_ample=False)
    except (ScrollError, ConstructionError) as exc:
        return DualCheck(False, witness, None, f"dual code failed to build: {exc}")
    if not same_row_space(dcode.G.scale_columns(witness), code.R):
        return DualCheck(False, witness, dcode, "row spaces differ")
    if dcode.dual.exponents != code.scroll.exponents:
        return DualCheck(False, witness, dcode, "double dual has a different type")
    return DualCheck(True, witness, dcode, "")


@dataclass(frozen=True, eq=False)
class ParityCode:
    """A code given as the kernel of an evaluation parity-check matrix."""

    field: FieldSpec
    H: Matrix
    generator: Matrix

    @property
    def n(self) -> int:
        return self.H.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def codimension(self) -> int:
        return self.n - self.k


def parity_defined_code(dual_spec: ScrollSpec, points: Sequence[ScrollPoint],
                        column_scale: Sequence[int] | None = None) -> ParityCode:
    """Kernel of the matrix of dual-section values at arbitrary affine scroll points.

    Column c holds ``sum_j v_j g_j(x)`` for point ``(x, <v>)`` and every
    monomial section g of ``dual_spec``.
    """
    if not points:
        raise ValueError("need at least one point")
    field = dual_spec.field
    if any(P.fiber is None for P in points):
        raise ScrollError("parity-defined codes use affine fibers only")
    if any(len(P.direction) != dual_spec.r for P in points):
        raise ScrollError("point directions must have length r")
    xs = [P.fiber for P in points]
    vals = monomial_values(field, dual_spec.exponents, xs)  # (N, c, r)
    dirs = np.array([P.direction for P in points], dtype=np.int64)
    t = field.tables
    H = np.zeros((vals.shape[0], len(points)), dtype=np.int64)
    for j in range(dual_spec.r):
        H = t.add[H, t.mul[vals[:, :, j], dirs[None, :, j]]]
    Hm = Matrix(field, H)
    if column_scale is not None:
        Hm = Hm.scale_columns(column_scale)
    return ParityCode(field, Hm, kernel_basis(Hm))


def singleton_bound(code) -> int:
    G = _generator(code)
    return G.cols - G.rows + 1


__all__ = [
    "BRUTE_FORCE_GUARD",
    "ConstructionError",
    "DualCheck",
    "GuardExceeded",
    "ParityCode",
    "SagsCode",
    "build_code",
    "build_parity",
    "dual_code_check",
    "encode",
    "gaussian_binomial",
    "min_distance_bruteforce",
    "parity_defined_code",
    "residue_weights",
    "sags_inequality",
    "singleton_bound",
    "weight_hierarchy_bruteforce",
]
