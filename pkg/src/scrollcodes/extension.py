"""Syndromes as extensions ``0 -> H^* -> W -> O -> 0`` on P^1, H^* = sum O(e_j - s).

An error vector gives an H^*-valued principal part with simple poles on D.
Its class acts on twists by the coboundary ``H^0(O(m)) -> H^1(H^*(m))``;
the ranks of these maps give ``h^0(W(m))`` for every m, and the jumps of
that function give the splitting type of W.

In the affine chart a vector e at x_i becomes the Laurent tail
``e / (P_D'(x_i) (z - x_i))`` (H^* sits in E through multiplication by P_D),
so the Serre pairing with a dual monomial z^t in component j is
``sum_i c_{i,j} x_i^t / P_D'(x_i)``, which is the syndrome coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from scrollcodes._backend import kernels
from scrollcodes.code import ConstructionError, SagsCode
from scrollcodes.linalg import Matrix


@dataclass(frozen=True, eq=False)
class PrincipalPart:
    """Coefficients ``c[i]`` of sum_j c_{i,j} e_j/(z - x_i) in the standard frame of E.

    ``weights[i] = 1 / P_D'(x_i)`` converts to the local frame of H^*.
    """

    points: tuple[int, ...]
    coeffs: np.ndarray  # (s, r)
    weights: np.ndarray  # (s,)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(int(i) for i in np.flatnonzero(self.coeffs.any(axis=1)))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs.any()


@dataclass(frozen=True)
class SplittingType:
    degrees: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.degrees) + ")"


@dataclass(frozen=True)
class S1Report:
    weight: int
    fibers: int
    splitting: SplittingType
    s1: int
    bound: int
    satisfied: bool
    # bound (r-1)(f - rs)/(2r) from the choice a = mu(H)/2; None when a > floor(mu(H)/2)
    corollary_bound: float | None
    corollary_strict: bool | None

    def line(self) -> str:
        return (f"weight={self.weight} fibers={self.fibers} type={self.splitting} "
                f"s1={self.s1} bound={self.bound} satisfied={'yes' if self.satisfied else 'no'}")


def syndrome_to_principal_part(code: SagsCode, error: Sequence[int]) -> PrincipalPart:
    """Push each fiber block of ``error`` through ``B_i^{-1}``: c_i = sum_j e_{i,j} lambda_{i,j}."""
    e = np.asarray(error, dtype=np.int64)
    if e.shape != (code.n,):
        raise ValueError(f"error must have length n = {code.n}")
    r = code.r
    coeffs = np.zeros((code.s, r), dtype=np.int64)
    for i, Binv in enumerate(code.es.vector_bases()):
        coeffs[i] = Binv @ e[i * r:(i + 1) * r]
    return PrincipalPart(code.es.points, coeffs, code.weights.copy())


def _moments(code: SagsCode, pp: PrincipalPart) -> np.ndarray:
    """``M[d, j] = sum_i w_i c_{i,j} x_i^d`` for 0 <= d <= s - 2 - e_r."""
    field = code.field
    t = field.tables
    top = max(code.s - 2 - code.scroll.exponents[-1], 0)
    x = np.asarray(pp.points, dtype=np.int64)
    pw = np.ones((top + 1, code.s), dtype=np.int64)
    for d in range(1, top + 1):
        pw[d] = t.mul[pw[d - 1], x]
    wc = t.mul[pp.coeffs, pp.weights[:, None]]
    return kernels.matmul(pw, np.ascontiguousarray(wc), t.add, t.mul)


def coboundary_matrix(code: SagsCode, pp: PrincipalPart, m: int, moments: np.ndarray | None = None) -> Matrix:
    """Pairing matrix of ``f -> [f pp]`` on H^0(O(m)).

    Rows are (component j, 0 <= t <= s - e_j - m - 2), columns 0 <= u <= m;
    entry ``sum_i w_i c_{i,j} x_i^(t+u)``.
    """
    if m < 0:
        raise ValueError("twist m must be >= 0")
    mom = _moments(code, pp) if moments is None else moments
    blocks = []
    u = np.arange(m + 1)
    for j, e in enumerate(code.scroll.exponents):
        nt = code.s - e - m - 1
        if nt > 0:
            blocks.append(mom[np.arange(nt)[:, None] + u[None, :], j])
    data = np.vstack(blocks) if blocks else np.zeros((0, m + 1), dtype=np.int64)
    return Matrix(code.field, data)


def coboundary_rank(code: SagsCode, pp: PrincipalPart, m: int, moments: np.ndarray | None = None) -> int:
    return coboundary_matrix(code, pp, m, moments).rank()


def h0_twist(code: SagsCode, pp: PrincipalPart, m: int, moments: np.ndarray | None = None) -> int:
    """``h^0(W(m)) = h^0(H^*(m)) + (m + 1) - rank of the coboundary``."""
    s = code.s
    h0_sub = sum(max(0, e - s + m + 1) for e in code.scroll.exponents)
    return h0_sub + (m + 1) - coboundary_rank(code, pp, m, moments)


def splitting_type(code: SagsCode, pp: PrincipalPart) -> SplittingType:
    """Degrees of W read off the first differences of ``m -> h^0(W(m))``.

    All degrees are <= 0 (every line subbundle lies in H^* or maps into O),
    so ``h^0(W(-1)) = 0`` and the difference at m is ``#{t : a_t >= -m}``.
    """
    rank = code.r + 1
    limit = code.s - code.scroll.exponents[-1] + 1
    mom = _moments(code, pp)
    counts = []
    prev_h0 = 0
    for m in range(limit + 1):
        h0 = h0_twist(code, pp, m, mom)
        diff = h0 - prev_h0
        if counts and diff < counts[-1]:
            raise ConstructionError(f"h0 ladder is not convex at m = {m}")
        counts.append(diff)
        prev_h0 = h0
        if diff == rank:
            break
    else:
        raise ConstructionError("h0 ladder did not stabilize")
    degrees = []
    last = 0
    for m, c in enumerate(counts):
        degrees += [-m] * (c - last)
        last = c
    st = SplittingType(tuple(degrees))
    expected = code.scroll.f - code.r * code.s
    if st.degree != expected or st.rank != rank:
        raise ConstructionError(f"splitting type {st} has degree {st.degree}, expected {expected}")
    return st


def split_type(code: SagsCode) -> SplittingType:
    """Type of the trivial extension H^* + O."""
    return SplittingType(tuple(sorted([0] + [e - code.s for e in code.scroll.exponents], reverse=True)))


def s1_invariant(st: SplittingType) -> int:
    """``deg W - rank(W) * (largest line-subbundle degree)``."""
    return st.degree - st.rank * st.degrees[0]


def check_instability(code: SagsCode, error: Sequence[int]) -> S1Report:
    pp = syndrome_to_principal_part(code, error)
    st = splitting_type(code, pp)
    s1 = s1_invariant(st)
    r, s, f = code.r, code.s, code.scroll.f
    a = len(pp.support)
    bound = (r + 1) * a - r * s + f
    if 2 * r * a <= r * s - f:
        cb = (r - 1) * (f - s * r) / (2 * r)
        strict = s1 < cb
    else:
        cb, strict = None, None
    weight = int(np.count_nonzero(error))
    return S1Report(weight, a, st, s1, bound, s1 <= bound, cb, strict)
