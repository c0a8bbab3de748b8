"""Rational normal scrolls P(E) over P^1 for E = O(e_1) + ... + O(e_r).

Sections of O_{P(E)}(1) are r-tuples of affine polynomials ``f_j(z)`` with
``deg f_j <= e_j``.  A chosen fiber over ``x_i`` carries an invertible r x r
covector matrix ``B_i``: row j is the covector whose span is the point
``P_{i,j}``, and the matching vectors e_{i,j} are the columns of ``B_i^{-1}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from scrollcodes._backend import kernels
from scrollcodes.gf import FieldSpec
from scrollcodes.linalg import Matrix

ENUMERATION_GUARD = 10**6


class ScrollError(ValueError):
    pass


@dataclass(frozen=True)
class ScrollSpec:
    """Scroll type ``exponents`` (non-increasing) over ``field``.

    Exponents may be 0 so that dual scrolls at the boundary ``s = e_1 + 2``
    are representable; codes built from a scroll require all ``e_j >= 1``.
    """

    field: FieldSpec
    exponents: tuple[int, ...]

    def __post_init__(self):
        ex = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", ex)
        if not ex:
            raise ScrollError("a scroll needs at least one exponent")
        if any(a < b for a, b in zip(ex, ex[1:])):
            raise ScrollError(f"exponents {ex} are not non-increasing")
        if ex[-1] < 0:
            raise ScrollError(f"exponents {ex} must be >= 0")

    @property
    def r(self) -> int:
        return len(self.exponents)

    @property
    def f(self) -> int:
        return sum(self.exponents)

    @property
    def k(self) -> int:
        return self.f + self.r

    @property
    def very_ample(self) -> bool:
        return self.exponents[-1] >= 1


@dataclass(frozen=True)
class Section:
    """Component polynomials (coefficient codes, lowest degree first)."""

    field: FieldSpec
    components: tuple[tuple[int, ...], ...]

    def value_at(self, x: int) -> np.ndarray:
        return np.array([_horner(self.field, poly, x) for poly in self.components], dtype=np.int64)


def _horner(field: FieldSpec, poly: Sequence[int], x: int) -> int:
    t = field.tables
    acc = 0
    for c in reversed(poly):
        acc = int(t.add[t.mul[acc, x], c])
    return acc


@dataclass(frozen=True)
class ScrollPoint:
    """A rational point: fiber coordinate (``None`` is infinity) and a canonical covector."""

    fiber: int | None
    direction: tuple[int, ...]

    @classmethod
    def make(cls, field: FieldSpec, fiber: int | None, covector: Sequence[int]) -> ScrollPoint:
        return cls(fiber, canonical_direction(field, covector))


def canonical_direction(field: FieldSpec, v: Sequence[int]) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1."""
    v = np.asarray(v, dtype=np.int64)
    nz = np.flatnonzero(v)
    if nz.size == 0:
        raise ScrollError("the zero covector defines no point")
    t = field.tables
    return tuple(int(c) for c in t.mul[t.inv[v[nz[0]]], v])


@dataclass(frozen=True, eq=False)
class EvaluationSet:
    """Fiber points x_1..x_s and their covector bases B_1..B_s."""

    field: FieldSpec
    points: tuple[int, ...]
    bases: tuple[Matrix, ...]

    def __post_init__(self):
        pts = tuple(int(x) for x in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "bases", tuple(self.bases))
        if len(set(pts)) != len(pts):
            raise ScrollError("fiber points must be distinct")
        if any(not 0 <= x < self.field.q for x in pts):
            raise ScrollError(f"fiber points must be elements of {self.field}")
        if len(self.bases) != len(pts):
            raise ScrollError("need one basis per fiber")
        if not pts:
            raise ScrollError("need at least one fiber")
        r = self.bases[0].rows
        for B in self.bases:
            if B.field != self.field or B.shape != (r, r):
                raise ScrollError("fiber bases must be r x r matrices over the code field")
            if not B.is_invertible():
                raise ScrollError("fiber basis is singular: its points do not span the fiber")

    @property
    def s(self) -> int:
        return len(self.points)

    @property
    def r(self) -> int:
        return self.bases[0].rows

    def __eq__(self, other):
        if not isinstance(other, EvaluationSet):
            return NotImplemented
        return (self.field == other.field and self.points == other.points
                and all(a == b for a, b in zip(self.bases, other.bases)))

    __hash__ = None

    def vector_bases(self) -> tuple[Matrix, ...]:
        """``B_i^{-1}``; column j is e_{i,j}."""
        return tuple(B.inverse() for B in self.bases)

    def dual_bases(self) -> tuple[Matrix, ...]:
        """``B_i^{-T}``: covectors of the dual points, biorthogonal to the rows of ``B_i``."""
        return tuple(B.inverse().T for B in self.bases)

    def scroll_points(self) -> list[ScrollPoint]:
        return [ScrollPoint.make(self.field, x, B.row(j))
                for x, B in zip(self.points, self.bases) for j in range(B.rows)]


def section_basis(spec: ScrollSpec) -> list[Section]:
    """Monomial sections, component-major then by degree."""
    return [Section(spec.field, tuple(tuple([0] * d + [1]) if jj == j else () for jj in range(spec.r)))
            for j, e in enumerate(spec.exponents) for d in range(e + 1)]


def monomial_values(field: FieldSpec, degrees: Sequence[int], points: Sequence[int]) -> np.ndarray:
    """Values of the monomial sections for per-component degree bounds.

    Returns shape ``(sum(d+1), s, r)``: entry [n, i, j] is component j of the
    n-th monomial section at points[i].  Order matches :func:`section_basis`.
    """
    t = field.tables
    r, s = len(degrees), len(points)
    dmax = max(degrees, default=-1)
    pw = np.ones((max(dmax + 1, 1), s), dtype=np.int64)
    x = np.asarray(points, dtype=np.int64)
    for d in range(1, dmax + 1):
        pw[d] = t.mul[pw[d - 1], x]
    rows = []
    for j, e in enumerate(degrees):
        for d in range(e + 1):
            v = np.zeros((s, r), dtype=np.int64)
            v[:, j] = pw[d]
            rows.append(v)
    return np.array(rows, dtype=np.int64).reshape(len(rows), s, r)


def apply_bases(field: FieldSpec, values: np.ndarray, bases: Sequence[Matrix]) -> np.ndarray:
    """Row j of ``bases[i]`` applied to each value vector; returns (N, s*r), fiber-major."""
    t = field.tables
    N, s, r = values.shape
    out = np.zeros((N, s * r), dtype=np.int64)
    for i, B in enumerate(bases):
        # (N x r) @ (r x r)^T
        out[:, i * r:(i + 1) * r] = kernels.matmul(
            np.ascontiguousarray(values[:, i, :]), np.ascontiguousarray(B.data.T), t.add, t.mul)
    return out


def evaluate(section: Section, es: EvaluationSet) -> np.ndarray:
    """Coordinates (i, j) = row j of B_i applied to the section's value at x_i."""
    if section.field != es.field:
        raise ScrollError("section and evaluation set live over different fields")
    vals = np.array([[section.value_at(x) for x in es.points]], dtype=np.int64)
    return apply_bases(es.field, vals, es.bases)[0]


def evaluation_matrix(spec: ScrollSpec, es: EvaluationSet) -> Matrix:
    """All basis sections evaluated: the k x sr matrix whose rows follow :func:`section_basis`."""
    vals = monomial_values(spec.field, spec.exponents, es.points)
    return Matrix(spec.field, apply_bases(spec.field, vals, es.bases))


def dual_scroll(spec: ScrollSpec, s: int) -> ScrollSpec:
    """Type of K(D) (x) E^* = sum O(s - 2 - e_j), sorted non-increasing."""
    if s < spec.exponents[0] + 2:
        raise ScrollError(f"s = {s} < e_1 + 2 = {spec.exponents[0] + 2}: a dual exponent would be negative")
    return ScrollSpec(spec.field, tuple(sorted((s - 2 - e for e in spec.exponents), reverse=True)))


def projective_directions(field: FieldSpec, r: int) -> Iterator[tuple[int, ...]]:
    """Canonical covectors of P^{r-1}(F_q): first nonzero coordinate 1."""
    q = field.q
    for lead in range(r):
        for tail in itertools.product(range(q), repeat=r - 1 - lead):
            yield (0,) * lead + (1,) + tail


def rational_points(spec: ScrollSpec, guard: int = ENUMERATION_GUARD) -> Iterator[ScrollPoint]:
    """Every F_q-point of P(E): affine fibers in code order, then the fiber at infinity."""
    q, r = spec.field.q, spec.r
    if q ** (r - 1) * (q + 1) > guard:
        raise ScrollError(f"enumeration of {q}^{r - 1}*{q + 1} points exceeds guard {guard}")
    for fiber in [*range(q), None]:
        for d in projective_directions(spec.field, r):
            yield ScrollPoint(fiber, d)


def count_rational_points(spec: ScrollSpec, guard: int = ENUMERATION_GUARD) -> int:
    return sum(1 for _ in rational_points(spec, guard))


def point_count_formula(q: int, r: int) -> int:
    return (q + 1) * sum(q**i for i in range(r))


def random_invertible(field: FieldSpec, r: int, rng: np.random.Generator) -> Matrix:
    while True:
        B = Matrix(field, rng.integers(0, field.q, size=(r, r)))
        if B.is_invertible():
            return B


def standard_fiber_bases(spec: ScrollSpec, points: Sequence[int], mode: str = "identity",
                         seed: int | None = None) -> EvaluationSet:
    """``identity`` puts the chosen points on the directrix curves; ``random`` draws B_i from GL_r."""
    field = spec.field
    if mode == "identity":
        bases = [Matrix.identity(field, spec.r) for _ in points]
    elif mode == "random":
        if seed is None:
            raise ScrollError("random fiber bases need an explicit seed")
        rng = np.random.default_rng(seed)
        bases = [random_invertible(field, spec.r, rng) for _ in points]
    else:
        raise ScrollError(f"unknown fiber-basis mode {mode!r}")
    return EvaluationSet(field, tuple(points), tuple(bases))
