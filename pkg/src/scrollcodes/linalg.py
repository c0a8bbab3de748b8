"""Dense exact linear algebra over a :class:`~scrollcodes.gf.FieldSpec`.

Matrices hold element codes in an int64 numpy array.  Vectors are plain 1-d
code arrays.  Elimination is Gauss-Jordan with the first nonzero entry as
pivot, so every result is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from scrollcodes._backend import kernels
from scrollcodes.gf import FieldElement, FieldSpec


class NoSolution(ArithmeticError):
    """The right-hand side is not in the column span."""


class Matrix:
    """A rows x cols matrix over ``field``; treat as immutable."""

    __slots__ = ("field", "data")

    def __init__(self, field: FieldSpec, data):
        arr = np.array(data, dtype=np.int64, copy=True)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError(f"matrix data must be 2-d, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries outside {field}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> Matrix:
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_elements(cls, field: FieldSpec, rows: Iterable[Iterable[FieldElement | int]]) -> Matrix:
        return cls(field, [[int(field.element(x).code) if isinstance(x, FieldElement) else int(x)
                            for x in row] for row in rows])

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> Matrix:
        return Matrix(self.field, self.data.T)

    def element(self, i: int, j: int) -> FieldElement:
        return self.field.element(int(self.data[i, j]))

    def row(self, i: int) -> np.ndarray:
        return self.data[i].copy()

    def __repr__(self):
        return f"Matrix({self.field.descriptor}, {self.data.tolist()})"

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and np.array_equal(self.data, other.data)

    __hash__ = None

    def __matmul__(self, other):
        t = self.field.tables
        if isinstance(other, Matrix):
            _same_field(self, other)
            return Matrix(self.field, kernels.matmul(_c(self.data), _c(other.data), t.add, t.mul))
        vec = np.asarray(other, dtype=np.int64)
        if vec.ndim != 1:
            raise ValueError("expected a Matrix or a 1-d vector")
        return kernels.matmul(_c(self.data), _c(vec[:, None]), t.add, t.mul)[:, 0]

    def __add__(self, other: Matrix) -> Matrix:
        _same_field(self, other)
        return Matrix(self.field, self.field.tables.add[self.data, other.data])

    def scale(self, c: int) -> Matrix:
        return Matrix(self.field, self.field.tables.mul[int(c), self.data])

    def scale_columns(self, factors: Sequence[int]) -> Matrix:
        f = np.asarray(factors, dtype=np.int64)
        return Matrix(self.field, self.field.tables.mul[self.data, f[None, :]])

    def hstack(self, other: Matrix) -> Matrix:
        _same_field(self, other)
        return Matrix(self.field, np.hstack([self.data, other.data]))

    def vstack(self, other: Matrix) -> Matrix:
        _same_field(self, other)
        return Matrix(self.field, np.vstack([self.data, other.data]))

    def columns(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.field, self.data[:, list(idx)])

    def rank(self) -> int:
        t = self.field.tables
        if self.data.size == 0:
            return 0
        return kernels.rank(_c(self.data), t.add, t.mul, t.neg, t.inv)

    def rref(self) -> tuple[Matrix, list[int], int]:
        return rref(self)

    def inverse(self) -> Matrix:
        n = self.rows
        if n != self.cols:
            raise ValueError("only square matrices are invertible")
        red, piv, rk = rref(self.hstack(Matrix.identity(self.field, n)))
        if rk < n or piv[n - 1] >= n:
            raise ArithmeticError("matrix is singular")
        return Matrix(self.field, red.data[:, n:])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    # -- text format ----------------------------------------------------------

    def to_text(self) -> str:
        """``rows cols descriptor`` then one line per row of fixed-width entries."""
        fmt = self.field.format_code
        lines = [f"{self.rows} {self.cols} {self.field.descriptor}"]
        lines += [" ".join(fmt(x) for x in row) for row in self.data.tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Matrix:
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        head = lines[0].split()
        if len(head) != 3:
            raise ValueError(f"bad matrix header {lines[0]!r}")
        rows, cols = int(head[0]), int(head[1])
        field = FieldSpec.parse(head[2])
        body = lines[1:]
        if len(body) != rows:
            raise ValueError(f"expected {rows} rows, found {len(body)}")
        data = []
        for ln in body:
            toks = ln.split()
            if len(toks) != cols:
                raise ValueError(f"expected {cols} entries in row {ln!r}")
            data.append([field.parse_code(t) for t in toks])
        return cls(field, np.array(data, dtype=np.int64).reshape(rows, cols))


def _c(a: np.ndarray) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.int64)


def _same_field(a: Matrix, b: Matrix):
    if a.field != b.field:
        raise ValueError("matrices over different fields")


def rref(M: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    t = M.field.tables
    work = np.array(M.data, dtype=np.int64, copy=True, order="C")
    if work.size == 0:
        return Matrix(M.field, work), [], 0
    piv = kernels.rref(work, t.add, t.mul, t.neg, t.inv)
    return Matrix(M.field, work), list(piv), len(piv)


def kernel_basis(M: Matrix) -> Matrix:
    """Rows form a basis of ``{x : M x = 0}`` (one row per free column)."""
    red, piv, rk = rref(M)
    t = M.field.tables
    free = [c for c in range(M.cols) if c not in set(piv)]
    basis = np.zeros((len(free), M.cols), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for r, pc in enumerate(piv):
            basis[b, pc] = t.neg[red.data[r, fc]]
    return Matrix(M.field, basis)


@dataclass(frozen=True)
class Solution:
    """A particular solution and a basis of the homogeneous solutions."""

    x: np.ndarray
    kernel: Matrix

    @property
    def unique(self) -> bool:
        return self.kernel.rows == 0


def solve(M: Matrix, b: Sequence[int]) -> Solution:
    """Solve ``M x = b``; raise :class:`NoSolution` if ``b`` is outside the column span."""
    b = np.asarray(b, dtype=np.int64)
    if b.shape != (M.rows,):
        raise ValueError(f"right-hand side has shape {b.shape}, expected ({M.rows},)")
    aug = Matrix(M.field, np.hstack([M.data, b[:, None]]))
    red, piv, _ = rref(aug)
    if piv and piv[-1] == M.cols:
        raise NoSolution("system is inconsistent")
    x = np.zeros(M.cols, dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = red.data[r, M.cols]
    return Solution(x, kernel_basis(M))


def in_span(columns: Matrix, v: Sequence[int]) -> bool:
    """True iff ``v`` lies in the span of the columns of ``columns``."""
    v = np.asarray(v, dtype=np.int64)
    if not v.any():
        return True
    if columns.cols == 0:
        return False
    aug = Matrix(columns.field, np.hstack([columns.data, v[:, None]]))
    return aug.rank() == columns.rank()


def same_row_space(A: Matrix, B: Matrix) -> bool:
    if A.cols != B.cols:
        return False
    ra = A.rank()
    return ra == B.rank() and A.vstack(B).rank() == ra
