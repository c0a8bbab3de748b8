"""Arithmetic in GF(p^m), represented as GF(p)[x]/(modulus).

Elements carry their coefficient tuple (lowest degree first).  Each element
also has an integer *code* ``sum(c_i * p**i)``; enumeration order is by code,
so 0 comes first and for prime fields the code is the residue itself.  The
matrix layer works on codes through the lookup tables in :class:`FieldTables`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 1 << 16
# add/mul tables are q*q int64 entries
MAX_TABLE_ORDER = 1024


class FieldError(ValueError):
    """Invalid field description."""


class FieldDivisionError(ZeroDivisionError):
    """Division by the zero element."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# -- polynomials over GF(p) as coefficient lists, lowest degree first ----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = a[-1] * inv_lead % p
        for i, c in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * c) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    f = _trim([c % p for c in modulus])
    deg = len(f) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def first_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree m, ordered by code of the low coefficients."""
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        cand = tuple(low + [1])
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^m) with a monic irreducible ``modulus`` (coefficients lowest first)."""

    p: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise FieldError("extension degree must be >= 1")
        if self.p**self.m > MAX_ORDER:
            raise FieldError(f"field order {self.p}^{self.m} exceeds {MAX_ORDER}")
        if len(self.modulus) != self.m + 1 or any(not 0 <= c < self.p for c in self.modulus):
            raise FieldError(f"modulus must have {self.m + 1} coefficients in [0, {self.p})")
        if self.modulus[-1] != 1:
            raise FieldError("modulus must be monic")
        if not is_irreducible(self.modulus, self.p):
            raise FieldError(f"modulus {self.modulus} is reducible over GF({self.p})")

    @classmethod
    def prime(cls, p: int) -> FieldSpec:
        return cls(p, 1, (0, 1))

    @classmethod
    def of_order(cls, p: int, m: int = 1) -> FieldSpec:
        return cls(p, m, first_irreducible(p, m))

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``"p^m/c0,c1,...,cm"``; ``"p^m"`` and ``"p"`` pick the first irreducible."""
        text = text.strip()
        head, _, tail = text.partition("/")
        try:
            if "^" in head:
                p_s, m_s = head.split("^")
                p, m = int(p_s), int(m_s)
            else:
                p, m = int(head), 1
            if not tail:
                if not is_prime(p):
                    raise FieldError(f"characteristic {p} is not prime")
                return cls.of_order(p, m)
            coeffs = tuple(int(c) for c in tail.split(","))
        except ValueError as exc:
            if isinstance(exc, FieldError):
                raise
            raise FieldError(f"malformed field descriptor {text!r}") from exc
        return cls(p, m, coeffs)

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def descriptor(self) -> str:
        return f"{self.p}^{self.m}/" + ",".join(map(str, self.modulus))

    @property
    def digit_width(self) -> int:
        return len(str(self.p - 1))

    def __str__(self):
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    # -- elements -------------------------------------------------------------

    def coeffs_of(self, code: int) -> tuple[int, ...]:
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self}")
        return tuple((code // self.p**i) % self.p for i in range(self.m))

    def code_of(self, coeffs: Sequence[int]) -> int:
        return sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))

    def element(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Element from a code (int) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            return FieldElement(self, self.coeffs_of(int(value)))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.m)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, (1,) + (0,) * (self.m - 1))

    def elements(self) -> list[FieldElement]:
        return [self.element(c) for c in range(self.q)]

    # -- text encoding --------------------------------------------------------

    def format_code(self, code: int) -> str:
        """Fixed-width digits of the coefficients, lowest degree first."""
        w = self.digit_width
        return "".join(f"{c:0{w}d}" for c in self.coeffs_of(int(code)))

    def parse_code(self, token: str) -> int:
        token = token.strip()
        w = self.digit_width
        if self.m == 1:
            value = int(token)
            if not 0 <= value < self.p:
                raise ValueError(f"{token!r} is not an element of {self}")
            return value
        if len(token) != w * self.m or not token.isdigit():
            raise ValueError(f"{token!r} is not a {self.m}x{w}-digit element of {self}")
        coeffs = [int(token[i * w:(i + 1) * w]) for i in range(self.m)]
        if any(c >= self.p for c in coeffs):
            raise ValueError(f"{token!r} has a digit outside GF({self.p})")
        return self.code_of(coeffs)

    # -- tables for the matrix layer -----------------------------------------

    @cached_property
    def tables(self) -> FieldTables:
        return FieldTables.build(self)


@dataclass(frozen=True, eq=False)
class FieldElement:
    """An element of ``field`` given by its residue coefficients."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    @property
    def code(self) -> int:
        return self.field.code_of(self.coeffs)

    def __int__(self):
        return self.code

    def __index__(self):
        return self.code

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.code == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.field.m == 1:
            return f"{self.coeffs[0]} (mod {self.field.p})"
        return f"FieldElement({self.field.descriptor}, {self.coeffs})"

    def _coerce(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.element([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        prod = _poly_mul(self.coeffs, other.coeffs, f.p)
        return f.element(_poly_mod(prod, f.modulus, f.p))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FieldElement:
        if not self:
            raise FieldDivisionError(f"zero has no inverse in {self.field}")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other


@dataclass(frozen=True, eq=False)
class FieldTables:
    """Lookup tables indexed by element code."""

    q: int
    p: int
    add: np.ndarray
    mul: np.ndarray
    neg: np.ndarray
    inv: np.ndarray  # inv[0] is 0 and must never be used

    @classmethod
    def build(cls, field: FieldSpec) -> FieldTables:
        q = field.q
        if q > MAX_TABLE_ORDER:
            raise FieldError(f"matrix arithmetic supports q <= {MAX_TABLE_ORDER}, got {q}")
        p = field.p
        digits = np.array([field.coeffs_of(c) for c in range(q)], dtype=np.int64).reshape(q, field.m)
        weights = p ** np.arange(field.m, dtype=np.int64)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        neg = ((-digits) % p) @ weights
        elems = field.elements()
        mul = np.zeros((q, q), dtype=np.int64)
        if field.m == 1:
            codes = np.arange(q, dtype=np.int64)
            mul = np.outer(codes, codes) % p
        else:
            for a in range(1, q):
                for b in range(a, q):
                    mul[a, b] = mul[b, a] = (elems[a] * elems[b]).code
        inv = np.zeros(q, dtype=np.int64)
        rows, cols = np.nonzero(mul == 1)
        inv[rows] = cols
        for t in (add, mul, neg, inv):
            t.setflags(write=False)
        return cls(q, p, np.ascontiguousarray(add), np.ascontiguousarray(mul),
                   np.ascontiguousarray(neg), inv)

    def sub(self, a, b):
        return self.add[a, self.neg[b]]


def field_new(p: int, m: int, modulus: Iterable[int]) -> FieldSpec:
    return FieldSpec(p, m, tuple(modulus))


def enumerate_field(field: FieldSpec) -> list[FieldElement]:
    return field.elements()
