"""Text formats: code-spec files and one-line words.

A code-spec file lists everything needed to rebuild a code bit-identically::

    scrollcodes-spec 1
    field 5^1/0,1
    exponents 1 1
    points 0 1 2 3 4
    bases identity
    seed none
    basis 0
    1 0
    0 1
    ...

Field elements are written as their coefficient digits (lowest degree first,
each digit zero-padded to the width of p - 1), as in matrix files.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from scrollcodes.code import SagsCode, build_code
from scrollcodes.gf import FieldSpec
from scrollcodes.linalg import Matrix
from scrollcodes.scroll import EvaluationSet, ScrollSpec, standard_fiber_bases

MAGIC = "scrollcodes-spec 1"


class FormatError(ValueError):
    pass


def format_word(field: FieldSpec, word: Sequence[int]) -> str:
    return ",".join(field.format_code(int(x)) for x in word)


def parse_word(field: FieldSpec, text: str, length: int | None = None) -> np.ndarray:
    text = text.strip()
    toks = [t for t in text.split(",")] if text else []
    try:
        word = np.array([field.parse_code(t) for t in toks], dtype=np.int64)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if length is not None and word.size != length:
        raise FormatError(f"word has length {word.size}, expected {length}")
    return word


@dataclass(frozen=True, eq=False)
class CodeSpecFile:
    field: FieldSpec
    exponents: tuple[int, ...]
    points: tuple[int, ...]
    mode: str
    seed: int | None
    bases: tuple[Matrix, ...]

    @classmethod
    def create(cls, field: FieldSpec, exponents: Sequence[int], points: Sequence[int],
               mode: str = "identity", seed: int | None = None) -> CodeSpecFile:
        spec = ScrollSpec(field, tuple(exponents))
        es = standard_fiber_bases(spec, points, mode, seed)
        return cls(field, spec.exponents, es.points, mode, seed, es.bases)

    @property
    def scroll(self) -> ScrollSpec:
        return ScrollSpec(self.field, self.exponents)

    @property
    def evaluation_set(self) -> EvaluationSet:
        return EvaluationSet(self.field, self.points, self.bases)

    def build(self) -> SagsCode:
        return build_code(self.scroll, self.evaluation_set)

    def __eq__(self, other):
        if not isinstance(other, CodeSpecFile):
            return NotImplemented
        return self.to_text() == other.to_text()

    __hash__ = None

    def to_text(self) -> str:
        fmt = self.field.format_code
        lines = [
            MAGIC,
            f"field {self.field.descriptor}",
            "exponents " + " ".join(map(str, self.exponents)),
            "points " + " ".join(fmt(x) for x in self.points),
            f"bases {self.mode}",
            f"seed {'none' if self.seed is None else self.seed}",
        ]
        for i, B in enumerate(self.bases):
            lines.append(f"basis {i}")
            lines += [" ".join(fmt(x) for x in row) for row in B.data.tolist()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> CodeSpecFile:
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
        if not lines or lines[0] != MAGIC:
            raise FormatError(f"missing header line {MAGIC!r}")
        keys = {}
        pos = 1
        for key in ("field", "exponents", "points", "bases", "seed"):
            if pos >= len(lines):
                raise FormatError(f"missing {key!r} line")
            name, _, value = lines[pos].partition(" ")
            if name != key:
                raise FormatError(f"expected {key!r} line, found {lines[pos]!r}")
            keys[key] = value.strip()
            pos += 1
        try:
            field = FieldSpec.parse(keys["field"])
            exponents = tuple(int(e) for e in keys["exponents"].split())
            points = tuple(field.parse_code(t) for t in keys["points"].split())
            seed = None if keys["seed"] == "none" else int(keys["seed"])
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
        r = len(exponents)
        bases = []
        for i in range(len(points)):
            if pos >= len(lines) or lines[pos] != f"basis {i}":
                raise FormatError(f"expected 'basis {i}'")
            rows = lines[pos + 1:pos + 1 + r]
            if len(rows) != r:
                raise FormatError(f"basis {i} needs {r} rows")
            bases.append(Matrix(field, [[field.parse_code(t) for t in row.split()] for row in rows]))
            pos += 1 + r
        if pos != len(lines):
            raise FormatError("trailing content after the last basis")
        return cls(field, exponents, points, keys["bases"], seed, tuple(bases))
