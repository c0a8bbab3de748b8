"""Syndrome decoding in two steps.

Step 1 finds the smallest sets of fibers whose parity-check columns span the
syndrome (exhaustive over subsets, smallest cardinality first).  Step 2 solves
the linear system restricted to those fibers' columns.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from scrollcodes._backend import kernels
from scrollcodes.code import SagsCode, encode
from scrollcodes.linalg import NoSolution, solve


class Ambiguous(ArithmeticError):
    """The restricted system has more than one solution."""


class Status(str, enum.Enum):
    CORRECTED = "corrected"
    AMBIGUOUS = "ambiguous"
    UNDECODABLE = "undecodable"


def syndrome(code: SagsCode, received: Sequence[int]) -> np.ndarray:
    y = np.asarray(received, dtype=np.int64)
    if y.shape != (code.n,):
        raise ValueError(f"received word must have length n = {code.n}")
    return code.R @ y


def fiber_correction_radius(code: SagsCode) -> int:
    """Largest a with ``s - e_1 - 2 - 2a >= -1``."""
    return max(0, (code.s - code.scroll.exponents[0] - 1) // 2)


def _blocks(code: SagsCode) -> np.ndarray:
    # row r*i + j is the parity column of coordinate (i, j)
    return np.ascontiguousarray(code.R.data.T)


def search_fibers(code: SagsCode, syn: Sequence[int], a_max: int) -> tuple[list[tuple[int, ...]], int]:
    """Minimal fiber sets spanning ``syn`` and the number of span tests used."""
    if a_max > code.s:
        raise ValueError(f"a_max = {a_max} exceeds the number of fibers s = {code.s}")
    t = code.field.tables
    syn = np.ascontiguousarray(syn, dtype=np.int64)
    hits, tests = kernels.span_search(_blocks(code), syn, code.r, a_max, t.add, t.mul, t.neg, t.inv)
    return [tuple(h) for h in hits], int(tests)


def locate_fibers(code: SagsCode, syn: Sequence[int], a_max: int) -> list[tuple[int, ...]]:
    return search_fibers(code, syn, a_max)[0]


def solve_in_fibers(code: SagsCode, syn: Sequence[int], loc: Sequence[int]) -> np.ndarray:
    """Error vector supported on the fibers ``loc`` with syndrome ``syn``.

    Raises :class:`NoSolution` if ``syn`` is outside their span and
    :class:`Ambiguous` if the solution is not unique.
    """
    syn = np.asarray(syn, dtype=np.int64)
    err = np.zeros(code.n, dtype=np.int64)
    if not loc:
        if syn.any():
            raise NoSolution("nonzero syndrome with an empty location")
        return err
    r = code.r
    cols = [i * r + j for i in sorted(loc) for j in range(r)]
    sol = solve(code.R.columns(cols), syn)
    if not sol.unique:
        raise Ambiguous(f"{sol.kernel.rows}-dimensional family of errors on fibers {tuple(loc)}")
    err[cols] = sol.x
    return err


@dataclass(frozen=True)
class DecodeResult:
    status: Status
    error: np.ndarray | None
    corrected: np.ndarray | None
    fibers: tuple[int, ...] | None
    candidates: list[tuple[int, ...]]
    span_tests: int

    @property
    def weight(self) -> int | None:
        return None if self.error is None else int(np.count_nonzero(self.error))


def decode(code: SagsCode, received: Sequence[int], a_max: int | None = None) -> DecodeResult:
    y = np.asarray(received, dtype=np.int64)
    syn = syndrome(code, y)
    a_max = fiber_correction_radius(code) if a_max is None else a_max
    cands, tests = search_fibers(code, syn, min(a_max, code.s))
    if not cands:
        return DecodeResult(Status.UNDECODABLE, None, None, None, cands, tests)
    if len(cands) > 1:
        return DecodeResult(Status.AMBIGUOUS, None, None, None, cands, tests)
    try:
        err = solve_in_fibers(code, syn, cands[0])
    except Ambiguous:
        return DecodeResult(Status.AMBIGUOUS, None, None, cands[0], cands, tests)
    t = code.field.tables
    corrected = t.sub(y, err)
    return DecodeResult(Status.CORRECTED, err, corrected, cands[0], cands, tests)


# -- channel simulation --------------------------------------------------------

@dataclass(frozen=True)
class ErrorModel:
    """Errors on exactly ``fibers`` distinct fibers.

    ``per_fiber`` nonzero positions are set in each chosen fiber (uniform
    nonzero values); ``None`` draws a uniform nonzero r-vector per fiber.
    """

    fibers: int
    per_fiber: int | None = None
    seed: int = 0


def random_error(code: SagsCode, model: ErrorModel, rng: np.random.Generator) -> np.ndarray:
    r, q = code.r, code.field.q
    if not 0 <= model.fibers <= code.s:
        raise ValueError(f"cannot place errors on {model.fibers} of {code.s} fibers")
    if model.per_fiber is not None and not 1 <= model.per_fiber <= r:
        raise ValueError(f"per_fiber must lie in 1..{r}")
    err = np.zeros(code.n, dtype=np.int64)
    for i in rng.choice(code.s, size=model.fibers, replace=False):
        block = np.zeros(r, dtype=np.int64)
        if model.per_fiber is None:
            while not block.any():
                block = rng.integers(0, q, size=r)
        else:
            pos = rng.choice(r, size=model.per_fiber, replace=False)
            block[pos] = rng.integers(1, q, size=model.per_fiber)
        err[i * r:(i + 1) * r] = block
    return err


@dataclass(frozen=True)
class SimulationStats:
    trials: int
    success: int
    ambiguous: int
    undecodable: int
    miscorrected: int
    span_tests: int

    @property
    def success_rate(self) -> float:
        return self.success / self.trials

    @property
    def ambiguity_rate(self) -> float:
        return self.ambiguous / self.trials

    @property
    def mean_span_tests(self) -> float:
        return self.span_tests / self.trials

    def summary_line(self) -> str:
        return (f"trials={self.trials} success={self.success_rate:.3f} "
                f"ambiguous={self.ambiguity_rate:.3f} undecodable={self.undecodable / self.trials:.3f} "
                f"miscorrected={self.miscorrected / self.trials:.3f} "
                f"mean_span_tests={self.mean_span_tests:.3f}")


def simulate_channel(code: SagsCode, trials: int, model: ErrorModel, a_max: int | None = None,
                     log: list[str] | None = None) -> SimulationStats:
    """Random codeword plus random error, decoded ``trials`` times.

    Trial t draws from ``default_rng([seed, t])`` so results do not depend
    on how trials are scheduled.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    q = code.field.q
    ok = amb = und = mis = tests = 0
    for trial in range(trials):
        rng = np.random.default_rng([model.seed, trial])
        sent = encode(code, rng.integers(0, q, size=code.k))
        err = random_error(code, model, rng)
        res = decode(code, code.field.tables.add[sent, err], a_max)
        tests += res.span_tests
        if res.status is Status.CORRECTED:
            if np.array_equal(res.corrected, sent):
                ok += 1
                outcome = "ok"
            else:
                mis += 1
                outcome = "miscorrected"
        elif res.status is Status.AMBIGUOUS:
            amb += 1
            outcome = "ambiguous"
        else:
            und += 1
            outcome = "undecodable"
        if log is not None:
            log.append(f"{trial} weight={int(np.count_nonzero(err))} fibers={model.fibers} "
                       f"{outcome} span_tests={res.span_tests}")
    return SimulationStats(trials, ok, amb, und, mis, tests)


__all__ = [
    "Ambiguous",
    "DecodeResult",
    "ErrorModel",
    "NoSolution",
    "SimulationStats",
    "Status",
    "decode",
    "fiber_correction_radius",
    "locate_fibers",
    "random_error",
    "search_fibers",
    "simulate_channel",
    "solve_in_fibers",
    "syndrome",
]
