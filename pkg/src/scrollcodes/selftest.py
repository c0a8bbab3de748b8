"""Fast subset of the acceptance checks, run by ``scrollcodes selftest``."""

from __future__ import annotations

import itertools
from typing import Callable

import numpy as np

from scrollcodes.code import build_code, dual_code_check, encode, min_distance_bruteforce
from scrollcodes.decode import ErrorModel, Status, decode, simulate_channel
from scrollcodes.extension import check_instability
from scrollcodes.formats import CodeSpecFile
from scrollcodes.gf import FieldSpec
from scrollcodes.scroll import ScrollSpec, count_rational_points, point_count_formula, standard_fiber_bases


def _code(field, exponents, s, mode="identity", seed=None):
    spec = ScrollSpec(field, exponents)
    return build_code(spec, standard_fiber_bases(spec, range(s), mode, seed))


def _duality() -> bool:
    rng = np.random.default_rng(1)
    for q_desc in ("2^2", "5", "7", "3^2"):
        F = FieldSpec.parse(q_desc)
        for _ in range(5):
            r = int(rng.integers(1, 4))
            ex = tuple(sorted(rng.integers(1, 4, size=r).tolist(), reverse=True))
            if ex[0] + 2 > F.q:
                continue
            s = int(rng.integers(ex[0] + 2, F.q + 1))
            c = _code(F, ex, s, "random", int(rng.integers(1 << 30)))
            if (c.R @ c.G.T).data.any() or not dual_code_check(c).ok:
                return False
    return True


def _reed_solomon() -> bool:
    F = FieldSpec.prime(7)
    return all(min_distance_bruteforce(_code(F, (e,), s)) == s - e
               for e in (1, 2, 3) for s in range(e + 2, 8))


def _points() -> bool:
    return all(count_rational_points(ScrollSpec(FieldSpec.parse(d), (1,) * r)) == point_count_formula(q, r)
               for d, q in (("2", 2), ("3", 3)) for r in (1, 2, 3))


def _directrix() -> bool:
    F = FieldSpec.prime(5)
    return min_distance_bruteforce(_code(F, (2, 1), 5)) == 3 and min_distance_bruteforce(_code(F, (1, 1), 5)) == 4


def _quadric_decoder() -> bool:
    F = FieldSpec.prime(5)
    c = _code(F, (1, 1), 5)
    sent = encode(c, [1, 2, 3, 4])
    for i in range(c.s):
        for a, b in itertools.product(range(5), repeat=2):
            if a == b == 0:
                continue
            err = np.zeros(c.n, dtype=np.int64)
            err[2 * i:2 * i + 2] = (a, b)
            res = decode(c, F.tables.add[sent, err])
            if res.status is not Status.CORRECTED or not np.array_equal(res.corrected, sent):
                return False
    return True


def _extension() -> bool:
    F = FieldSpec.prime(5)
    c = _code(F, (1, 1), 5, "random", 4)
    rng = np.random.default_rng(2)
    for _ in range(100):
        err = rng.integers(0, 5, size=c.n) * (rng.random(c.n) < 0.3)
        rep = check_instability(c, err)
        if not rep.satisfied or rep.splitting.degree != c.scroll.f - c.r * c.s:
            return False
    return True


def _determinism() -> bool:
    spec = CodeSpecFile.create(FieldSpec.prime(7), (2, 1), range(7), "random", 9)
    again = CodeSpecFile.from_text(spec.to_text())
    a, b = spec.build(), again.build()
    if a.G.to_text() != b.G.to_text() or a.R.to_text() != b.R.to_text():
        return False
    m = ErrorModel(1, None, 3)
    return simulate_channel(a, 50, m).summary_line() == simulate_channel(b, 50, m).summary_line()


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("structural duality", _duality),
    ("Reed-Solomon reduction", _reed_solomon),
    ("point count", _points),
    ("directrix distances", _directrix),
    ("quadric decoder", _quadric_decoder),
    ("extension invariants", _extension),
    ("determinism", _determinism),
]


def run(emit: Callable[[str], None] = print) -> bool:
    ok = True
    for name, check in CHECKS:
        passed = check()
        ok &= passed
        emit(f"{'PASS' if passed else 'FAIL'} {name}")
    return ok
