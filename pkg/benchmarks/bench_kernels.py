"""Time the compiled kernels against the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from scrollcodes import _pykernels
from scrollcodes.code import build_code
from scrollcodes.decode import ErrorModel, random_error, syndrome
from scrollcodes.gf import FieldSpec
from scrollcodes.scroll import ScrollSpec, standard_fiber_bases

try:
    from scrollcodes import _kernels
except ImportError:
    _kernels = None


def _code(desc, exponents, s, seed=1):
    F = FieldSpec.parse(desc)
    spec = ScrollSpec(F, exponents)
    return build_code(spec, standard_fiber_bases(spec, range(s), "random", seed))


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def cases():
    c = _code("7", (2, 1), 7)
    t = c.field.tables
    G = np.ascontiguousarray(c.G.data)
    yield "min_weight  GF(7) [14,5]", lambda k: k.min_weight(G, t.add, t.mul, t.neg)

    c9 = _code("3^2", (1,), 9)
    t9 = c9.field.tables
    rng = np.random.default_rng(0)
    syns = [syndrome(c9, random_error(c9, ErrorModel(3), rng)) for _ in range(20)]
    blocks = np.ascontiguousarray(c9.R.data.T)
    yield "span_search GF(9) s=9 a<=3 x20", lambda k: [k.span_search(blocks, y, 1, 3, t9.add, t9.mul, t9.neg, t9.inv)
                                                     for y in syns]

    c3 = _code("2^3", (2, 2, 1), 8, 3)
    t3 = c3.field.tables
    rng = np.random.default_rng(1)
    y3 = [syndrome(c3, random_error(c3, ErrorModel(2), rng)) for _ in range(20)]
    b3 = np.ascontiguousarray(c3.R.data.T)
    yield "span_search GF(8) r=3 s=8 a<=2 x20", lambda k: [k.span_search(b3, y, 3, 2, t3.add, t3.mul, t3.neg, t3.inv)
                                                         for y in y3]

    F = FieldSpec.parse("3^2")
    tf = F.tables
    M = np.random.default_rng(2).integers(0, 9, size=(120, 120))
    yield "rank        GF(9) 120x120", lambda k: k.rank(M, tf.add, tf.mul, tf.neg, tf.inv)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; nothing to compare")
        return 1
    print(f"{'kernel':38s} {'cython':>10s} {'python':>10s} {'speedup':>8s}")
    for name, fn in cases():
        tc, oc = _best(lambda: fn(_kernels), args.repeat)
        tp, op = _best(lambda: fn(_pykernels), args.repeat)
        same = repr(oc) == repr(op) if not isinstance(oc, list) else \
            [([tuple(h) for h in a[0]], a[1]) for a in oc] == [([tuple(h) for h in b[0]], b[1]) for b in op]
        flag = "" if same else "  MISMATCH"
        print(f"{name:38s} {tc * 1e3:8.2f}ms {tp * 1e3:8.2f}ms {tp / tc:7.1f}x{flag}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
