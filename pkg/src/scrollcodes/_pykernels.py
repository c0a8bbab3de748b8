"""Pure-Python (numpy) versions of the compiled kernels in ``_kernels.pyx``."""

from __future__ import annotations

import itertools

import numpy as np

_CHUNK = 1 << 15


def matmul(A, B, add, mul):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    if A.shape[1] != B.shape[0]:
        raise ValueError("inner dimensions differ")
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = add[out, mul[A[:, t][:, None], B[t][None, :]]]
    return out


def rref(M, add, mul, neg, inv):
    """Reduce ``M`` in place; return the list of pivot columns."""
    rows, cols = M.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(M[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        M[r] = mul[inv[M[r, c]], M[r]]
        others = np.flatnonzero(M[:, c])
        others = others[others != r]
        if others.size:
            factors = neg[M[others, c]]
            M[others] = add[M[others], mul[factors[:, None], M[r][None, :]]]
        pivots.append(c)
        r += 1
    return pivots


def rank(M, add, mul, neg, inv):
    work = np.array(M, dtype=np.int64, copy=True)
    return len(rref(work, add, mul, neg, inv))


def _tails(q: int, length: int):
    """All vectors of ``length`` digits in [0, q), in chunks, as int64 arrays."""
    total = q**length
    powers = q ** np.arange(length, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % q


def min_weight(G, add, mul, neg):
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    q = add.shape[0]
    best = n + 1
    for L in range(k):
        tail_len = k - 1 - L
        for tails in _tails(q, tail_len):
            words = np.broadcast_to(G[L], (tails.shape[0], n)).copy()
            for t in range(tail_len):
                words = add[words, mul[tails[:, t][:, None], G[L + 1 + t][None, :]]]
            w = np.count_nonzero(words, axis=1)
            w = w[w > 0]
            if w.size:
                best = min(best, int(w.min()))
    return 0 if best > n else best


def span_search(blocks, syn, r, a_max, add, mul, neg, inv):
    blocks = np.asarray(blocks, dtype=np.int64)
    syn = np.asarray(syn, dtype=np.int64)
    if not syn.any():
        return [()], 0
    s = blocks.shape[0] // r
    tests = 0
    for a in range(1, min(a_max, s) + 1):
        hits = []
        for combo in itertools.combinations(range(s), a):
            rows = np.concatenate([blocks[i * r:(i + 1) * r] for i in combo])
            base = rank(rows, add, mul, neg, inv)
            tests += 1
            if rank(np.vstack([rows, syn]), add, mul, neg, inv) == base:
                hits.append(tuple(combo))
        if hits:
            return hits, tests
    return [], tests
