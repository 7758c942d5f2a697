"""Numpy implementations of the hot loops (fallback for the compiled core).

Both functions take compact-index matrices plus the dense tables of a
:class:`socodes.ff.Subfield`; see :mod:`socodes.kernels` for the contract.
"""

from __future__ import annotations

import numpy as np


def _zero_locator(q, mul, neg, inv):
    # T[b, u] = the last message symbol m with m*b + u = 0; q means "every m", q+1 "no m"
    T = np.empty((q, q), dtype=np.int64)
    T[0, 0] = q
    T[0, 1:] = q + 1
    b = np.arange(1, q)
    u = np.arange(q)
    T[1:, :] = mul[neg[u][None, :], inv[b][:, None]]
    return T.ravel()


def weight_histogram(G, add, mul, neg, inv, q, first_symbols=None):
    """Histogram (length n+1) of Hamming weights of m @ G over all messages m.

    Messages are walked depth first over all but the last row; for each
    partial sum u the zero count of every choice of the last symbol is read
    off one bincount, so each codeword is still evaluated exactly.
    ``first_symbols`` restricts the first message symbol (for sharding).
    """
    G = np.ascontiguousarray(G, dtype=np.int64)
    k, n = G.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        hist[0] = 1
        return hist
    T = _zero_locator(q, mul, neg, inv)
    key_base = G[k - 1] * q
    head = G[: k - 1]
    scaled = mul[np.arange(q)[None, :, None], head[:, None, :]]  # (k-1, q, n)
    arange_q = np.arange(q)

    def leaf(u):
        z = np.bincount(T[key_base + u], minlength=q + 2)
        zeros = z[:q] + z[q]
        np.add.at(hist, n - zeros, 1)

    if k == 1:
        leaf(np.zeros(n, dtype=np.int64))
        if first_symbols is not None:
            raise ValueError("cannot shard a one-row code")
        return hist

    def rec(j, u):
        if j == k - 1:
            leaf(u)
            return
        symbols = arange_q if (j > 0 or first_symbols is None) else first_symbols
        for a in symbols:
            rec(j + 1, add[u, scaled[j, a]])

    rec(0, np.zeros(n, dtype=np.int64))
    return hist


def dependent_triples(cols, add, mul, neg, inv, q):
    """Number of unordered column triples spanning a plane.

    ``cols`` is (n, k).  Assumes no zero column and no two proportional
    columns.  For each i the later columns are projected along g_i and
    normalised; two of them are coplanar with g_i iff their images agree.
    """
    C = np.ascontiguousarray(cols, dtype=np.int64)
    n, k = C.shape
    total = 0
    w = q ** np.arange(k - 1, -1, -1, dtype=object)
    small = q**k < 2**62
    wi = w.astype(np.int64) if small else None
    for i in range(n - 2):
        g = C[i]
        r = int(np.nonzero(g)[0][0])
        h = mul[inv[g[r]], g]
        rest = C[i + 1 :]
        V = add[rest, neg[mul[rest[:, r][:, None], h[None, :]]]]
        nz = V != 0
        has = nz.any(axis=1)
        V = V[has]
        if len(V) < 2:
            continue
        first = np.argmax(V != 0, axis=1)
        lead = V[np.arange(len(V)), first]
        V = mul[inv[lead][:, None], V]
        if small:
            _, counts = np.unique(V @ wi, return_counts=True)
        else:
            _, counts = np.unique(V, axis=0, return_counts=True)
        total += int((counts * (counts - 1) // 2).sum())
    return total
