# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in :mod:`socodes._kernels_py`.

Same signatures and results; tables are int64 numpy arrays.
"""

import numpy as np
cimport numpy as cnp

ctypedef cnp.int64_t i64


def weight_histogram(G, add, mul, neg, inv, long q, first_symbols=None):
    G = np.ascontiguousarray(G, dtype=np.int64)
    cdef Py_ssize_t k = G.shape[0], n = G.shape[1]
    hist_arr = np.zeros(n + 1, dtype=np.int64)
    cdef i64[::1] hist = hist_arr
    if k == 0:
        hist[0] = 1
        return hist_arr
    if k == 1 and first_symbols is not None:
        raise ValueError("cannot shard a one-row code")

    cdef i64[:, ::1] A = np.ascontiguousarray(add, dtype=np.int64)
    cdef i64[:, ::1] M = np.ascontiguousarray(mul, dtype=np.int64)
    cdef i64[::1] NG = np.ascontiguousarray(neg, dtype=np.int64)
    cdef i64[::1] IV = np.ascontiguousarray(inv, dtype=np.int64)
    cdef i64[:, ::1] Gv = G

    # zero locator, flattened (q, q): index b*q + u
    T_arr = np.empty(q * q, dtype=np.int64)
    cdef i64[::1] T = T_arr
    cdef long b, u, a, m
    for u in range(q):
        T[u] = q if u == 0 else q + 1
    for b in range(1, q):
        for u in range(q):
            T[b * q + u] = M[NG[u], IV[b]]

    cdef Py_ssize_t h = k - 1
    S_arr = np.zeros((max(h, 1), q, n), dtype=np.int64)
    cdef i64[:, :, ::1] S = S_arr
    cdef Py_ssize_t j, i
    for j in range(h):
        for a in range(q):
            for i in range(n):
                S[j, a, i] = M[a, Gv[j, i]]

    key_arr = G[k - 1] * q
    cdef i64[::1] key = key_arr
    P_arr = np.zeros((h + 1, n), dtype=np.int64)
    cdef i64[:, ::1] P = P_arr   # P[j] = sum of the first j scaled rows
    digits_arr = np.zeros(max(h, 1), dtype=np.int64)
    cdef i64[::1] digits = digits_arr
    cnt_arr = np.zeros(q + 2, dtype=np.int64)
    cdef i64[::1] cnt = cnt_arr

    cdef i64[::1] firsts
    if first_symbols is None:
        firsts = np.arange(q, dtype=np.int64)
    else:
        firsts = np.asarray(first_symbols, dtype=np.int64)
    cdef Py_ssize_t nfirst = firsts.shape[0], fpos = 0
    cdef Py_ssize_t start

    if h > 0:
        if nfirst == 0:
            return hist_arr
        digits[0] = firsts[0]
    start = 0
    while True:
        # rebuild partial sums from level `start`
        for j in range(start, h):
            for i in range(n):
                P[j + 1, i] = A[P[j, i], S[j, digits[j], i]]
        # leaf
        for m in range(q + 2):
            cnt[m] = 0
        for i in range(n):
            cnt[T[key[i] + P[h, i]]] += 1
        for m in range(q):
            hist[n - cnt[m] - cnt[q]] += 1
        # odometer step
        if h == 0:
            break
        j = h - 1
        while j >= 0:
            if j == 0:
                fpos += 1
                if fpos < nfirst:
                    digits[0] = firsts[fpos]
                    break
                j = -1
                break
            digits[j] += 1
            if digits[j] < q:
                break
            digits[j] = 0
            j -= 1
        if j < 0:
            break
        start = j
    return hist_arr


def dependent_triples(cols, add, mul, neg, inv, long q):
    C_arr = np.ascontiguousarray(cols, dtype=np.int64)
    cdef Py_ssize_t n = C_arr.shape[0], k = C_arr.shape[1]
    cdef double space = float(q) ** k
    if space > 2.0 ** 26:
        from ._kernels_py import dependent_triples as slow
        return slow(cols, add, mul, neg, inv, q)
    cdef i64[:, ::1] C = C_arr
    cdef i64[:, ::1] A = np.ascontiguousarray(add, dtype=np.int64)
    cdef i64[:, ::1] M = np.ascontiguousarray(mul, dtype=np.int64)
    cdef i64[::1] NG = np.ascontiguousarray(neg, dtype=np.int64)
    cdef i64[::1] IV = np.ascontiguousarray(inv, dtype=np.int64)
    table_arr = np.zeros(int(space), dtype=np.int64)
    cdef i64[::1] table = table_arr
    keys_arr = np.zeros(max(n, 1), dtype=np.int64)
    cdef i64[::1] keys = keys_arr
    hv_arr = np.zeros(k, dtype=np.int64)
    cdef i64[::1] hv = hv_arr
    v_arr = np.zeros(k, dtype=np.int64)
    cdef i64[::1] v = v_arr
    cdef Py_ssize_t i, j, c, r, nkeys, first
    cdef i64 total = 0, key, sc, lead, gi
    for i in range(n - 2):
        r = 0
        while C[i, r] == 0:
            r += 1
        gi = IV[C[i, r]]
        for c in range(k):
            hv[c] = M[gi, C[i, c]]
        nkeys = 0
        for j in range(i + 1, n):
            sc = C[j, r]
            first = -1
            for c in range(k):
                v[c] = A[C[j, c], NG[M[sc, hv[c]]]]
                if first < 0 and v[c] != 0:
                    first = c
            if first < 0:
                continue
            lead = IV[v[first]]
            key = 0
            for c in range(k):
                key = key * q + M[lead, v[c]]
            total += table[key]
            table[key] += 1
            keys[nkeys] = key
            nkeys += 1
        for j in range(nkeys):
            table[keys[j]] = 0
    return int(total)
