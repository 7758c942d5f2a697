"""Dense linear algebra over a Subfield, on compact element indices."""

from __future__ import annotations

import numpy as np

from .ff import Subfield


def field_sum(field: Subfield, idx, axis: int = 0) -> np.ndarray:
    """Sum of field elements along an axis (addition is digit-wise mod p)."""
    tower = field.tower
    digits = tower._digits[field.elements[np.asarray(idx, dtype=np.int64)]]
    enc = (digits.sum(axis=axis) % tower.p) @ tower._pw
    return field._index[enc]


def matmul(field: Subfield, A, B) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for i in range(A.shape[0]):
        prods = field.mul[A[i][:, None], B]
        out[i] = field_sum(field, prods, axis=0)
    return out


def gram(field: Subfield, G) -> np.ndarray:
    G = np.asarray(G, dtype=np.int64)
    return matmul(field, G, G.T)


def rref(field: Subfield, M) -> tuple[np.ndarray, list[int]]:
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2 or R.size == 0:
        return R.reshape(R.shape[0] if R.ndim else 0, -1), []
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, col])[0]
        if len(nz) == 0:
            continue
        pr = r + nz[0]
        if pr != r:
            R[[r, pr]] = R[[pr, r]]
        R[r] = field.mul[field.inv[R[r, col]], R[r]]
        for i in range(rows):
            if i != r and R[i, col]:
                f = field.neg[R[i, col]]
                R[i] = field.add[R[i], field.mul[f, R[r]]]
        pivots.append(col)
        r += 1
    return R, pivots


def rank(field: Subfield, M) -> int:
    M = np.asarray(M)
    if M.size == 0:
        return 0
    return len(rref(field, M)[1])


def nullspace(field: Subfield, M) -> np.ndarray:
    """Basis (rows) of {v : M v = 0}."""
    M = np.asarray(M, dtype=np.int64)
    cols = M.shape[1]
    R, pivots = rref(field, M)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for r, pc in enumerate(pivots):
            basis[t, pc] = field.neg[R[r, f]]
    return basis


def row_space_equal(field: Subfield, A, B) -> bool:
    A, B = np.asarray(A), np.asarray(B)
    ra = rank(field, A)
    return ra == rank(field, B) == rank(field, np.vstack([A, B]))


def in_row_space(field: Subfield, A, v) -> bool:
    A = np.asarray(A)
    return rank(field, A) == rank(field, np.vstack([A, np.asarray(v)[None, :]]))


def solve_combination(field: Subfield, vectors, target) -> np.ndarray | None:
    """Coefficients c with sum c_j vectors[j] = target, or None."""
    V = np.asarray(vectors, dtype=np.int64)
    t = np.asarray(target, dtype=np.int64)
    m = V.shape[0]
    if m == 0:
        return np.zeros(0, dtype=np.int64) if not t.any() else None
    aug = np.hstack([V.T, t[:, None]])
    R, pivots = rref(field, aug)
    if m in pivots:
        return None
    coef = np.zeros(m, dtype=np.int64)
    for r, pc in enumerate(pivots):
        coef[pc] = R[r, m]
    return coef


def normalize_columns(field: Subfield, cols) -> np.ndarray:
    """Scale each row vector so its first nonzero entry is one (zero rows stay zero)."""
    C = np.asarray(cols, dtype=np.int64)
    nz = C != 0
    first = np.argmax(nz, axis=1)
    lead = C[np.arange(len(C)), first]
    scale = field.inv[lead]
    return np.where(nz.any(axis=1)[:, None], field.mul[scale[:, None], C], 0)


def encode_vectors(q: int, V) -> np.ndarray:
    """Base-q integer key of each row."""
    V = np.asarray(V, dtype=np.int64)
    w = q ** np.arange(V.shape[1] - 1, -1, -1, dtype=np.int64)
    return V @ w
