"""Structural checks: self-orthogonality, dual distance, labels, bounds, locality."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from . import kernels, linalg
from .code import Code
from .errors import BudgetExceeded, OracleMismatch
from .ff import Params
from .wdist import WeightDistribution

LOCALITY_BUDGET = 2300**3


# --------------------------------------------------------------------------
# self-orthogonality


def is_self_orthogonal(code: Code) -> bool:
    if code.k == 0:
        return True
    return not linalg.gram(code.field, code.G).any()


def contains_all_ones(code: Code) -> bool:
    return linalg.in_row_space(code.field, code.G, np.ones(code.n, dtype=np.int64))


def divisibility_implies_so(code: Code, wd: WeightDistribution) -> bool:
    """Whether the code is p-divisible and contains the all-ones word.

    When it is, the code must be self-orthogonal; a failing Gram check is
    raised as :class:`OracleMismatch`.
    """
    p = code.field.tower.p
    divisible = all(w % p == 0 for w in wd.weights)
    holds = divisible and contains_all_ones(code)
    if holds and not is_self_orthogonal(code):
        raise OracleMismatch("p-divisible code with all-ones word is not self-orthogonal")
    return holds


def so_side_condition(params: Params) -> bool:
    """Side condition under which the trace code is self-orthogonal."""
    params.require_comparable()
    s, s1, s2 = params.s, params.s1, params.s2
    if s1 % s2 == 0:
        return s >= 2 * s1
    if (s2 // s1) % 2:
        return 2 * s > s1 + s2
    return 2 * s > 2 * s1 + s2


# --------------------------------------------------------------------------
# dual distance by column dependencies


@dataclass(frozen=True)
class DualDistance:
    """Smallest number of linearly dependent columns, with a witness.

    ``d`` is None when no dependency of size <= ``bound`` exists.
    """

    d: int | None
    bound: int
    columns: tuple[int, ...] = ()
    coefficients: tuple[int, ...] = ()

    @property
    def above_bound(self) -> bool:
        return self.d is None

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "bound": self.bound,
            "columns": list(self.columns),
            "coefficients": list(self.coefficients),
        }


def _keys(q: int, V: np.ndarray) -> np.ndarray:
    if V.shape[1] == 0:
        return np.zeros(len(V), dtype=np.int64)
    if q ** V.shape[1] < 2**62:
        return linalg.encode_vectors(q, V)
    return np.array([hash(tuple(row)) for row in V.tolist()], dtype=np.int64)


def _project(field, C: np.ndarray, i: int) -> np.ndarray:
    """Columns other than ``i`` (rows of C) modulo g_i, pivot coordinate dropped."""
    g = C[i]
    r = int(np.nonzero(g)[0][0])
    h = field.mul[field.inv[g[r]], g]
    V = field.add[C, field.neg[field.mul[C[:, r][:, None], h[None, :]]]]
    return np.delete(V, r, axis=1)


def _find_dependent(field, C: np.ndarray, w: int, idx: np.ndarray) -> tuple[int, ...] | None:
    """Indices (into ``idx``) of w dependent columns, assuming none of size < w."""
    if len(C) < w:
        return None
    if w == 1:
        z = np.nonzero(~C.any(axis=1))[0]
        return (int(idx[z[0]]),) if len(z) else None
    if w == 2:
        N = linalg.normalize_columns(field, C)
        keys = _keys(field.order, N)
        _, first, counts = np.unique(keys, return_index=True, return_counts=True)
        dup = np.nonzero(counts > 1)[0]
        if not len(dup):
            return None
        key = keys[first[dup[0]]]
        a, b = np.nonzero(keys == key)[0][:2]
        return (int(idx[a]), int(idx[b]))
    for i in range(len(C) - w + 1):
        V = _project(field, C[i:], 0)[1:]
        found = _find_dependent(field, V, w - 1, idx[i + 1 :])
        if found is not None:
            return (int(idx[i]),) + found
    return None


def dual_distance_upto(code: Code, wmax: int = 4) -> DualDistance:
    """Smallest w <= wmax such that some w columns of G are dependent."""
    if wmax < 1:
        raise ValueError("wmax must be at least 1")
    C = np.ascontiguousarray(code.G.T)
    idx = np.arange(code.n)
    for w in range(1, wmax + 1):
        cols = _find_dependent(code.field, C, w, idx)
        if cols is not None:
            coef = linalg.nullspace(code.field, code.G[:, list(cols)])[0]
            return DualDistance(w, wmax, cols, tuple(int(c) for c in coef))
    return DualDistance(None, wmax)


def dependent_triples(code: Code, backend: str | None = None) -> int:
    """Unordered column triples spanning a plane (columns pairwise independent)."""
    return kernels.dependent_triples(code.G.T, code.field, backend=backend)


def weight3_dual_words(code: Code, backend: str | None = None) -> int:
    """A3 of the dual: each dependent triple carries q - 1 nonzero kernel vectors."""
    return (code.q - 1) * dependent_triples(code, backend)


# --------------------------------------------------------------------------
# labels and bounds


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    q: int

    @property
    def label(self) -> str:
        return classify(self.n, self.k, self.d)

    def __str__(self) -> str:
        return f"[{self.n},{self.k},{self.d}]_{self.q}"

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "d": self.d, "q": self.q, "label": self.label}


def classify(n: int, k: int, d: int) -> str:
    if d == n - k + 1:
        return "MDS"
    if d == n - k:
        return "AMDS"
    return "other"


def sphere_packing_max_d(n: int, k: int, q: int) -> int:
    """Largest d allowed by the sphere packing bound, capped by Singleton."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    room = q ** (n - k)
    vol, t = 0, 0
    while t <= n:
        vol += comb(n, t) * (q - 1) ** t
        if vol > room:
            break
        t += 1
    # radius t-1 fits, so d = 2(t-1)+1 and d = 2(t-1)+2 pass
    return min(2 * t, n - k + 1)


def almost_optimal(n: int, k: int, d: int, q: int) -> bool:
    return d == sphere_packing_max_d(n, k, q) - 1


# --------------------------------------------------------------------------
# locality


@dataclass
class LocalityCert:
    r: int
    repair: list[tuple[int, tuple[int, ...], tuple[int, ...]]] = dc_field(default_factory=list)

    def verify(self, code: Code) -> bool:
        f = code.field
        for i, J, coef in self.repair:
            if len(J) > self.r or i in J:
                return False
            acc = np.zeros(code.k, dtype=np.int64)
            for j, c in zip(J, coef):
                acc = f.add[acc, f.mul[c, code.G[:, j]]]
            if not np.array_equal(acc, code.G[:, i]):
                return False
        return sorted(i for i, _, _ in self.repair) == list(range(code.n))

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "repair": [{"coordinate": i, "set": list(J), "coefficients": list(c)} for i, J, c in self.repair],
        }


@dataclass(frozen=True)
class NoCert:
    r: int
    coordinate: int

    def to_dict(self) -> dict:
        return {"r": self.r, "uncoverable": self.coordinate}


def _repair_one(field, C: np.ndarray, i: int, r: int):
    """Smallest repair set for column i of C (rows are columns), or None."""
    n = len(C)
    g = C[i]
    if not g.any():
        return (), ()
    if r < 1:
        return None
    others = np.array([j for j in range(n) if j != i])
    # size 1: some g_j = c g_i with c != 0 means g_i = c^{-1} g_j
    N = linalg.normalize_columns(field, C)
    same = others[(N[others] == N[i]).all(axis=1) & C[others].any(axis=1)]
    if len(same):
        j = int(same[0])
        piv = int(np.nonzero(g)[0][0])
        return (j,), (int(field.mul[g[piv], field.inv[C[j, piv]]]),)
    for size in range(2, r + 1):
        if size > 2:
            raise NotImplementedError("locality search implemented for r <= 2")
        for j in others:
            if not C[j].any():
                continue
            # g_i in span(g_j, g_l) iff g_i and g_l agree modulo g_j (up to scale)
            P = _project(field, C, int(j))
            Pn = linalg.normalize_columns(field, P)
            if not P[i].any():
                continue
            hits = np.nonzero((Pn == Pn[i]).all(axis=1) & P.any(axis=1))[0]
            hits = hits[(hits != i) & (hits != j)]
            if len(hits):
                J = (int(min(j, hits[0])), int(max(j, hits[0])))
                coef = linalg.solve_combination(field, C[list(J)], g)
                if coef is not None:
                    return J, tuple(int(c) for c in coef)
    return None


def locality(code: Code, r: int, force: bool = False) -> LocalityCert | NoCert:
    """Certificate that every coordinate is a combination of at most r others."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if code.n**3 > LOCALITY_BUDGET and not force:
        raise BudgetExceeded(f"locality search over n = {code.n} exceeds budget; use force")
    C = np.ascontiguousarray(code.G.T)
    cert = LocalityCert(r)
    for i in range(code.n):
        found = _repair_one(code.field, C, i, r)
        if found is None:
            return NoCert(r, i)
        cert.repair.append((i, found[0], found[1]))
    return cert
