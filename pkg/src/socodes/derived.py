"""Derived constructions: quantum code parameters and LCD codes."""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

import numpy as np

from . import linalg
from .analysis import classify, contains_all_ones, is_self_orthogonal, so_side_condition
from .code import Code, build_code
from .counts import code_length
from .errors import (
    ConditionsNotMet,
    DimensionGapTooSmall,
    NotSelfOrthogonal,
    OracleMismatch,
    WrongShape,
)
from .ff import FieldTower, Params, make_tower

MDS_CONJECTURE_NOTE = "optimal (conditional on the MDS conjecture)"


# --------------------------------------------------------------------------
# quantum codes


@dataclass(frozen=True)
class QuantumParams:
    n: int
    k: int
    d: int
    q: int
    pure: bool = True
    label: str = "other"
    note: str = ""

    def __post_init__(self):
        if 2 * (self.d - 1) > self.n - self.k:
            raise ValueError(f"{self} violates the quantum Singleton bound")

    @property
    def singleton_gap(self) -> int:
        return self.n - self.k - 2 * (self.d - 1)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]_{self.q}"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "q": self.q,
            "pure": self.pure,
            "label": self.label,
            "note": self.note,
        }


def quantum_label(n: int, k: int, d: int) -> str:
    gap = n - k - 2 * (d - 1)
    return {0: "MDS", 2: "AMDS"}.get(gap, "other")


def steane_distance(d1: int, d2: int, q: int) -> int:
    """Distance of the Steane-type code from C1 (distance d1) inside C2 (distance d2)."""
    return min(d1, ceil((q + 1) * d2 / q))


def quantum_params(params: Params) -> QuantumParams:
    """[[n, n - 2s/s2 - 2, 3]] from the self-orthogonal trace code's dual."""
    if not so_side_condition(params):
        raise ConditionsNotMet(f"{params.astuple()}: self-orthogonality conditions fail")
    p, s, s1, s2 = params.astuple()
    q = params.q
    n = code_length(params)
    k = n - 2 * s // s2 - 2
    # C1 = dual of C_D has distance 3; C2 = dual of the all-ones span has distance 2
    d = steane_distance(3, 2, q)
    label = quantum_label(n, k, d)
    rule = "MDS" if (s == s2 and s2 > 2 * s1) else "AMDS" if s == 2 * s2 else "other"
    if label != rule:
        raise OracleMismatch(f"{params.astuple()}: Singleton gap says {label}, parameter rule says {rule}")
    note = MDS_CONJECTURE_NOTE if label == "AMDS" and n > q * q + 1 else ""
    return QuantumParams(n, k, d, q, True, label, note)


def steane_chain_check(code: Code) -> bool:
    """Check dual(C) ⊆ C1 = dual(C) ⊆ C2 = dual(span 1) with a gap of at least 2.

    dual(C) contains its dual iff C is self-orthogonal; C1 ⊆ C2 iff the
    all-ones word lies in C; the gap (n - k) + 2 <= n - 1 needs k >= 3.
    """
    if not is_self_orthogonal(code):
        raise NotSelfOrthogonal("Gram matrix is nonzero")
    if not contains_all_ones(code):
        return False
    k = linalg.rank(code.field, code.G)
    if (code.n - k) + 2 > code.n - 1:
        raise DimensionGapTooSmall(f"dim C1 + 2 = {code.n - k + 2} > dim C2 = {code.n - 1}")
    return True


# --------------------------------------------------------------------------
# LCD codes


@dataclass
class LcdCode:
    code: Code
    parent: Params | None = None

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return self.code.k

    def to_dict(self) -> dict:
        d = self.code.to_dict()
        d["parent"] = self.parent.to_dict() if self.parent else None
        return d


def is_lcd(code: Code) -> bool:
    """LCD iff the Gram matrix G G^T is nonsingular."""
    if code.k == 0:
        return True
    return linalg.rank(code.field, linalg.gram(code.field, code.G)) == code.k


def _systematic(code: Code, G: np.ndarray, provenance: str) -> Code:
    eye = np.eye(code.k, dtype=np.int64)
    return Code(code.field, np.hstack([eye, G]), provenance, code.params)


def build_lcd(code: Code) -> LcdCode:
    """[I : G] for a self-orthogonal G; its Gram matrix is the identity."""
    if not is_self_orthogonal(code):
        raise NotSelfOrthogonal("parent code must be self-orthogonal")
    return LcdCode(_systematic(code, code.G, "lcd"), code.params)


def build_lcd_variant(tower: FieldTower | Params | tuple) -> LcdCode:
    """[I_5 : G'] with G' = [r1, r2, r3 + r1, r4, r5 + r1] for s = 2, s1 = s2 = 1."""
    if not isinstance(tower, FieldTower):
        tower = make_tower(tower)
    if (tower.s, tower.s1, tower.s2) != (2, 1, 1):
        raise WrongShape("variant needs (p, 2, 1, 1)")
    code = build_code(tower)
    f = code.field
    G = code.G.copy()
    G[2] = f.add[G[2], G[0]]
    G[4] = f.add[G[4], G[0]]
    return LcdCode(_systematic(code, G, "lcd-variant"), tower.params)


def lcd_distance_bound(p: int) -> int:
    """Lower bound p^2 (p - 1) + 2 on the variant's minimum distance."""
    return p * p * (p - 1) + 2


__all__ = [
    "MDS_CONJECTURE_NOTE",
    "QuantumParams",
    "quantum_label",
    "steane_distance",
    "quantum_params",
    "steane_chain_check",
    "LcdCode",
    "is_lcd",
    "build_lcd",
    "build_lcd_variant",
    "lcd_distance_bound",
    "classify",
]
