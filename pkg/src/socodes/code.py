"""The trace code over F_{p^s2} built on the quadric defining set.

Codewords are ``c(a, b; c) = (Tr_{s2}(a x + b y) + c)_{(x, y) in D}``.
Matrices hold compact indices of F_{p^s2} (see :class:`socodes.ff.Subfield`).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from . import linalg
from .counts import DefiningSet, enumerate_defining_set
from .errors import NotInSubfield, RankDeficient
from .ff import FieldTower, Params, Subfield


@dataclass
class Code:
    field: Subfield
    G: np.ndarray
    provenance: str = "generic"
    params: Params | None = None
    defining_set: DefiningSet | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        self.G = np.atleast_2d(np.asarray(self.G, dtype=np.int64))
        if self.G.size == 0:
            self.G = self.G.reshape(0, self.G.shape[-1] if self.G.ndim == 2 else 0)

    @property
    def n(self) -> int:
        return self.G.shape[1]

    @property
    def k(self) -> int:
        return self.G.shape[0]

    @property
    def q(self) -> int:
        return self.field.order

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict() if self.params else None,
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "provenance": self.provenance,
            "modulus": list(self.field.tower.modulus),
            "field_level": self.field.level,
            "rows": [[int(v) for v in self.field.encode(row)] for row in self.G],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Code":
        from .ff import FieldTower

        prm = d.get("params")
        tower_params = Params(**prm) if prm else None
        if tower_params is not None:
            tower = FieldTower(tower_params, modulus=tuple(d["modulus"]))
        else:
            p = int(round(d["q"] ** (1 / d["field_level"])))
            tower = FieldTower(Params(p, d["field_level"], 1, 1), modulus=tuple(d["modulus"]))
        fld = tower.subfield(d["field_level"])
        rows = np.array([fld.index(np.asarray(r, dtype=np.int64)) for r in d["rows"]], dtype=np.int64)
        if rows.size == 0:
            rows = np.zeros((0, d["n"]), dtype=np.int64)
        return cls(fld, rows, d.get("provenance", "generic"), tower_params)

    def matrix_text(self) -> str:
        """G printed row by row, entries as subfield encodings."""
        return "\n".join(" ".join(str(int(v)) for v in self.field.encode(row)) for row in self.G)


@dataclass(frozen=True)
class Codeword:
    vector: np.ndarray
    weight: int


def codeword(tower: FieldTower, D: DefiningSet, a: int, b: int, c: int) -> Codeword:
    if not tower.in_subfield(c, tower.s2):
        raise NotInSubfield("c must lie in F_{p^s2}")
    sub = tower.subfield(tower.s2)
    lin = tower.add_arr(tower.mul_arr(a, D.xs), tower.mul_arr(b, D.ys))
    vals = tower.add_arr(tower.trace_arr(lin, tower.s2), c)
    vec = sub.index(vals)
    return Codeword(vec, int(np.count_nonzero(vec)))


def generator_rows(tower: FieldTower, D: DefiningSet) -> np.ndarray:
    """All-ones row, then Tr(x w^j), then Tr(y w^j) for j < s/s2."""
    sub = tower.subfield(tower.s2)
    m = tower.s // tower.s2
    rows = [np.ones(len(D), dtype=np.int64)]
    for coords in (D.xs, D.ys):
        for j in range(m):
            wj = tower.power(tower.generator, j)
            rows.append(sub.index(tower.trace_arr(tower.mul_arr(wj, coords), tower.s2)))
    return np.vstack(rows)


def build_code(tower: FieldTower, check_rank: bool = True) -> Code:
    tower.params.require_comparable()
    D = enumerate_defining_set(tower)
    sub = tower.subfield(tower.s2)
    G = generator_rows(tower, D)
    code = Code(sub, G, "defining-set", tower.params, D)
    if check_rank:
        r = dimension(code)
        if r != G.shape[0]:
            raise RankDeficient(
                f"{tower.params.astuple()}: generator rank {r} < {G.shape[0]} (n = {len(D)})"
            )
    return code


def dimension(code: Code) -> int:
    return linalg.rank(code.field, code.G) if code.k else 0
