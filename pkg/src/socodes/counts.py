"""Closed-form point counts behind the code's length and weights.

Each closed form has an enumeration counterpart (``*_enum``) that only uses
field arithmetic, so tests can compare the two exactly.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .chars import gauss_product_eval, gauss_square, gauss_symbol, signed
from .errors import IncompatibleLevels, NonIntegral, NotInSubfield, QuotientNotOdd, ZeroMu
from .ff import FieldTower, Params


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise NonIntegral(f"{num} / {den} is not an integer")
    return q


def code_length(params: Params) -> int:
    """n = (p^2s + (p^s1 - 1) G^2) / p^s1."""
    p, s, s1 = params.p, params.s, params.s1
    return exact_div(p ** (2 * s) + (p**s1 - 1) * gauss_square(p, s), p**s1)


@dataclass(frozen=True)
class DefiningSet:
    """Pairs (x, y) with Tr_{s1}(x^2 + y^2) = 0, lexicographic with (0, 0) last."""

    tower: FieldTower
    xs: np.ndarray
    ys: np.ndarray

    def __len__(self) -> int:
        return len(self.xs)

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(x), int(y)) for x, y in zip(self.xs, self.ys)]

    def to_list(self) -> list[list[int]]:
        return [[x, y] for x, y in self.pairs()]


def enumerate_defining_set(tower: FieldTower) -> DefiningSet:
    Q = tower.order
    grid = np.arange(Q * Q, dtype=np.int64)
    x, y = grid // Q, grid % Q
    tr = tower.trace_arr(tower.add_arr(tower.mul_arr(x, x), tower.mul_arr(y, y)), tower.s1)
    keep = (tr == 0) & (grid != 0)
    xs = np.append(x[keep], 0)
    ys = np.append(y[keep], 0)
    return DefiningSet(tower, xs, ys)


# --------------------------------------------------------------------------
# point counts


def _eta(tower: FieldTower, x: int, level: int) -> int:
    return tower.quad_character(x, level, method="table")


def count_N_c_rho(tower: FieldTower, mu: int, rho: int) -> int:
    """#{c in F_{p^s2}^* : Tr_{s1}^{s2}(c^2 / mu) = rho}, closed form (s2/s1 odd)."""
    p, s1, s2 = tower.p, tower.s1, tower.s2
    if s2 % s1 or (s2 // s1) % 2 == 0:
        raise QuotientNotOdd(f"s2/s1 must be an odd integer, got s1={s1}, s2={s2}")
    if mu == 0:
        raise ZeroMu("mu must be nonzero")
    if not tower.in_subfield(mu, s2):
        raise NotInSubfield("mu must lie in F_{p^s2}")
    if not tower.in_subfield(rho, s1):
        raise NotInSubfield("rho must lie in F_{p^s1}")
    if rho == 0:
        return p ** (s2 - s1) - 1
    sign = _eta(tower, mu, s2) * _eta(tower, tower.neg(rho), s1)
    num = p**s2 + gauss_product_eval([signed(sign, gauss_symbol(p, s1)), gauss_symbol(p, s2)])
    return exact_div(num, p**s1)


def _relative_trace_arr(tower: FieldTower, x, lo: int, hi: int):
    """Tr_{lo}^{hi} for elements of F_{p^hi}."""
    acc = np.asarray(x, dtype=np.int64).copy()
    for j in range(1, hi // lo):
        acc = tower.add_arr(acc, tower.frobenius_arr(x, lo * j))
    return acc


def count_N_c_rho_enum(tower: FieldTower, mu: int, rho: int) -> int:
    s1, s2 = tower.s1, tower.s2
    c = tower.subfield_elements(s2)[1:]
    vals = tower.mul_arr(tower.mul_arr(c, c), tower.inv(mu))
    return int(np.count_nonzero(_relative_trace_arr(tower, vals, s1, s2) == rho))


@dataclass(frozen=True)
class GammaTheta:
    gamma_s1: int
    gamma_s2: int
    theta: int | None


def gamma_theta(tower: FieldTower, a: int, b: int, c: int) -> GammaTheta:
    """Gamma(si) = Tr_{si}(a^2 + b^2); Theta = Tr_{s1}^{s2}(c^2 / Gamma(s2)) when s1 | s2."""
    s1, s2 = tower.s1, tower.s2
    sq = tower.add(tower.mul(a, a), tower.mul(b, b))
    g1 = tower.trace(sq, s1)
    g2 = tower.trace(sq, s2)
    theta = None
    if g2 != 0 and s2 % s1 == 0:
        theta = int(_relative_trace_arr(tower, tower.div(tower.mul(c, c), g2), s1, s2))
    return GammaTheta(g1, g2, theta)


def count_N_ab(tower: FieldTower, a: int, b: int, c: int) -> int:
    """#{(x, y) in D : Tr_{s2}(a x + b y) + c = 0}, by case analysis on Gamma and Theta."""
    params = tower.params
    p, s, s1, s2 = params.astuple()
    if not params.comparable:
        raise IncompatibleLevels(f"need s2 | s1 or s1 | s2, got s1={s1}, s2={s2}")
    if not tower.in_subfield(c, s2):
        raise NotInSubfield("c must lie in F_{p^s2}")
    G2 = gauss_square(p, s)
    base = p ** (2 * s - s1 - s2)
    head = exact_div((p**s1 - 1) * G2, p**s1)

    if a == 0 and b == 0:
        return base * p**s2 + head if c == 0 else 0

    gt = gamma_theta(tower, a, b, c)
    if s1 % s2 == 0:
        if gt.gamma_s1 == 0:
            return base + head if c == 0 else base
        if c == 0:
            return exact_div(p ** (2 * s) + (p**s1 - p**s2) * G2, p ** (s1 + s2))
        return base + exact_div(G2, p**s2)

    odd = (s2 // s1) % 2 == 1
    if gt.gamma_s2 == 0:
        return base + head if c == 0 else base
    eta2 = _eta(tower, tower.neg(gt.gamma_s2), s2)
    g = gauss_symbol(p, s)
    g1, g2 = gauss_symbol(p, s1), gauss_symbol(p, s2)
    if odd:
        if c == 0 or gt.theta == 0:
            return base
        sign = eta2 * _eta(tower, gt.theta, s1)
        term = gauss_product_eval([signed(sign, g1), g2, g, g])
        return exact_div(p ** (2 * s) + term, p ** (s1 + s2))
    if c == 0 or gt.theta == 0:
        term = (p**s1 - 1) * gauss_product_eval([signed(eta2, g2), g, g])
        return exact_div(p ** (2 * s) + term, p ** (s1 + s2))
    term = gauss_product_eval([signed(eta2, g2), g, g])
    return exact_div(p ** (2 * s) - term, p ** (s1 + s2))


def count_N_ab_enum(tower: FieldTower, a: int, b: int, c: int) -> int:
    """Brute force over all (x, y) in F_{p^s}^2."""
    return int(count_N_ab_enum_all_c(tower, a, b)[tower.subfield(tower.s2).index(c)])


@functools.lru_cache(maxsize=8)
def _quadric_points(tower: FieldTower) -> tuple[np.ndarray, np.ndarray]:
    """All (x, y) in F_{p^s}^2 with Tr_{s1}(x^2 + y^2) = 0, found by scanning the full grid."""
    Q = tower.order
    grid = np.arange(Q * Q, dtype=np.int64)
    x, y = grid // Q, grid % Q
    on_quadric = tower.trace_arr(tower.add_arr(tower.mul_arr(x, x), tower.mul_arr(y, y)), tower.s1) == 0
    return x[on_quadric], y[on_quadric]


def count_N_ab_enum_all_c(tower: FieldTower, a: int, b: int) -> np.ndarray:
    """Counts for every c in F_{p^s2} at once, indexed by compact subfield index.

    The quadric is found by scanning the full grid (cached per tower); the
    count for c is the number of its points with Tr_{s2}(a x + b y) = -c.
    """
    sub = tower.subfield(tower.s2)
    x, y = _quadric_points(tower)
    lin = tower.trace_arr(tower.add_arr(tower.mul_arr(a, x), tower.mul_arr(b, y)), tower.s2)
    counts = np.bincount(sub.index(lin), minlength=sub.order)
    # value v is hit by c = -v
    return counts[sub.neg]
