"""Quadratic Gauss sums, exactly.

Production formulas only ever need squares and products of quadratic Gauss
sums, which are signed powers of p.  ``GaussSymbol`` carries them as
``i^e * p^(m/2)``.  ``CyclotomicInt`` is an exact element of Z[zeta_p] used to
check the symbolic values and character sums by direct summation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EvenCharacteristic, NonIntegral, OracleMismatch, ZeroLeadingCoefficient
from .ff import FieldTower, is_prime


@dataclass(frozen=True)
class GaussSymbol:
    """The value ``i**i_exp * p**(halfpow/2)``."""

    i_exp: int
    halfpow: int
    p: int

    def __mul__(self, other: "GaussSymbol") -> "GaussSymbol":
        if other.p != self.p:
            raise ValueError("Gauss symbols over different primes")
        return GaussSymbol((self.i_exp + other.i_exp) % 4, self.halfpow + other.halfpow, self.p)

    def neg(self) -> "GaussSymbol":
        return GaussSymbol((self.i_exp + 2) % 4, self.halfpow, self.p)

    @property
    def is_integral(self) -> bool:
        return self.halfpow % 2 == 0 and self.i_exp % 2 == 0

    def evaluate(self) -> int:
        if not self.is_integral:
            raise NonIntegral(f"{self} is not a rational integer")
        sign = -1 if self.i_exp == 2 else 1
        return sign * self.p ** (self.halfpow // 2)

    def to_dict(self) -> dict:
        return {"i_exponent": self.i_exp, "halfpow": self.halfpow, "p": self.p}


def gauss_symbol(p: int, level: int) -> GaussSymbol:
    """Quadratic Gauss sum of F_{p^level} w.r.t. the canonical additive character.

    (-1)^(level-1) * i^(((p-1)/2)^2 * level) * sqrt(p^level)
    """
    if p == 2:
        raise EvenCharacteristic("quadratic Gauss sums need odd p")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if level < 1:
        raise ValueError("level must be positive")
    i_exp = (2 * (level - 1) + ((p - 1) // 2) ** 2 * level) % 4
    return GaussSymbol(i_exp, level, p)


def gauss_square(p: int, level: int) -> int:
    g = gauss_symbol(p, level)
    return (g * g).evaluate()


def gauss_product_eval(symbols) -> int:
    symbols = list(symbols)
    if not symbols:
        return 1
    acc = symbols[0]
    for g in symbols[1:]:
        acc = acc * g
    return acc.evaluate()


def signed(sign: int, g: GaussSymbol) -> GaussSymbol:
    """Multiply a symbol by +-1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +-1")
    return g if sign == 1 else g.neg()


# --------------------------------------------------------------------------
# exact cyclotomic integers


def _fold(vec, p: int) -> tuple[int, ...]:
    """Reduce a length-p coefficient vector using 1 + zeta + ... + zeta^(p-1) = 0."""
    top = int(vec[p - 1])
    return tuple(int(vec[j]) - top for j in range(p - 1))


class CyclotomicInt:
    """sum c_j zeta_p^j in the basis 1, zeta, ..., zeta^(p-2)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) == p:
            coeffs = _fold(coeffs, p)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} or {p} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def from_int(cls, p: int, n: int) -> "CyclotomicInt":
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def zeta(cls, p: int, j: int = 1) -> "CyclotomicInt":
        v = [0] * p
        v[j % p] = 1
        return cls(p, v)

    @classmethod
    def from_exponent_counts(cls, p: int, counts) -> "CyclotomicInt":
        """sum_j counts[j] * zeta^j for a length-p array of (signed) counts."""
        return cls(p, list(counts))

    def _full(self) -> list[int]:
        return list(self.coeffs) + [0]

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        if not isinstance(other, CyclotomicInt):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInt.from_int(self.p, other)
        return CyclotomicInt(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInt(self.p, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        p = self.p
        if isinstance(other, int):
            return CyclotomicInt(p, [a * other for a in self.coeffs])
        if other.p != p:
            raise ValueError("different primes")
        a, b = self._full(), other._full()
        bound = max(map(abs, a)) * max(map(abs, b)) * p
        if bound < 2**62:
            conv = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            conv = [int(c) for c in conv]
        else:
            conv = [0] * (2 * p - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        conv[i + j] += ai * bj
        full = [0] * p
        for k, c in enumerate(conv):
            full[k % p] += c
        return CyclotomicInt(p, full)

    __rmul__ = __mul__

    def shift(self, t: int) -> "CyclotomicInt":
        """Multiply by zeta^t."""
        full = self._full()
        p = self.p
        return CyclotomicInt(p, [full[(j - t) % p] for j in range(p)])

    def conjugate(self, a: int) -> "CyclotomicInt":
        """Galois automorphism zeta -> zeta^a."""
        p = self.p
        if a % p == 0:
            raise ValueError("a must be a unit mod p")
        full = [0] * p
        for j, c in enumerate(self._full()):
            full[(a * j) % p] += c
        return CyclotomicInt(p, full)

    def norm(self) -> int:
        acc = CyclotomicInt.from_int(self.p, 1)
        for a in range(1, self.p):
            acc = acc * self.conjugate(a)
        if any(acc.coeffs[1:]):
            raise OracleMismatch("norm is not rational")
        return acc.coeffs[0]

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi / self.p)
        return complex(sum(c * z**j for j, c in enumerate(self.coeffs)))

    def to_dict(self) -> dict:
        return {"p": self.p, "coefficients": list(self.coeffs)}

    def __repr__(self):
        return f"CyclotomicInt(p={self.p}, {list(self.coeffs)})"


def gauss_sum_direct(tower: FieldTower) -> CyclotomicInt:
    """sum over c != 0 of eta(c) zeta^Tr(c), summed over the whole field."""
    p = tower.p
    allx = tower.elements()[1:]
    eta = tower.quad_character_arr(allx, tower.s)
    tr = tower.trace_arr(allx, 1)
    counts = np.bincount(tr, weights=eta, minlength=p).astype(np.int64)
    return CyclotomicInt.from_exponent_counts(p, counts)


def gauss_sum_cyclotomic(p: int, level: int) -> CyclotomicInt:
    """Quadratic Gauss sum of F_{p^level} from the prime-field one.

    Uses g_level = (-1)^(level-1) g_1^level, with g_1 built from Legendre
    symbols of F_p, so no extension-field arithmetic is involved.
    """
    counts = [0] * p
    for c in range(1, p):
        counts[c] = 1 if pow(c, (p - 1) // 2, p) == 1 else -1
    g1 = CyclotomicInt(p, counts)
    acc = CyclotomicInt.from_int(p, 1)
    for _ in range(level):
        acc = acc * g1
    return acc if level % 2 == 1 else -acc


def char_sum_quadratic_direct(tower: FieldTower, h2: int, h1: int, h0: int) -> CyclotomicInt:
    """sum over c in F_q of zeta^Tr(h2 c^2 + h1 c + h0), term by term."""
    c = tower.elements()
    vals = tower.add_arr(tower.add_arr(tower.mul_arr(h2, tower.mul_arr(c, c)), tower.mul_arr(h1, c)), h0)
    tr = tower.trace_arr(vals, 1)
    return CyclotomicInt.from_exponent_counts(tower.p, np.bincount(tr, minlength=tower.p))


def char_sum_quadratic_closed(tower: FieldTower, h2: int, h1: int, h0: int) -> CyclotomicInt:
    """chi(h0 - h1^2 / (4 h2)) * eta(h2) * G."""
    if h2 == 0:
        raise ZeroLeadingCoefficient("h2 must be nonzero")
    four_h2 = tower.scal_arr(4, h2)
    shift_arg = tower.sub(h0, tower.div(tower.mul(h1, h1), int(four_h2)))
    t = tower.trace(shift_arg, 1)
    eta = tower.quad_character(h2, tower.s, method="table")
    return gauss_sum_cyclotomic(tower.p, tower.s).shift(t) * eta


def char_sum_quadratic(tower: FieldTower, h2: int, h1: int, h0: int) -> CyclotomicInt:
    """Quadratic character sum, computed directly and by the closed form; they must agree."""
    if h2 == 0:
        raise ZeroLeadingCoefficient("h2 must be nonzero")
    direct = char_sum_quadratic_direct(tower, h2, h1, h0)
    closed = char_sum_quadratic_closed(tower, h2, h1, h0)
    if direct != closed:
        raise OracleMismatch(f"direct {direct} != closed {closed}")
    return direct


def char_sum_quadratic_table(tower: FieldTower, h2: int, h1: int | None = None):
    """Direct and closed-form sums for one h2, every h0 and one or every h1.

    Returns two integer arrays holding reduced coefficient vectors, of shape
    (order, p-1) indexed by h0 when ``h1`` is given, else (order, order, p-1)
    indexed by (h1, h0).  The direct side evaluates Tr(h(c)) for every
    (h1, h0, c) triple.
    """
    if h2 == 0:
        raise ZeroLeadingCoefficient("h2 must be nonzero")
    p, q = tower.p, tower.order
    c = tower.elements()
    h1s = tower.elements() if h1 is None else np.array([h1], dtype=np.int64)
    h0 = tower.elements()
    quad = tower.mul_arr(h2, tower.mul_arr(c, c))
    base = tower.add_arr(quad[None, :], tower.mul_arr(h1s[:, None], c[None, :]))  # (m, q)
    vals = tower.add_arr(h0[None, :, None], base[:, None, :])  # (m, q, q)
    tr = tower.trace_arr(vals, 1)
    rows = np.arange(len(h1s) * q).reshape(len(h1s), q, 1)
    counts = np.bincount((rows * p + tr).ravel(), minlength=len(h1s) * q * p).reshape(len(h1s), q, p)
    direct = counts[..., : p - 1] - counts[..., p - 1 : p]

    g = gauss_sum_cyclotomic(p, tower.s)
    eta = tower.quad_character(h2, tower.s, method="table")
    shifted = eta * np.array([g.shift(t).coeffs for t in range(p)], dtype=np.int64)
    inv4h2 = tower.inv(int(tower.scal_arr(4, h2)))
    const = tower.mul_arr(tower.mul_arr(h1s, h1s), inv4h2)  # h1^2 / (4 h2)
    t_vec = tower.trace_arr(tower.sub_arr(h0[None, :], const[:, None]), 1)
    closed = shifted[t_vec]
    if h1 is not None:
        return direct[0], closed[0]
    return direct, closed
