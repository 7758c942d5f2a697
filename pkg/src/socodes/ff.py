"""Arithmetic in F_{p^s} together with its subfields F_{p^s1} and F_{p^s2}.

Elements are plain integers in ``[0, p^s)``: the polynomial-basis coefficient
vector ``(c_0, ..., c_{s-1})`` is encoded as ``sum(c_i * p**i)``.  Subfields
live inside the big field and membership is Frobenius fixedness.

Scalar helpers (``add``, ``mul``, ``trace`` ...) take and return ints; the
``*_arr`` variants work on integer numpy arrays of encodings.
"""

from __future__ import annotations

import functools
import hashlib
import itertools
import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    EvenCharacteristic,
    IncompatibleLevels,
    NonDivisor,
    NonPrime,
    NotInSubfield,
    SOCodeError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Params:
    """The tuple (p, s, s1, s2): odd prime p, s1 | s and s2 | s."""

    p: int
    s: int
    s1: int
    s2: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrime(f"p={self.p} is not prime; odd prime required")
        if self.p == 2:
            raise EvenCharacteristic("p=2: odd prime required")
        if self.s < 1 or self.s1 < 1 or self.s2 < 1:
            raise NonDivisor("s, s1, s2 must be positive integers")
        if self.s % self.s1:
            raise NonDivisor(f"s1={self.s1} does not divide s={self.s}")
        if self.s % self.s2:
            raise NonDivisor(f"s2={self.s2} does not divide s={self.s}")

    @property
    def comparable(self) -> bool:
        return self.s1 % self.s2 == 0 or self.s2 % self.s1 == 0

    def require_comparable(self) -> None:
        if not self.comparable:
            raise IncompatibleLevels(
                f"need s2 | s1 or s1 | s2, got s1={self.s1}, s2={self.s2}"
            )

    @property
    def q(self) -> int:
        """Alphabet size p^s2 of the code."""
        return self.p**self.s2

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.p, self.s, self.s1, self.s2)

    def to_dict(self) -> dict:
        return {"p": self.p, "s": self.s, "s1": self.s1, "s2": self.s2}


def _mul_by_x(v: int, p: int, s: int, low: tuple[int, ...]) -> int:
    # v * x mod (x^s + sum low[i] x^i), on encodings
    top = v // p ** (s - 1)
    shifted = (v % p ** (s - 1)) * p
    if top == 0:
        return shifted
    out = 0
    for i in range(s):
        d = (shifted // p**i) % p
        out += ((d - top * low[i]) % p) * p**i
    return out


def _order_of_x(p: int, s: int, low: tuple[int, ...]) -> int:
    """Multiplicative order of x modulo the monic polynomial, or 0 if x^k never returns to 1."""
    q1 = p**s - 1
    v = 1
    for k in range(1, q1 + 1):
        v = _mul_by_x(v, p, s, low)
        if v == 1:
            return k
        if v == 0:
            return 0
    return 0


def find_primitive_modulus(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically smallest monic primitive polynomial of degree s over F_p.

    Coefficient tuples are compared constant term first.  Returned low-to-high,
    including the leading 1.
    """
    for low in itertools.product(range(p), repeat=s):
        if low[0] == 0:
            continue
        if _order_of_x(p, s, low) == p**s - 1:
            return tuple(low) + (1,)
    raise SOCodeError(f"no primitive polynomial of degree {s} over F_{p}")  # unreachable


class Subfield:
    """F_{p^level} viewed inside a tower, with dense arithmetic tables.

    Elements get compact indices 0..order-1 in increasing encoding order, so
    index 0 is zero and index 1 is one.  ``elements[i]`` is the big-field
    encoding of index i.
    """

    def __init__(self, tower: "FieldTower", level: int):
        self.tower = tower
        self.level = level
        self.p = tower.p
        self.order = tower.p**level
        self.elements = tower.subfield_elements(level)
        index = np.full(tower.order, -1, dtype=np.int64)
        index[self.elements] = np.arange(self.order)
        self._index = index
        el = self.elements
        self.add = index[tower.add_arr(el[:, None], el[None, :])]
        self.mul = index[tower.mul_arr(el[:, None], el[None, :])]
        self.neg = index[tower.neg_arr(el)]
        inv = np.zeros(self.order, dtype=np.int64)
        inv[1:] = index[tower.inv_arr(el[1:])]
        self.inv = inv
        self.sub = self.add[:, self.neg]

    def index(self, enc):
        """Compact index of a big-field encoding (array or int); raises if outside."""
        idx = self._index[enc]
        if np.any(idx < 0):
            raise NotInSubfield(f"element not in F_{{{self.p}^{self.level}}}")
        return int(idx) if np.ndim(idx) == 0 else idx

    def encode(self, idx):
        out = self.elements[idx]
        return int(out) if np.ndim(out) == 0 else out

    def __repr__(self):
        return f"Subfield(GF({self.p}^{self.level}))"


class FieldTower:
    """F_{p^s} with marked subfields, built from a primitive modulus.

    The generator is the residue class of the indeterminate, so log/antilog
    tables come straight from repeated multiplication by x.
    """

    def __init__(self, params: Params, modulus: tuple[int, ...] | None = None):
        self.params = params
        p, s = params.p, params.s
        self.p, self.s, self.s1, self.s2 = p, s, params.s1, params.s2
        self.order = p**s
        if modulus is None:
            modulus = find_primitive_modulus(p, s)
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise SOCodeError("modulus must be monic of degree s")
        low = modulus[:-1]
        if _order_of_x(p, s, low) != self.order - 1:
            raise SOCodeError(f"modulus {modulus} is not primitive over F_{p}")
        self.modulus = modulus
        self._low = low

        q1 = self.order - 1
        exp = np.empty(q1, dtype=np.int64)
        v = 1
        for k in range(q1):
            exp[k] = v
            v = _mul_by_x(v, p, s, low)
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(q1)
        self._exp = exp
        self._log = log
        self._pw = p ** np.arange(s, dtype=np.int64)
        allx = np.arange(self.order, dtype=np.int64)
        self._digits = (allx[:, None] // self._pw[None, :]) % p
        self._subfields: dict[int, Subfield] = {}
        self._trace_tables: dict[int, np.ndarray] = {}

    # -- basic facts ------------------------------------------------------

    @property
    def generator(self) -> int:
        return int(self._exp[1 % (self.order - 1)]) if self.order > 2 else 1

    @property
    def fingerprint(self) -> str:
        blob = json.dumps({"p": self.p, "s": self.s, "modulus": list(self.modulus)})
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        d = self.params.to_dict()
        d["modulus"] = list(self.modulus)
        return d

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def digits(self, x: int) -> tuple[int, ...]:
        return tuple(int(d) for d in self._digits[x])

    def from_digits(self, coeffs) -> int:
        return int(sum(int(c) % self.p * self.p**i for i, c in enumerate(coeffs)))

    def _check_level(self, level: int) -> None:
        if level < 1 or self.s % level:
            raise NonDivisor(f"level {level} does not divide s={self.s}")

    # -- vectorised arithmetic ------------------------------------------

    def add_arr(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return ((self._digits[x] + self._digits[y]) % self.p) @ self._pw

    def neg_arr(self, x):
        x = np.asarray(x, dtype=np.int64)
        return ((-self._digits[x]) % self.p) @ self._pw

    def sub_arr(self, x, y):
        return self.add_arr(x, self.neg_arr(y))

    def mul_arr(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        x, y = np.broadcast_arrays(x, y)
        lx, ly = self._log[x], self._log[y]
        out = self._exp[(lx + ly) % (self.order - 1)]
        return np.where((lx < 0) | (ly < 0), 0, out)

    def inv_arr(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[x]) % (self.order - 1)]

    def scal_arr(self, c: int, x):
        """Multiply by an integer in F_p (c reduced mod p)."""
        x = np.asarray(x, dtype=np.int64)
        return ((self._digits[x] * (c % self.p)) % self.p) @ self._pw

    def frobenius_arr(self, x, k: int = 1):
        """x -> x^(p^k)."""
        x = np.asarray(x, dtype=np.int64)
        lx = self._log[x]
        e = pow(self.p, k, self.order - 1)
        out = self._exp[(lx * e) % (self.order - 1)]
        return np.where(lx < 0, 0, out)

    def trace_arr(self, x, level: int):
        """Tr from F_{p^s} down to F_{p^level} (tabulated once per level)."""
        self._check_level(level)
        x = np.asarray(x, dtype=np.int64)
        table = self._trace_tables.get(level)
        if table is None:
            table = self._trace_sum(np.arange(self.order, dtype=np.int64), level)
            self._trace_tables[level] = table
        return table[x]

    def _trace_sum(self, x, level: int):
        acc = x.copy()
        for j in range(1, self.s // level):
            acc = self.add_arr(acc, self.frobenius_arr(x, level * j))
        return acc

    def quad_character_arr(self, x, level: int):
        """Quadratic character of F_{p^level} via discrete logs (no membership check)."""
        self._check_level(level)
        x = np.asarray(x, dtype=np.int64)
        step = (self.order - 1) // (self.p**level - 1)
        lx = self._log[x]
        out = np.where((lx // step) % 2 == 0, 1, -1)
        return np.where(lx < 0, 0, out)

    # -- scalar arithmetic ------------------------------------------------

    def add(self, x: int, y: int) -> int:
        return int(self.add_arr(x, y))

    def neg(self, x: int) -> int:
        return int(self.neg_arr(x))

    def sub(self, x: int, y: int) -> int:
        return int(self.sub_arr(x, y))

    def mul(self, x: int, y: int) -> int:
        return int(self.mul_arr(x, y))

    def inv(self, x: int) -> int:
        return int(self.inv_arr(x))

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def power(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0
        return int(self._exp[(int(self._log[x]) * e) % (self.order - 1)])

    def frobenius(self, x: int, k: int = 1) -> int:
        return int(self.frobenius_arr(x, k))

    def in_subfield(self, x: int, level: int) -> bool:
        self._check_level(level)
        return self.frobenius(x, level) == x

    def trace(self, x: int, level: int) -> int:
        return int(self.trace_arr(x, level))

    # -- table-free slow path (independent check of the log tables) -----

    def mul_poly(self, x: int, y: int) -> int:
        """Schoolbook polynomial product reduced by the modulus."""
        p, s = self.p, self.s
        a, b = self.digits(x), self.digits(y)
        prod = [0] * (2 * s - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        for d in range(2 * s - 2, s - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(s):
                    prod[d - s + i] -= c * self._low[i]
            prod[d] = 0
        return self.from_digits(prod[:s])

    def pow_poly(self, x: int, e: int) -> int:
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul_poly(result, base)
            base = self.mul_poly(base, base)
            e >>= 1
        return result

    def trace_poly(self, x: int, level: int) -> int:
        """Trace by summing explicitly exponentiated conjugates."""
        self._check_level(level)
        acc = 0
        for j in range(self.s // level):
            acc = self.add(acc, self.pow_poly(x, self.p ** (level * j)))
        return acc

    # -- characters and subfields -----------------------------------------

    def quad_character(self, x: int, level: int, method: str = "pow") -> int:
        """Quadratic character of F_{p^level} at x, which must lie in that subfield.

        ``method="pow"`` evaluates x^((p^level - 1)/2) by polynomial
        exponentiation; ``method="table"`` reads the parity of the discrete log.
        """
        x = int(x)
        if not self.in_subfield(x, level):
            raise NotInSubfield(f"{x} is not in F_{{{self.p}^{level}}}")
        if x == 0:
            return 0
        if method == "table":
            return int(self.quad_character_arr(x, level))
        r = self.pow_poly(x, (self.p**level - 1) // 2)
        if r == 1:
            return 1
        if r == self.p - 1:
            return -1
        raise SOCodeError(f"Euler criterion gave {r}")  # cannot happen in a field

    def subfield_elements(self, level: int) -> np.ndarray:
        self._check_level(level)
        allx = self.elements()
        return allx[self.frobenius_arr(allx, level) == allx]

    def subfield(self, level: int) -> Subfield:
        self._check_level(level)
        if level not in self._subfields:
            self._subfields[level] = Subfield(self, level)
        return self._subfields[level]

    def __repr__(self):
        return f"FieldTower(p={self.p}, s={self.s}, s1={self.s1}, s2={self.s2}, modulus={self.modulus})"


@functools.lru_cache(maxsize=64)
def _cached_tower(params: Params) -> FieldTower:
    return FieldTower(params)


def make_tower(params: Params | tuple) -> FieldTower:
    """Deterministic tower for ``params`` (cached; towers are immutable)."""
    if not isinstance(params, Params):
        params = Params(*params)
    return _cached_tower(params)


def trace(tower: FieldTower, x: int, target: int) -> int:
    return tower.trace(x, target)


def quad_character(tower: FieldTower, x: int, level: int) -> int:
    return tower.quad_character(x, level)


def subfield_elements(tower: FieldTower, level: int) -> list[int]:
    return [int(v) for v in tower.subfield_elements(level)]


def prime_field(p: int) -> Subfield:
    """F_p as a Subfield, for codes not tied to a particular tower."""
    return make_tower(Params(p, 1, 1, 1)).subfield(1)
