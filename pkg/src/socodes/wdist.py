"""Weight distributions: closed-form tables, exhaustive enumeration, Pless moments."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .chars import gauss_product_eval, gauss_square, gauss_symbol, signed
from .code import Code
from .counts import code_length
from .errors import BudgetExceeded, DegenerateParameters, Inconsistent, NonIntegralEntry, ZeroCode
from .ff import Params, make_tower

DEFAULT_BUDGET = 10**8


@dataclass
class WeightDistribution:
    weights: dict[int, int]
    n: int
    k: int
    q: int

    def __post_init__(self):
        self.weights = {int(w): int(c) for w, c in sorted(self.weights.items()) if c}

    @property
    def total(self) -> int:
        return sum(self.weights.values())

    def check(self) -> None:
        if self.total != self.q**self.k:
            raise Inconsistent(f"counts sum to {self.total}, expected {self.q}^{self.k}")
        if self.weights.get(0) != 1:
            raise Inconsistent("weight 0 must occur exactly once")
        if max(self.weights) > self.n or min(self.weights) < 0:
            raise Inconsistent("weight outside [0, n]")

    def enumerator(self) -> str:
        return " + ".join(f"{c}x^{w}" if w else str(c) for w, c in self.weights.items())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "weights": {str(w): str(c) for w, c in self.weights.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "WeightDistribution":
        return cls({int(w): int(c) for w, c in d["weights"].items()}, int(d["n"]), int(d["k"]), int(d["q"]))

    @classmethod
    def from_histogram(cls, hist, n: int, k: int, q: int) -> "WeightDistribution":
        return cls({w: int(c) for w, c in enumerate(hist) if c}, n, k, q)

    def __eq__(self, other):
        if not isinstance(other, WeightDistribution):
            return NotImplemented
        return (self.weights, self.n, self.k, self.q) == (other.weights, other.n, other.k, other.q)


# --------------------------------------------------------------------------
# closed forms


def _div(num: int, den: int) -> int:
    qt, r = divmod(num, den)
    if r:
        raise NonIntegralEntry(f"table entry {num}/{den} is not an integer")
    return qt


def table_case(params: Params) -> int:
    """1 if s2 | s1, 2 if s2/s1 is odd, 3 if s2/s1 is even."""
    params.require_comparable()
    if params.s1 % params.s2 == 0:
        return 1
    return 2 if (params.s2 // params.s1) % 2 else 3


def closed_rows(params: Params) -> list[tuple[int, int]]:
    """(weight, frequency) rows before merging, zero row included."""
    p, s, s1, s2 = params.astuple()
    case = table_case(params)
    G2 = gauss_square(p, s)
    P2s, P1, P2 = p ** (2 * s), p**s1, p**s2
    n = code_length(params)
    w_base = _div(P2s * (P2 - 1), P1 * P2)
    w_shift = _div((P1 - 1) * G2, P1)
    rows = [(0, 1), (n, P2 - 1)]

    if case == 1:
        rows += [
            (w_base, n - 1),
            (w_base + w_shift, (P2 - 1) * (n - 1)),
            (w_base + _div((P1 * P2 - P1) * G2, P1 * P2), _div((P1 - 1) * (P2s - G2), P1)),
            (w_base + _div((P1 * P2 - P1 - P2) * G2, P1 * P2), _div((P2 - 1) * (P1 - 1) * (P2s - G2), P1)),
        ]
        return rows

    m = _div(P2s + (P2 - 1) * G2, P2)  # |{(a, b) : Tr_{s2}(a^2 + b^2) = 0}|
    g, g1, g2 = gauss_symbol(p, s), gauss_symbol(p, s1), gauss_symbol(p, s2)
    tower = make_tower(params)
    eta_m1 = tower.quad_character(tower.neg(1), s2, method="table")  # eta''(-1)

    if case == 2:
        eta1_m1 = tower.quad_character(tower.neg(1), s1, method="table")  # eta'(-1)
        gg = gauss_product_eval([signed(eta_m1, g1), g2, g, g])
        g1g2 = gauss_product_eval([signed(eta1_m1, g1), g2])
        # p^{s2-s1}(p^{2s}-1) + (p^{s2} - p^{s2-s1} - 1)(m - 1)
        f3 = _div(P2 * (P2s - 1), P1) + (P2 - _div(P2, P1) - 1) * (m - 1)
        half = (P1 - 1) // 2
        rows += [
            (w_base, m - 1),
            (w_base + w_shift, f3),
            (n - _div(P2s + gg, P1 * P2), _div(half * (P2s - m) * (P2 + g1g2), P1)),
            (n - _div(P2s - gg, P1 * P2), _div(half * (P2s - m) * (P2 - g1g2), P1)),
        ]
        return rows

    g2g = gauss_product_eval([signed(eta_m1, g2), g, g])
    G2pp = _gauss_value(p, s2)
    den = 2 * P1 * P2
    common = (P2 - 1) * (P2s - G2)
    rows += [
        (w_base, m - 1),
        (w_base + w_shift, (P2 - 1) * (m - 1)),
        (n - _div(P2s + (P1 - 1) * g2g, P1 * P2), _div(common * (P2 + (P1 - 1) * G2pp), den)),
        (n - _div(P2s - (P1 - 1) * g2g, P1 * P2), _div(common * (P2 - (P1 - 1) * G2pp), den)),
        (n - _div(P2s - g2g, P1 * P2), _div((P1 - 1) * common * (P2 - G2pp), den)),
        (n - _div(P2s + g2g, P1 * P2), _div((P1 - 1) * common * (P2 + G2pp), den)),
    ]
    return rows


def _gauss_value(p: int, level: int) -> int:
    """G itself as an integer; rational only for even levels."""
    g = gauss_symbol(p, level)
    if not g.is_integral:
        raise NonIntegralEntry(f"Gauss sum of F_{p}^{level} is irrational")
    return g.evaluate()


def wdist_closed(params: Params, strict: bool = True) -> WeightDistribution:
    """Evaluate the closed-form table for ``params``.

    With ``strict=False`` the result is the multiset of weights over all q^k
    messages, which differs from the code's distribution only when the
    generator is rank deficient (then weight 0 occurs more than once).
    """
    rows = closed_rows(params)
    n = code_length(params)
    k = 2 * params.s // params.s2 + 1
    merged: dict[int, int] = {}
    for w, f in rows:
        if f < 0 or (f and not 0 <= w <= n):
            raise DegenerateParameters(
                f"{params.astuple()}: row (w={w}, A={f}) impossible for n={n}"
            )
        if f:
            merged[w] = merged.get(w, 0) + f
    wd = WeightDistribution(merged, n, k, params.q)
    if wd.total != params.q**k:
        raise DegenerateParameters(f"{params.astuple()}: frequencies sum to {wd.total}, not q^k")
    if strict and wd.weights.get(0) != 1:
        raise DegenerateParameters(
            f"{params.astuple()}: n = {n} and {wd.weights[0]} messages give the zero word; "
            f"the code does not have dimension {k}"
        )
    return wd


# --------------------------------------------------------------------------
# enumeration


def enumeration_cost(code: Code) -> int:
    """Nominal coordinate evaluations q^k * n."""
    return code.q**code.k * code.n


def _shard(args):
    G, field_params, level, modulus, firsts, backend = args
    from .ff import FieldTower

    tower = FieldTower(field_params, modulus=modulus)
    return kernels.weight_histogram(G, tower.subfield(level), firsts, backend=backend)


def resolve_workers(workers: int | None) -> int:
    if workers is None:
        workers = int(os.environ.get("SOC_WORKERS", "1") or 1)
    return max(1, workers)


def wdist_enumerate(
    code: Code,
    force: bool = False,
    budget: int = DEFAULT_BUDGET,
    workers: int | None = None,
    backend: str | None = None,
) -> WeightDistribution:
    """Exact histogram over all q^k messages m, codeword m @ G."""
    cost = enumeration_cost(code)
    if cost > budget and not force:
        raise BudgetExceeded(f"q^k * n = {cost} exceeds budget {budget}; use force")
    workers = resolve_workers(workers)
    q = code.q
    if workers > 1 and code.k >= 2:
        tower = code.field.tower
        shards = [list(range(w, q, workers)) for w in range(workers)]
        args = [(code.G, tower.params, code.field.level, tower.modulus, s, backend) for s in shards if s]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            hist = sum(pool.map(_shard, args))
    else:
        hist = kernels.weight_histogram(code.G, code.field, backend=backend)
    return WeightDistribution.from_histogram(hist, code.n, code.k, q)


def min_distance(wd: WeightDistribution) -> int:
    nonzero = [w for w in wd.weights if w > 0]
    if not nonzero:
        raise ZeroCode("only the zero word")
    return min(nonzero)


# --------------------------------------------------------------------------
# Pless power moments


@dataclass(frozen=True)
class DualCounts:
    A1: int
    A2: int
    A3: int


def power_moments(wd: WeightDistribution) -> tuple[int, int, int, int]:
    return tuple(sum(w**r * c for w, c in wd.weights.items()) for r in range(4))  # type: ignore[return-value]


def pless_dual_counts(wd: WeightDistribution) -> DualCounts:
    """Solve the first four power moments for A1, A2, A3 of the dual code."""
    wd.check()
    n, k, q = wd.n, wd.k, wd.q
    _, m1, m2, m3 = power_moments(wd)
    qk = Fraction(q) ** k
    # m1 = q^{k-1} (qn - n - A1)
    A1 = q * n - n - Fraction(m1) * q / qk
    # m2 = q^{k-2} [(q-1) n (qn - n + 1) - (2qn - q - 2n + 2) A1 + 2 A2]
    A2 = (Fraction(m2) * q**2 / qk - (q - 1) * n * (q * n - n + 1) + (2 * q * n - q - 2 * n + 2) * A1) / 2
    # m3 = q^{k-3} [(q-1) n (q^2n^2 - 2qn^2 + 3qn - q + n^2 - 3n + 2)
    #      - (3q^2n^2 - 3q^2n - 6qn^2 + 12qn + q^2 - 6q + 3n^2 - 9n + 6) A1
    #      + 6 (qn - q - n + 2) A2 - 6 A3]
    lead = (q - 1) * n * (q * q * n * n - 2 * q * n * n + 3 * q * n - q + n * n - 3 * n + 2)
    c1 = 3 * q * q * n * n - 3 * q * q * n - 6 * q * n * n + 12 * q * n + q * q - 6 * q + 3 * n * n - 9 * n + 6
    c2 = 6 * (q * n - q - n + 2)
    A3 = (lead - c1 * A1 + c2 * A2 - Fraction(m3) * q**3 / qk) / 6
    out = []
    for name, v in (("A1", A1), ("A2", A2), ("A3", A3)):
        if v.denominator != 1 or v < 0:
            raise Inconsistent(f"dual count {name} = {v} is not a nonnegative integer")
        out.append(int(v))
    return DualCounts(*out)
