"""Acceptance suite: each test checks one criterion at its stated tolerance and time limit.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints
one PASS/FAIL line per criterion.
"""

import time
from contextlib import contextmanager

import numpy as np
import pytest

from socodes.analysis import (
    almost_optimal,
    classify,
    divisibility_implies_so,
    dual_distance_upto,
    is_self_orthogonal,
    locality,
    LocalityCert,
    sphere_packing_max_d,
    so_side_condition,
    weight3_dual_words,
)
from socodes.chars import (
    CyclotomicInt,
    char_sum_quadratic_closed,
    char_sum_quadratic_direct,
    char_sum_quadratic_table,
    gauss_square,
    gauss_sum_cyclotomic,
    gauss_sum_direct,
)
from socodes.cli import reproduce_linear_table, reproduce_quantum_table
from socodes.code import build_code
from socodes.counts import count_N_ab, count_N_ab_enum_all_c
from socodes.derived import build_lcd, build_lcd_variant, is_lcd, quantum_label
from socodes.ff import Params, is_prime, make_tower
from socodes.wdist import DualCounts, min_distance, pless_dual_counts, wdist_closed, wdist_enumerate

from _grid import DEGENERATE, GRID, REGULAR

GOLDEN = {
    (3, 2, 1, 1): {0: 1, 18: 32, 21: 96, 24: 112, 33: 2},
    (3, 3, 1, 1): {0: 1, 144: 952, 153: 1008, 162: 224, 225: 2},
    (3, 2, 1, 2): {0: 1, 24: 16, 28: 160, 29: 256, 30: 128, 31: 128, 32: 32, 33: 8},
}
GOLDEN_LARGE = {
    0: 1,
    1944: 800,
    1980: 14400,
    1989: 23040,
    1998: 6400,
    2007: 11520,
    2016: 2880,
    2241: 8,
}


@contextmanager
def time_limit(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, limit {seconds} s"


def _combination_is_zero(code, columns, coefficients):
    f = code.field
    acc = np.zeros(code.k, dtype=np.int64)
    for j, c in zip(columns, coefficients):
        assert c != 0
        acc = f.add[acc, f.mul[c, code.G[:, j]]]
    return not acc.any()


def _tower_code(params, check_rank=True):
    return build_code(make_tower(params), check_rank=check_rank)


@pytest.mark.criterion(1)
def test_golden_enumerators():
    with time_limit(5):
        for tup, golden in GOLDEN.items():
            params = Params(*tup)
            closed = wdist_closed(params)
            enumerated = wdist_enumerate(_tower_code(params))
            assert closed == enumerated
            assert enumerated.weights == golden


@pytest.mark.slow
@pytest.mark.criterion(2)
def test_large_golden_enumerator():
    with time_limit(60):
        params = Params(3, 4, 1, 2)
        code = _tower_code(params)
        assert (code.n, code.k, code.q) == (2241, 5, 9)
        wd = wdist_enumerate(code, force=True)
        assert wd.weights == GOLDEN_LARGE
        assert min_distance(wd) == 1944
        assert wdist_closed(params) == wd


@pytest.mark.criterion(3)
def test_linear_code_table():
    with time_limit(30):
        rows = reproduce_linear_table()
        assert len(rows) == 10
        assert all(r["match"] for r in rows), [r for r in rows if not r["match"]]
        for r in rows:
            if r["code"] != "dual":
                continue
            code = _tower_code(Params(*r["params"]))
            dd = dual_distance_upto(code, wmax=3)
            assert dd.d == 3
            assert _combination_is_zero(code, dd.columns, dd.coefficients)
            # no two columns are dependent, so d = 3 exactly
            assert dual_distance_upto(code, wmax=2).above_bound
            n, k = code.n, code.n - code.k
            expected = r["expected"].split()[1]
            if expected in ("MDS", "AMDS"):
                assert classify(n, k, 3) == expected


@pytest.mark.criterion(4)
def test_quantum_code_table():
    with time_limit(60):
        rows = reproduce_quantum_table(chain_max_n=2241)
        assert len(rows) == 9
        assert all(r["match"] for r in rows), [r for r in rows if not r["match"]]
        for r in rows:
            n = int(r["expected"][2:].split(",")[0])
            assert (r["mode"] == "chain-verified") == (n <= 2241)
            nums = r["computed"].split("]]")[0].strip("[").split(",")
            n, k, d = map(int, nums)
            assert quantum_label(n, k, d) == r["computed"].split()[-1]


@pytest.mark.criterion(5)
def test_closed_matches_enumeration_on_grid():
    mismatches = []
    with time_limit(120):
        for params in GRID:
            degenerate = params in DEGENERATE
            code = _tower_code(params, check_rank=not degenerate)
            closed = wdist_closed(params, strict=not degenerate)
            if closed != wdist_enumerate(code, force=True):
                mismatches.append(params.astuple())
    assert (7, 3, 1, 1) in [prm.astuple() for prm in GRID]
    assert mismatches == []


def _fibre_tuples(max_field_sq):
    out = []
    for p in (3, 5, 7, 11, 13, 17, 19, 23):
        for s in range(1, 4):
            if p ** (2 * s) > max_field_sq:
                continue
            for s1 in range(1, s + 1):
                for s2 in range(1, s + 1):
                    if s % s1 == 0 and s % s2 == 0 and (s1 % s2 == 0 or s2 % s1 == 0):
                        out.append((p, s, s1, s2))
    return out


@pytest.mark.criterion(6)
def test_fibre_counts_against_enumeration():
    small = _fibre_tuples(3**6)
    assert (3, 3, 1, 3) in small and (5, 2, 1, 2) in small
    for tup in small:
        t = make_tower(tup)
        sub = t.subfield(t.s2)
        cs = [int(c) for c in sub.elements]
        for a in range(t.order):
            for b in range(t.order):
                direct = count_N_ab_enum_all_c(t, a, b)
                closed = [count_N_ab(t, a, b, c) for c in cs]
                assert closed == direct.tolist(), (tup, a, b)

    large = [prm.astuple() for prm in GRID if prm.p ** (2 * prm.s) > 3**6]
    assert large
    rng = np.random.default_rng(20240601)
    for tup in large:
        t = make_tower(tup)
        sub = t.subfield(t.s2)
        for _ in range(500):
            a, b = (int(v) for v in rng.integers(0, t.order, size=2))
            ci = int(rng.integers(0, sub.order))
            direct = count_N_ab_enum_all_c(t, a, b)[ci]
            assert count_N_ab(t, a, b, int(sub.elements[ci])) == direct, (tup, a, b, ci)


def _odd_prime_powers(limit):
    for p in range(3, limit + 1):
        if not is_prime(p):
            continue
        level = 1
        while p**level <= limit:
            yield p, level
            level += 1


@pytest.mark.criterion(7)
def test_gauss_and_character_sums():
    for p, level in _odd_prime_powers(343):
        t = make_tower((p, level, 1, 1))
        direct = gauss_sum_direct(t)
        assert direct == gauss_sum_cyclotomic(p, level)
        assert direct * direct == CyclotomicInt.from_int(p, gauss_square(p, level))

    fields = [(p, level) for p, level in _odd_prime_powers(81)]
    assert (3, 4) in fields and (7, 2) in fields and (79, 1) in fields
    for p, level in fields:
        t = make_tower((p, level, 1, 1))
        for h2 in range(1, t.order):
            direct, closed = char_sum_quadratic_table(t, h2)
            assert np.array_equal(direct, closed), (p, level, h2)
        # the tabulated sums agree with the term-by-term oracle
        for h2, h1, h0 in ((1, 0, 0), (t.order - 1, 1, t.order - 1), (2 % t.order or 1, t.order // 2, 1)):
            direct, _ = char_sum_quadratic_table(t, h2, h1)
            assert direct[h0].tolist() == list(char_sum_quadratic_direct(t, h2, h1, h0).coeffs)
            assert direct[h0].tolist() == list(char_sum_quadratic_closed(t, h2, h1, h0).coeffs)


@pytest.mark.criterion(8)
def test_self_orthogonality_implications():
    counterexamples = []
    side_conditions = divisibility = 0
    for params in GRID:
        code = _tower_code(params, check_rank=params not in DEGENERATE)
        so = is_self_orthogonal(code)
        if so_side_condition(params):
            side_conditions += 1
            if not so:
                counterexamples.append(("side conditions", params.astuple()))
        wd = wdist_closed(params, strict=params not in DEGENERATE)
        # raises if the hypotheses hold while the Gram matrix is nonzero
        if divisibility_implies_so(code, wd):
            divisibility += 1
    assert counterexamples == []
    assert side_conditions > 0 and divisibility > 0


@pytest.mark.criterion(9)
def test_lcd_goldens():
    with time_limit(5):
        lcd = build_lcd(_tower_code(Params(3, 2, 1, 1)))
        assert is_lcd(lcd.code)
        wd = wdist_enumerate(lcd.code)
        assert (lcd.n, lcd.k, min_distance(wd), lcd.code.q) == (38, 5, 19, 3)

        variant = build_lcd_variant(Params(3, 2, 1, 1))
        assert is_lcd(variant.code)
        wd = wdist_enumerate(variant.code)
        assert (variant.n, variant.k, min_distance(wd), variant.code.q) == (38, 5, 20, 3)
        dd = dual_distance_upto(variant.code, wmax=3)
        assert dd.d == 3
        assert _combination_is_zero(variant.code, dd.columns, dd.coefficients)

        assert sphere_packing_max_d(38, 33, 3) == 4
        assert almost_optimal(38, 33, 3, 3)


@pytest.mark.criterion(10)
def test_locality_certificate():
    with time_limit(1):
        code = _tower_code(Params(3, 2, 2, 1))
        cert = locality(code, 2)
        assert isinstance(cert, LocalityCert)
        assert code.n == 17
        assert sorted(i for i, _, _ in cert.repair) == list(range(17))
        assert all(len(J) <= 2 for _, J, _ in cert.repair)
        assert cert.verify(code)


@pytest.mark.criterion(11)
def test_pless_moments_match_column_triples():
    mismatches = []
    for params in REGULAR:
        code = _tower_code(params)
        wd = wdist_closed(params)
        expected = DualCounts(0, 0, weight3_dual_words(code))
        if pless_dual_counts(wd) != expected:
            mismatches.append(params.astuple())
    assert len(REGULAR) + len(DEGENERATE) == len(GRID)
    assert mismatches == []
