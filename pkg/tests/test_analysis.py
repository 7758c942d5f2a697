import itertools

import numpy as np
import pytest

from socodes import linalg
from socodes.analysis import (
    LocalityCert,
    NoCert,
    almost_optimal,
    classify,
    contains_all_ones,
    dependent_triples,
    divisibility_implies_so,
    dual_distance_upto,
    is_self_orthogonal,
    locality,
    sphere_packing_max_d,
    so_side_condition,
    weight3_dual_words,
)
from socodes.code import Code, build_code
from socodes.ff import Params, make_tower, prime_field
from socodes.wdist import WeightDistribution, pless_dual_counts, wdist_closed, wdist_enumerate

F3 = prime_field(3)


def test_self_orthogonal_examples():
    assert is_self_orthogonal(build_code(make_tower((3, 2, 1, 1))))
    assert is_self_orthogonal(build_code(make_tower((3, 4, 1, 2))))
    assert not is_self_orthogonal(Code(F3, [[1]]))


def test_divisibility_examples():
    for tup in [(3, 2, 1, 1), (3, 3, 1, 1)]:
        code = build_code(make_tower(tup))
        assert divisibility_implies_so(code, wdist_closed(Params(*tup)))
    rep = Code(F3, [[1, 1, 1, 1]])
    assert not divisibility_implies_so(rep, WeightDistribution({0: 1, 4: 2}, 4, 1, 3))


def test_divisibility_on_random_codes_with_ones():
    rng = np.random.default_rng(2)
    for _ in range(100):
        n = int(rng.integers(3, 9))
        G = np.vstack([np.ones(n, dtype=np.int64), rng.integers(0, 3, size=(int(rng.integers(0, 3)), n))])
        code = Code(F3, G)
        wd = wdist_enumerate(code)
        assert wd.total == 3 ** code.k or linalg.rank(F3, G) < code.k
        if linalg.rank(F3, G) == code.k and divisibility_implies_so(code, wd):
            assert is_self_orthogonal(code)


def test_side_condition_examples():
    assert so_side_condition(Params(3, 2, 1, 1))
    assert not so_side_condition(Params(3, 2, 1, 2))
    assert so_side_condition(Params(3, 4, 1, 2))


def test_dual_distance_examples():
    assert dual_distance_upto(build_code(make_tower((3, 2, 1, 2)))).d == 3
    dd = dual_distance_upto(build_code(make_tower((3, 2, 1, 1))))
    assert dd.d == 3
    code = build_code(make_tower((3, 2, 1, 1)))
    cols = code.G[:, list(dd.columns)]
    combo = linalg.matmul(F3, cols, np.array(dd.coefficients)[:, None])
    assert not combo.any() and all(dd.coefficients)
    dup = Code(F3, [[1, 2, 1], [0, 0, 1]])
    assert dual_distance_upto(dup).d == 2
    assert dual_distance_upto(Code(F3, [[1, 0], [0, 0]])).d == 1
    assert dual_distance_upto(Code(F3, np.eye(3, dtype=np.int64))).above_bound


def _dual_min_weight(code):
    H = linalg.nullspace(code.field, code.G)
    if len(H) == 0:
        return None
    wd = wdist_enumerate(Code(code.field, H))
    return min(w for w in wd.weights if w)


def test_dual_distance_matches_full_dual_enumeration():
    rng = np.random.default_rng(9)
    f5 = prime_field(5)
    checked = 0
    for f in (F3, f5):
        for _ in range(30):
            k = int(rng.integers(1, 4))
            n = int(rng.integers(k + 1, k + 7))
            G = rng.integers(0, f.order, size=(k, n))
            if linalg.rank(f, G) < k or f.order ** (n - k) > 10**6:
                continue
            code = Code(f, G)
            dd = dual_distance_upto(code, wmax=n)
            assert dd.d == _dual_min_weight(code)
            checked += 1
    assert checked > 20


@pytest.mark.parametrize("tup", [(3, 2, 1, 1), (3, 2, 2, 2)])
def test_pless_A3_equals_column_triples(tup):
    code = build_code(make_tower(tup))
    assert pless_dual_counts(wdist_closed(Params(*tup))).A3 == weight3_dual_words(code)
    assert dependent_triples(code) == dependent_triples(code, backend="python")


@pytest.mark.parametrize("tup", [(3, 2, 1, 2), (3, 2, 2, 2), (5, 1, 1, 1)])
def test_dual_is_amds_when_s_equals_s2(tup):
    code = build_code(make_tower(tup))
    assert classify(code.n, code.n - code.k, dual_distance_upto(code).d) == "AMDS"


def test_classify():
    assert classify(33, 30, 3) == "AMDS"
    assert classify(7, 1, 7) == "MDS"
    assert classify(33, 28, 3) == "other"


def test_sphere_packing():
    assert sphere_packing_max_d(38, 33, 3) == 4
    assert sphere_packing_max_d(9, 6, 5) == 4
    assert sphere_packing_max_d(6, 6, 3) == 1
    assert almost_optimal(38, 33, 3, 3)


def test_locality_examples():
    code = build_code(make_tower((3, 2, 2, 1)))
    cert = locality(code, 2)
    assert isinstance(cert, LocalityCert) and cert.verify(code)
    assert len(cert.repair) == 17
    # the (0,0) coordinate is last; it is recovered from a pair
    i, J, coef = cert.repair[-1]
    assert i == 16 and len(J) == 2
    ident = Code(F3, np.eye(3, dtype=np.int64))
    assert isinstance(locality(ident, 1), NoCert)


def test_locality_zero_column_trivial():
    code = Code(F3, [[1, 0, 1, 2], [2, 0, 2, 1]])
    cert = locality(code, 1)
    assert isinstance(cert, LocalityCert)
    assert cert.repair[1] == (1, (), ())
    assert cert.verify(code)


def test_contains_all_ones():
    assert contains_all_ones(build_code(make_tower((5, 2, 1, 1))))
    assert not contains_all_ones(Code(F3, [[1, 0, 0]]))
