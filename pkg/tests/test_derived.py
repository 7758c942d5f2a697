import numpy as np
import pytest

from socodes.analysis import dual_distance_upto, is_self_orthogonal, sphere_packing_max_d
from socodes.code import Code, build_code
from socodes.derived import (
    MDS_CONJECTURE_NOTE,
    build_lcd,
    build_lcd_variant,
    is_lcd,
    lcd_distance_bound,
    quantum_label,
    quantum_params,
    steane_chain_check,
    steane_distance,
)
from socodes.errors import ConditionsNotMet, NotSelfOrthogonal, WrongShape
from socodes.ff import Params, make_tower, prime_field
from socodes.linalg import row_space_equal
from socodes.wdist import min_distance, wdist_closed, wdist_enumerate

from _grid import REGULAR, ids

F3 = prime_field(3)


@pytest.mark.parametrize(
    "tup, expected",
    [((3, 2, 1, 1), (33, 27, 3, 3, "AMDS")), ((3, 3, 1, 3), (225, 221, 3, 27, "MDS")), ((5, 2, 1, 1), (145, 139, 3, 5, "AMDS"))],
)
def test_quantum_examples(tup, expected):
    qp = quantum_params(Params(*tup))
    assert (qp.n, qp.k, qp.d, qp.q, qp.label) == expected
    assert qp.pure


def test_quantum_conditions():
    with pytest.raises(ConditionsNotMet):
        quantum_params(Params(3, 2, 1, 2))
    assert steane_distance(3, 2, 3) == 3
    assert quantum_label(10, 6, 3) == "MDS"


@pytest.mark.parametrize("prm", REGULAR, ids=ids(REGULAR))
def test_quantum_singleton_consistency(prm):
    try:
        qp = quantum_params(prm)
    except ConditionsNotMet:
        return
    gap = qp.n - qp.k - 2 * (qp.d - 1)
    assert gap == {"MDS": 0, "AMDS": 2}.get(qp.label, gap)
    if qp.label == "AMDS" and qp.n > qp.q**2 + 1:
        assert qp.note == MDS_CONJECTURE_NOTE
    if qp.n <= 2241:
        assert steane_chain_check(build_code(make_tower(prm)))


def test_steane_chain_examples():
    assert steane_chain_check(build_code(make_tower((3, 2, 1, 1))))
    assert steane_chain_check(build_code(make_tower((3, 4, 1, 2))))
    with pytest.raises(NotSelfOrthogonal):
        steane_chain_check(Code(F3, [[1]]))


def test_lcd_examples():
    code = build_code(make_tower((3, 2, 1, 1)))
    lcd = build_lcd(code)
    assert (lcd.n, lcd.k) == (38, 5)
    assert min_distance(wdist_enumerate(lcd.code)) == 19
    assert is_lcd(lcd.code) and not is_lcd(code)
    with pytest.raises(NotSelfOrthogonal):
        build_lcd(build_code(make_tower((3, 2, 2, 2))))
    assert is_lcd(Code(F3, np.eye(4, dtype=np.int64)))


def test_lcd_gram_is_identity():
    from socodes.linalg import gram

    for tup in [(3, 2, 1, 1), (5, 2, 1, 1), (3, 3, 1, 1)]:
        lcd = build_lcd(build_code(make_tower(tup)))
        assert np.array_equal(gram(lcd.code.field, lcd.code.G), np.eye(lcd.k, dtype=np.int64))
        d_parent = min_distance(wdist_closed(Params(*tup)))
        assert min_distance(wdist_enumerate(lcd.code)) >= d_parent + 1


def test_lcd_variant_p3():
    var = build_lcd_variant((3, 2, 1, 1))
    assert (var.n, var.k) == (38, 5)
    assert min_distance(wdist_enumerate(var.code)) == 20
    assert is_lcd(var.code)
    assert dual_distance_upto(var.code).d == 3
    assert sphere_packing_max_d(38, 33, 3) == 4
    parent = build_code(make_tower((3, 2, 1, 1)))
    assert row_space_equal(parent.field, parent.G, var.code.G[:, 5:])
    assert is_self_orthogonal(Code(parent.field, var.code.G[:, 5:]))


def test_lcd_variant_p5():
    var = build_lcd_variant((5, 2, 1, 1))
    n = 5**3 + 5**2 - 5 + 5
    assert (var.n, var.k) == (n, 5)
    assert min_distance(wdist_enumerate(var.code)) >= lcd_distance_bound(5) == 102
    assert dual_distance_upto(var.code).d == 3
    with pytest.raises(WrongShape):
        build_lcd_variant((3, 4, 1, 2))
