from hypothesis import given

from conftest import qvalues
from g2abv.exactnum import QValue
from g2abv.rootdata import (
    LONG_ROOTS, POSITIVE_ROOTS, ROOTS, coroot, eval_root, inner, m, pairing,
    weyl_act_root, weyl_act_torus, weyl_elements,
)


def test_weyl_group_has_twelve_elements():
    assert len(weyl_elements()) == 12
    for w in weyl_elements():
        assert {weyl_act_root(w, r) for r in ROOTS} == set(ROOTS)


def test_root_lengths():
    for r in ROOTS:
        assert inner(r, r) == (3 if r in LONG_ROOTS else 1)


def test_root_values_in_coordinates():
    # x is the value of g1+2g2 and y the value of g1+g2
    x, y = QValue.q(2), QValue.q(1)
    t = m(x, y)
    assert eval_root((1, 2), t) == x
    assert eval_root((1, 1), t) == y
    assert eval_root((1, 0), t) == y * y / x
    assert eval_root((0, 1), t) == x / y
    assert eval_root((2, 3), t) == x * y


def test_cartan_integers():
    assert pairing((0, 1), (1, 0)) == -1
    assert pairing((1, 0), (0, 1)) == -3
    for r in ROOTS:
        assert pairing(r, r) == 2


@given(qvalues())
def test_coroot_pairing(z):
    for b in POSITIVE_ROOTS:
        t = coroot(b, z)
        for a in POSITIVE_ROOTS:
            assert eval_root(a, t) == z ** pairing(a, b)


@given(qvalues(), qvalues())
def test_weyl_action_is_compatible(x, y):
    t = m(x, y)
    for w in weyl_elements():
        tw = weyl_act_torus(w, t)
        for r in POSITIVE_ROOTS:
            assert eval_root(weyl_act_root(w, r), tw) == eval_root(r, t)
