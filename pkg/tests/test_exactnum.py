from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import cyclos, qvalues, roots_of_unity
from g2abv.exactnum import Cyclo, EmbeddingError, ONE, ParseError, QValue, RootOfUnity, ZERO


@given(cyclos, cyclos, cyclos)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x and x * ONE == x


@given(cyclos, cyclos)
def test_conj_is_an_involutive_automorphism(x, y):
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    assert x.conj().conj() == x


@given(cyclos)
def test_inverse(x):
    if x:
        assert x * x.inverse() == ONE


@given(cyclos)
def test_canonical_round_trip(x):
    assert Cyclo.parse(x.canonical()) == x


@given(qvalues(), st.integers(1, 24))
def test_qvalue_power_trivial_only_without_q(v, n):
    if (v ** n).is_one():
        assert v.exp == 0


@given(qvalues())
def test_qvalue_parse_round_trip(v):
    assert QValue.parse(str(v)) == v


def test_twelfth_root_relations():
    z = Cyclo.embed(RootOfUnity.of(12))
    assert z ** 12 == ONE
    assert z ** 4 == z ** 2 - 1
    assert z ** 6 == -1


def test_cube_roots_sum_to_zero():
    th = Cyclo.embed(RootOfUnity.of(3))
    assert ONE + th + th * th == ZERO


def test_order_five_root_does_not_embed():
    with pytest.raises(EmbeddingError):
        Cyclo.embed(RootOfUnity.of(5))


def test_parse_grammar():
    assert QValue.parse("-q") == QValue(RootOfUnity(Fraction(1, 2)), 1)
    assert QValue.parse("zeta(3)^2*q^(2/3)") == QValue(RootOfUnity(Fraction(2, 3)), Fraction(2, 3))
    assert QValue.parse("1") == QValue()


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as e:
        QValue.parse("q^(")
    assert e.value.pos == 3


@given(roots_of_unity(), roots_of_unity())
def test_root_of_unity_group(a, b):
    assert (a * b) / b == a
    assert a ** a.order == RootOfUnity(0)
