import random
from fractions import Fraction

from hypothesis import given

from conftest import qvalues
from g2abv.exactnum import QValue, RootOfUnity
from g2abv.infclass import CASES, PHV_OF_CASE, classify, dim_v, reducibility, standard_parameter
from g2abv.rootdata import m, weyl_act_torus, weyl_elements

Q = QValue.q


def _cls(x, y):
    return classify(m(QValue.parse(x), QValue.parse(y)))


def test_anchor_instances():
    assert _cls("q^2", "q").case_id == "C5"
    assert _cls("q", "-q").case_id == "C4D2"
    assert _cls("zeta(3)*q", "zeta(3)^2*q").case_id == "C6A2"
    assert _cls("q^3", "q^2").case_id == "C7reg"
    assert _cls("q", "q").case_id == "C8sub"
    assert _cls("zeta(5)", "q^(1/7)").case_id == "C0"


def test_case5_data():
    c = _cls("q^2", "q")
    assert str(c.phv) == "P2(0)"
    assert c.h_group.kind == "GL2" and c.h_group.root == (1, 0)


def test_standard_parameters_classify_to_their_case():
    data = {"C1short": {"a": Fraction(1, 2)}, "C2long": {"a": Fraction(1, 2)}}
    for case in CASES:
        assert classify(standard_parameter(case, **data.get(case, {}))).case_id == case
    assert classify(standard_parameter("C3", n=1)).case_id == "C3"
    assert classify(standard_parameter("C1short", a=Fraction(1, 3))).case_id == "C1short"


def test_degenerate_family_point_moves_case():
    # a = 0 in the short-root family is the subregular point
    assert classify(standard_parameter("C1short", a=0)).case_id == "C8sub"


def test_dim_v_matches_phv():
    expected = {"P0": 0, "P1": 1, "P2": 2, "P3": 2, "P4": 4}
    for case in CASES:
        assert dim_v(case) == expected[PHV_OF_CASE[case].kind]


@given(qvalues(), qvalues())
def test_weyl_invariance(x, y):
    t = m(x, y)
    case = classify(t).case_id
    for w in weyl_elements():
        assert classify(weyl_act_torus(w, t)).case_id == case


@given(qvalues(), qvalues())
def test_normalized_element_is_a_weyl_translate(x, y):
    t = m(x, y)
    c = classify(t)
    assert weyl_act_torus(c.normalizer, t) == c.frobenius


def test_fuzz_corpus_is_total():
    rng = random.Random(11)
    for _ in range(2000):
        n = rng.randint(1, 12)
        d = rng.randint(1, 6)
        xs = [QValue(RootOfUnity(Fraction(rng.randrange(n), n)), Fraction(rng.randint(-12, 12), d))
              for _ in range(2)]
        assert classify(m(*xs)).case_id in CASES


def test_reducibility_of_principal_series():
    assert reducibility("1", "1").irreducible
    assert not reducibility("q", "1").irreducible
