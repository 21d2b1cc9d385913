from fractions import Fraction

import pytest

from g2abv import endoscopy as E, packets
from g2abv.distributions import VirtualChar, theta
from g2abv.rootdata import POSITIVE_ROOTS, eval_root


def test_six_triples_and_centralizers():
    kinds = {t.name: E.centralizer_kind(t) for t in E.endo_triples()}
    assert kinds == {"T_reg": "DualTorus", "A1_short": "GL2", "A1_long": "GL2",
                     "D2": "SO4sub", "A2": "SL3", "G2_triv": "G2dual"}


def test_regular_torus_element():
    s = E.triple("T_reg").s
    assert all(not eval_root(r, s).is_one() for r in POSITIVE_ROOTS)


def test_minimal_endoscopic_groups():
    assert E.triples_for("4d") == ("SO4",)
    assert E.triples_for(packets.lparam("G2:8d")) == ("SO4", "PGL3")


def _p(spec, **data):
    return packets.lparam(spec, **data)


def test_a2_lifts():
    assert E.lift_parameter("A2", _p("PGL3:3d", chi=0)).label == "8d"
    assert E.lift_parameter("A2", _p("PGL3:3d", chi=Fraction(1, 3))).label == "6d"
    assert E.lift_parameter("A2", _p("PGL3:2a")).label == "3a"
    assert E.lift_parameter("A2", _p("PGL3:3c", chi=0)).label == "8b"


def test_d2_lifts():
    assert E.lift_parameter("D2", _p("SO4:3d", chi=Fraction(1, 2))).label == "4d"
    assert E.lift_parameter("D2", _p("SO4:3d", chi=0)).label == "8d"


def test_conormality_follows_the_table_columns():
    assert E.is_xi_conormal("A2", _p("PGL3:3b", chi=Fraction(1, 3)))
    assert not E.is_xi_conormal("A2", _p("PGL3:3b", chi=0))
    assert E.is_xi_conormal("D2", _p("SO4:3a", chi=0))
    assert not E.is_xi_conormal("A1_long", _p("GL2_long:1b", chi="q^(3/2)"))


def test_lift_from_pgl3_steinberg():
    res = E.lift_distribution("A2", _p("PGL3:3d", chi=0))
    r = packets.repn
    assert res.target == "8d" and res.s_class == "(123)"
    assert res.distribution == VirtualChar({r("pi(1)'"): 1, r("pi(1)"): -1, r("I0(G2[1])"): 1})
    assert res.agrees


def test_lift_from_so4_twisted_steinberg():
    res = E.lift_distribution("D2", _p("SO4:3d", chi=Fraction(1, 2)))
    r = packets.repn
    assert res.distribution == VirtualChar({r("pi(th2)"): 1, r("I0(G2[-1])"): -1})


def test_lifting_report_is_consistent():
    rows = E.lifting_report()
    assert all(row[4] for row in rows)
    assert all(row[5] for row in rows if row[3])
    # every D2 and A2 row is exercised
    seen = {(row[0], row[1].split(":")[1]) for row in rows}
    for name, h in E.LIFT_TABLE:
        if name in ("D2", "A2"):
            assert (name, h) in seen


def test_not_conormal_raises():
    with pytest.raises(E.NotConormal):
        E.lift_distribution("A2", _p("PGL3:3b", chi=0))


def test_kottwitz_signs():
    assert E.kottwitz_sign("SO4") == 1
    assert E.kottwitz_sign("SO4_delta") == 1
    assert E.kottwitz_sign("PGL3_delta") == 1
    for f in E.INNER_FORMS:
        assert E.kottwitz_sign(f) ** 2 == 1


def test_inner_form_lifts():
    d = E.lift_to_inner_form(_p("PGL3:3d"), "PGL3_delta")
    assert [(str(r), c) for r, c in d.items()] == [("PGL3_delta:chi_PGL3delta", 1)]
    # 3a is not relevant to the form, yet its distribution there is non-zero
    assert not E.is_relevant(_p("PGL3:3a"), "PGL3_delta")
    assert E.lift_to_inner_form(_p("PGL3:3a"), "PGL3_delta") == d
    assert E.is_relevant(_p("PGL3:3d"), "PGL3_delta")
    with pytest.raises(E.NotRelevant):
        E.lift_to_inner_form(_p("PGL3:0"), "PGL3_delta")
    assert E.lift_to_inner_form(_p("SO4:3d"), "SO4") == theta(_p("SO4:3d"))


@pytest.mark.parametrize("label", ["4d", "6d", "7d", "8d"])
def test_ec_round_trip(label):
    phi = packets.lparam("G2:" + label)
    for r, _ in packets.l_packet(phi):
        assert E.ec_decompose(r).agrees
    assert all(E.ec_lift_consistency(phi).values())


def test_ec_coefficients():
    d = E.ec_decompose("pi(1)'")
    assert [(t.triple, t.coefficient) for t in d.terms] == [
        ("G2_triv", Fraction(1, 6)), ("D2", Fraction(1, 2)), ("A2", Fraction(1, 3))]
    d = E.ec_decompose("pi(th2)")
    assert [(t.triple, t.coefficient) for t in d.terms] == [("G2_triv", Fraction(1, 2)), ("D2", Fraction(1, 2))]
    assert [(t.triple, t.coefficient) for t in E.ec_decompose("St_G2").terms] == [("G2_triv", 1)]


def test_ec_needs_elliptic_bijective_packet():
    with pytest.raises(E.NotSConormal):
        E.ec_decompose("J_g2(1/2, St)")
