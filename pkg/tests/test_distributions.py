from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import cyclos
from g2abv import distributions as D, packets
from g2abv.exactnum import Cyclo, RootOfUnity

TH3 = Cyclo.embed(RootOfUnity.of(3))


def vc(**named):
    return D.VirtualChar({packets.repn(k): v for k, v in named.items()})


def rep(name):
    return packets.repn(name)


def test_theta_8d():
    phi = packets.lparam("G2:8d")
    assert D.theta(phi, "1") == D.VirtualChar({rep("pi(1)'"): 1, rep("pi(1)"): 2, rep("I0(G2[1])"): 1})
    assert D.theta(phi, "(12)") == D.VirtualChar({rep("pi(1)'"): 1, rep("I0(G2[1])"): -1})


def test_theta_4d_both_signs_positive():
    phi = packets.lparam("G2:4d")
    assert D.theta(phi, "1") == D.VirtualChar({rep("pi(th2)"): 1, rep("I0(G2[-1])"): 1})
    assert D.theta(phi, "theta2") == D.VirtualChar({rep("pi(th2)"): 1, rep("I0(G2[-1])"): -1})


def test_theta_6a_coronal_signs_from_definition():
    phi = packets.lparam("G2:6a")
    t = D.theta(phi, "1")
    assert t[rep("I0(G2[th3])")] == 1 and t[rep("I0(G2[th3^2])")] == 1


def test_claims_agree():
    assert D.claim_diffs() == []


def test_base_point_coefficient_is_one():
    for phi in packets.g2_params():
        t = D.theta(phi, "1")
        for r, ch in packets.l_packet(phi):
            if ch == "1":
                assert t[r] == 1


def test_arthur_form_for_all_arthur_parameters():
    for phi in packets.g2_params():
        if packets.is_arthur(phi):
            for s in packets.classes(phi):
                assert D.theta_arthur_check(phi, s)


def test_not_arthur_type():
    with pytest.raises(D.NotArthurType):
        D.theta_arthur(packets.lparam("G2:6b"))


@pytest.mark.parametrize("label", ["6b", "6c"])
def test_no_s_realises_coronal_sign(label):
    ce = D.sign_counterexample(packets.lparam("G2:" + label))
    assert ce.repn == "I0(G2[th3])"
    assert ce.value == -1
    assert ce.value_set == [1, TH3, TH3 * TH3]
    assert ce.certified


def test_span_equals_bijectivity():
    for i in range(9):
        spans, bij = D.span_check(packets.param_family("G2", str(i)))
        assert spans == bij
    spans, _ = D.span_check(packets.param_family("G2", "8"))
    assert [k for k, v in spans.items() if not v] == ["8b", "8c"]


@pytest.mark.parametrize("fid", [str(i) for i in range(9)])
def test_family_inversion_back_substitutes(fid):
    inv = D.invert(packets.param_family("G2", fid))
    assert all(inv.back_substitution.values())
    assert len(inv.expressions) == len(packets.family_spec("G2", fid).reps)


def test_inversion_8d_by_s3_character_table():
    # inverse of the S3 character table: 1/|Z(c)| times conjugate character values
    phi = packets.lparam("G2:8d")
    terms = [(Fraction(1, 6), "1"), (Fraction(1, 2), "(12)"), (Fraction(1, 3), "(123)")]
    total = D.combine((k, D.theta(phi, s)) for k, s in terms)
    assert total == D.VirtualChar.basis(rep("pi(1)'"))


def test_closed_form_report():
    inv = D.invert(packets.param_family("G2", "8"))
    assert {st for _, _, st in inv.closed_form} == {"match"}
    inv = D.invert(packets.param_family("G2", "6"))
    assert {st for _, _, st in inv.closed_form} == {"no data"}


def test_case6a_inverse_and_sign_warning():
    r = D.case6a_report()
    assert r.inverse_matches_block
    assert r.computed_signs == [1, 1, 1]
    assert len(r.warnings) == 2


@pytest.mark.parametrize("fid", ["4", "6"])
def test_standard_module_scaffold(fid):
    assert D.stability_scaffold(fid) == [True] * 4
    assert D.is_unitriangular(D.standard_module_matrix(fid))


def test_case4_routes():
    assert D.case4_routes_agree()


def test_case8_standard_modules_unsupported():
    with pytest.raises(D.UnsupportedFamily):
        D.standard_module_matrix("8")


def test_matrix_inverse():
    m = [[1, 1], [0, 1]]
    assert D.matrix_inverse(m) == [[1, -1], [0, 1]]
    with pytest.raises(D.SingularSystem):
        D.matrix_inverse([[1, 1], [1, 1]])


@given(cyclos, cyclos)
def test_virtual_char_linearity(a, b):
    x = D.VirtualChar({rep("pi(1)"): a, rep("St_G2"): b})
    y = D.VirtualChar({rep("pi(1)"): b})
    assert (x + y) - y == x
    assert x.scale(2) == x + x
    assert (x - x) == D.zero()
    assert rep("pi(1)") not in (x - x).coeffs
