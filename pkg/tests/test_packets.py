from fractions import Fraction

import pytest

from g2abv import packets
from g2abv.exactnum import Cyclo, RootOfUnity

TH3 = Cyclo.embed(RootOfUnity.of(3))


def names(pairs):
    return [r.name for r, _ in pairs]


def test_twenty_five_parameters():
    labels = [phi.label for phi in packets.g2_params()]
    assert len(labels) == 25
    assert labels[:3] == ["0", "1a", "1b"]


@pytest.mark.parametrize("group", ["G2", "SO4", "PGL3"])
def test_coefficients_match_stored_tables(group):
    assert packets.table_diffs(group) == []


def test_l_packets_are_open_orbit_rows():
    assert packets.llc_diffs() == []
    assert packets.non_singleton_l_packets() == {"4d": 2, "6d": 3, "8d": 3}


def test_abv_packet_8b_has_a_coronal_member():
    phi = packets.lparam("G2:8b")
    assert names(packets.abv_packet(phi)) == ["J_g1(1/2, St)", "J_g2(1/2, St)", "I0(G2[1])"]
    assert names(packets.coronal(phi)) == ["J_g2(1/2, St)", "I0(G2[1])"]
    assert not packets.is_bijective(phi)


def test_coefficients_8d():
    phi = packets.lparam("G2:8d")
    pi1 = packets.repn("pi(1)")
    assert [packets.coefficient(phi, s, pi1) for s in packets.classes(phi)] == [2, 0, -1]


def test_coefficients_6d_coronal():
    phi = packets.lparam("G2:6d")
    r = packets.repn("I0(G2[th3])")
    assert packets.coefficient(phi, "theta3", r) == TH3


def test_not_in_packet():
    with pytest.raises(packets.NotInPacket):
        packets.coefficient(packets.lparam("G2:8a"), "1", packets.repn("pi(1)"))


def test_only_8b_and_8c_are_not_bijective():
    assert [phi.label for phi in packets.g2_params() if not packets.is_bijective(phi)] == ["8b", "8c"]


def test_llc_extension():
    assert all(packets.check_llc_extension(phi) for phi in packets.g2_params())


ARTHUR = {"0": True, "1a": True, "1b": True, "2a": True, "2b": True, "3a": False, "3b": False,
          "4a": True, "4b": True, "4c": True, "4d": True, "5a": False, "5b": False,
          "6a": True, "6b": False, "6c": False, "6d": True, "7a": True, "7b": False, "7c": False,
          "7d": True, "8a": True, "8b": True, "8c": True, "8d": True}


def test_arthur_column():
    assert {phi.label: packets.is_arthur(phi) for phi in packets.g2_params()} == ARTHUR


def test_arthur_depends_on_continuous_data():
    assert packets.is_arthur(packets.lparam("G2:1b", a=Fraction(1, 2)))
    assert not packets.is_arthur(packets.lparam("G2:1b", a=Fraction(1, 3)))
    assert not packets.is_arthur(packets.lparam("G2:0", a1=Fraction(1, 5)))


def test_component_groups():
    got = {phi.label: (phi.a_phi.name, phi.a_abv.name) for phi in packets.g2_params()
           if phi.family.fid in ("4", "8")}
    assert got == {"4a": ("1", "Z2"), "4b": ("1", "Z2"), "4c": ("1", "Z2"), "4d": ("Z2", "Z2"),
                   "8a": ("1", "S3"), "8b": ("1", "Z2"), "8c": ("1", "Z2"), "8d": ("S3", "S3")}


def test_properties_of_8d():
    p = packets.properties(packets.lparam("G2:8d"))
    assert p.open and p.elliptic and p.arthur and p.dim == 4
    assert p.minimal_endoscopic_groups == ("SO4", "PGL3")


def test_invalid_data_rejected():
    with pytest.raises(packets.InvalidParameter):
        packets.lparam("G2:1a", a=0)
    with pytest.raises(packets.InvalidParameter):
        packets.lparam("PGL3:3d", chi=Fraction(1, 2))
    with pytest.raises(packets.InvalidParameter):
        packets.lparam("G2:9a")


def test_aubert_matches_fourier():
    assert packets.aubert_fourier_mismatches() == []
    assert names([(r, None) for r in packets.aubert_fourier_mismatches(printed=True)]) == ["pi(1)'", "pi(1)"]


def test_aubert_is_an_involution():
    for r in packets.all_repns():
        assert packets.aubert_dual_repn(packets.aubert_dual_repn(r)) == r
    for phi in packets.g2_params():
        assert packets.aubert_dual(packets.aubert_dual(phi)) == phi


def test_arthur_equals_unitary():
    assert packets.arthur_unitary_mismatches() == []


def test_spherical_and_generic():
    sph = [r.name for r in packets.all_repns() if packets.is_spherical(r)]
    gen = [r.name for r in packets.all_repns() if packets.is_generic(r)]
    assert "1_G2" in sph and "J_g2(1, I(1 x 1))" in sph and "pi(1)'" not in sph
    assert "St_G2" in gen and "pi(1)'" in gen and "I0(G2[-1])" not in gen


def test_pure_inner_form_members():
    phi = packets.lparam("PGL3:3d")
    assert names(packets.pure_l_packet(phi, "PGL3_delta")) == ["chi_PGL3delta"]
    assert names(packets.pure_l_packet(packets.lparam("SO4:3d"), "SO4_delta")) == ["chi_SO4delta"]
