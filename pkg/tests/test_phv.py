from g2abv import phv
from g2abv.phv import MicroSheaf, P0, P1, P2, P3, P4


def test_orbit_dimensions():
    assert [o.dim for o in phv.orbits(P4())] == [0, 2, 3, 4]
    assert [o.dim for o in phv.orbits(P3(3))] == [0, 1, 1, 2]
    assert [o.dim for o in phv.orbits(P2(1))] == [0, 2]
    assert [o.dim for o in phv.orbits(P1())] == [0, 1]


def test_simple_object_counts():
    counts = {str(c): len(phv.simple_objects(c)) for c in phv.all_classes()}
    assert counts == {"P0(1)": 1, "P0(Z2)": 2, "P1": 2, "P2(0)": 2, "P2(1)": 2,
                      "P3(1)": 4, "P3(2)": 5, "P3(3)": 6, "P4": 6}


def test_s3_character_table_orthogonality():
    g = phv.s3()
    for a in g.char_names():
        for b in g.char_names():
            total = sum((g.value(a, c) * g.value(b, c).conj() * n for c, n in zip(g.classes, g.sizes)),
                        phv.ZERO)
            assert total == (g.order if a == b else 0)


def test_p4_nevs_rows():
    eps = phv.nevs(P4(), MicroSheaf("C3", "eps"))
    assert eps == {"C0": {"eps": 1}, "C1": {"1": 1}, "C2": {"vartheta2": 1}, "C3": {"eps": 1}}
    assert phv.nevs(P4(), MicroSheaf("C1", "1")) == {"C0": {"rho": 1}, "C1": {"1": 1}}


def test_fourier_tables_are_involutions():
    for c in phv.all_classes():
        assert phv.is_involution(phv.fourier_table(c))


def test_printed_p4_fourier_is_a_four_cycle():
    printed = phv.fourier_table(P4(), printed=True)
    assert not phv.is_involution(printed)
    assert len(phv.fourier_differences(P4())) == 2


def test_trace_of_regular_character():
    g = phv.s3()
    assert phv.trace(g, {"1": 1, "eps": 1, "rho": 2}, "1") == 6
    assert phv.trace(g, {"1": 1, "eps": 1, "rho": 2}, "(12)") == 0
    assert phv.trace_shifted(g, {"rho": 1}, 1, "(123)") == 1


def test_parse_round_trip():
    for c in phv.all_classes():
        assert phv.parse_phv(str(c)) == c
    for p in phv.simple_objects(P4()):
        assert phv.parse_sheaf(str(p)) == p
    assert str(P0("Z2")) == "P0(Z2)"
