from g2abv import subphv
from g2abv.phv import MicroSheaf


def test_fixed_point_formula_holds_on_conormal_orbits():
    sizes = {}
    for cid in subphv.PRINTED:
        entries = subphv.fpf_check(cid)
        sizes[cid] = len(entries)
        assert all(e.equal for e in entries)
    assert sizes == {"P2ii": 4, "P4iv": 24, "P4v": 12}


def test_violation_on_non_conormal_orbit():
    bad = subphv.violations("P4v")
    assert bad
    assert {e.sub_orbit for e in bad} <= {"C1", "C2"}


def test_p4v_saturations():
    omap = subphv.get("P4v").orbit_map
    assert omap["C1"].saturation == omap["C2"].saturation == "C1"
    assert [so for so, d in omap.items() if d.conormal] == ["C0", "C3"]


def test_summary_tables_reproduced():
    assert subphv.summary_diffs("P4iv") == []
    assert subphv.summary_diffs("P4v") == []


def test_p2ii_printed_cell_contradicts_diagonal_nevs():
    # the printed (IC(1_C1), C'0) cell is nonzero on both sides; NEvs on P2 is diagonal
    diffs = subphv.summary_diffs("P2ii")
    assert len(diffs) == 1
    d = diffs[0]
    assert (d.sheaf, d.sub_orbit) == (MicroSheaf("C1", "1"), "C0")
    assert d.computed == ([], [])


def test_fixed_dims():
    assert subphv.fixed_dim("P4iv", "C3") == 2
    assert subphv.fixed_dim("P4v", "C3") == 2
    assert subphv.fixed_dim("P4v", "C1") == 1
    assert subphv.fixed_dim("P4v", "C2") == 0


def test_saturation_preserves_open_and_closed():
    for cid in subphv.PRINTED:
        assert subphv.saturation_preserves_type(cid)
