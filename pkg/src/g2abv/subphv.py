"""Fixed-point subspaces V^s of the prehomogeneous spaces and the trace formula for restricted sheaves.

Sub-orbits are labelled C0.. C3 inside the sub-space; in text they are printed
with a prime (C'0, C'1, ...) to keep them apart from the ambient orbits.
"""

from collections import namedtuple

from . import phv
from .phv import MicroSheaf, P0, P1, P2, P3, P4

SubOrbit = namedtuple("SubOrbit", "saturation conormal amb_class sub_class")
SubCase = namedtuple("SubCase", "id ambient sub s_description s_order orbit_map")


class UnsupportedSubCase(ValueError):
    pass


def _plain(mapping):
    return {c: SubOrbit(sat, False, None, None) for c, sat in mapping.items()}


def _build():
    out = {}

    def add(case_id, ambient, sub, desc, order, omap):
        out[case_id] = SubCase(case_id, ambient, sub, desc, order, omap)

    add("P1i", P1(), P0("1"), "s acts by a nontrivial scalar", None, _plain({"C0": "C0"}))
    add("P2i", P2(0), P0("1"), "V^s = 0", None, _plain({"C0": "C0"}))
    add("P2ii", P2(0), P1(), "V^s = {(x1, 0)}", None, {
        "C0": SubOrbit("C0", True, "1", "1"),
        "C1": SubOrbit("C1", True, "1", "1"),
    })
    add("P3i", P3(1), P0("1"), "V^s = 0", None, _plain({"C0": "C0"}))
    add("P3ii", P3(1), P1(), "V^s = {(x1, 0)}", None, _plain({"C0": "C0", "C1": "C1"}))
    add("P3iii", P3(1), P1(), "V^s = {(0, x2)}", None, _plain({"C0": "C0", "C1": "C2"}))
    add("P4i", P4(), P0("1"), "V^s = 0", None, _plain({"C0": "C0"}))
    add("P4ii", P4(), P1(), "V^s = {(x1, 0, 0, 0)}", None, _plain({"C0": "C0", "C1": "C1"}))
    add("P4iii", P4(), P1(), "V^s = {(0, x2, 0, 0)}", None, _plain({"C0": "C0", "C1": "C2"}))
    add("P4iv", P4(), P3(2), "s = diag(-1, 1) in GL2", 2, {
        "C0": SubOrbit("C0", True, "(12)", "theta2"),
        "C1": SubOrbit("C1", True, "theta2", "theta2"),
        "C2": SubOrbit("C2", True, "theta2", "theta2"),
        "C3": SubOrbit("C3", True, "(12)", "theta2"),
    })
    add("P4v", P4(), P3(3), "s = diag(theta3^2, theta3) in GL2", 3, {
        "C0": SubOrbit("C0", True, "(123)", "theta3"),
        "C1": SubOrbit("C1", False, "1", "theta3"),
        "C2": SubOrbit("C1", False, "1", "theta3"),
        "C3": SubOrbit("C3", True, "(123)", "theta3"),
    })
    return out


SUB_CASES = _build()
PRINTED = ("P2ii", "P4iv", "P4v")


def sub_cases(ambient):
    """Proper fixed-point subspaces of an ambient class (P2 and P3 data are independent of n)."""
    if ambient.kind == "P0":
        return []
    return [c for c in SUB_CASES.values() if c.ambient.kind == ambient.kind]


def get(case_id):
    return SUB_CASES[case_id]


# Indecomposables and their composition factors on the sub-space
INDECOMPOSABLES = {
    "F2": (P3(2), (MicroSheaf("C0", "1"), MicroSheaf("C1", "1"), MicroSheaf("C2", "1"))),
    "F3": (P3(2), (MicroSheaf("C1", "1"), MicroSheaf("C3", "1"))),
    "F4": (P3(3), (MicroSheaf("C0", "1"), MicroSheaf("C1", "1"), MicroSheaf("C2", "1"))),
    "F5": (P3(3), (MicroSheaf("C0", "1"), MicroSheaf("C1", "1"), MicroSheaf("C2", "1"), MicroSheaf("C3", "1"))),
}


def nevs_indecomposable(name):
    """NEvs of F2..F5 by exactness: the sum over composition factors."""
    cls, parts = INDECOMPOSABLES[name]
    out = {}
    for p in parts:
        for orb, rep in phv.nevs(cls, p).items():
            slot = out.setdefault(orb, {})
            for ch, mult in rep.items():
                slot[ch] = slot.get(ch, 0) + mult
    return out


def _ic(ch, orb):
    return MicroSheaf(orb, ch)


# restriction of simple objects, as lists of (object, shift)
RESTRICTION = {
    "P2ii": {
        _ic("1", "C0"): [(_ic("1", "C0"), 0)],
        _ic("1", "C1"): [(_ic("1", "C1"), 1)],
    },
    "P4iv": {
        _ic("1", "C0"): [(_ic("1", "C0"), 0)],
        _ic("1", "C1"): [(_ic("1", "C1"), 1)],
        _ic("1", "C2"): [("F2", 2), (_ic("1", "C0"), 1)],
        _ic("1", "C3"): [(_ic("1", "C3"), 2)],
        _ic("rho", "C3"): [("F3", 2), (_ic("1", "C0"), 2), (_ic("vartheta2", "C3"), 2)],
        _ic("eps", "C3"): [(_ic("vartheta2", "C3"), 2)],
    },
    "P4v": {
        _ic("1", "C0"): [(_ic("1", "C0"), 0)],
        _ic("1", "C1"): [("F4", 1)],
        _ic("1", "C2"): [("F4", 2), (_ic("1", "C0"), 1)],
        _ic("1", "C3"): [(_ic("1", "C3"), 2)],
        _ic("rho", "C3"): [(_ic("1", "C0"), 2), (_ic("vartheta3", "C3"), 2), (_ic("vartheta3^2", "C3"), 2)],
        _ic("eps", "C3"): [("F5", 2)],
    },
}


def restrict(case, p):
    cid = case if isinstance(case, str) else case.id
    if cid not in RESTRICTION:
        raise UnsupportedSubCase(f"no restriction data for {cid}")
    return list(RESTRICTION[cid][p])


def nevs_object(cls, obj):
    if isinstance(obj, str):
        return nevs_indecomposable(obj)
    return phv.nevs(cls, obj)


def object_label(obj):
    return obj if isinstance(obj, str) else str(obj).replace("_C", "_C'")


def restriction_label(case, p):
    return " + ".join(f"{object_label(o)}[{sh}]" for o, sh in restrict(case, p))


def lhs_cell(case, p, sub_orbit):
    """[(character, shift)] for NEvs(p) at the saturation of the sub-orbit."""
    c = get(case) if isinstance(case, str) else case
    sat = c.orbit_map[sub_orbit].saturation
    d = phv.dim(c.ambient, sat)
    rep = phv.nevs(c.ambient, p).get(sat, {})
    return sorted((ch, d) for ch, mult in rep.items() for _ in range(mult))


def rhs_cell(case, p, sub_orbit):
    c = get(case) if isinstance(case, str) else case
    d = phv.dim(c.sub, sub_orbit)
    out = []
    for obj, sh in restrict(c, p):
        rep = nevs_object(c.sub, obj).get(sub_orbit, {})
        out.extend((ch, sh + d) for ch, mult in rep.items() for _ in range(mult))
    return sorted(out)


def cell_trace(group, cell, s):
    return sum((phv.trace_shifted(group, {ch: 1}, sh, s) for ch, sh in cell), phv.ZERO)


FpfEntry = namedtuple("FpfEntry", "sheaf sub_orbit left right equal")


def fpf_entry(case, p, sub_orbit):
    c = get(case) if isinstance(case, str) else case
    so = c.orbit_map[sub_orbit]
    amb_group = phv.orbit(c.ambient, so.saturation).a_abv
    sub_group = phv.orbit(c.sub, sub_orbit).a_abv
    left = cell_trace(amb_group, lhs_cell(c, p, sub_orbit), so.amb_class)
    right = cell_trace(sub_group, rhs_cell(c, p, sub_orbit), so.sub_class)
    return FpfEntry(p, sub_orbit, left, right, left == right)


def fpf_check(case, include_nonconormal=False):
    c = get(case) if isinstance(case, str) else case
    if c.id not in RESTRICTION:
        raise UnsupportedSubCase(f"no restriction data for {c.id}")
    out = []
    for p in phv.simple_objects(c.ambient):
        for so_label, so in c.orbit_map.items():
            if so.conormal or include_nonconormal:
                out.append(fpf_entry(c, p, so_label))
    return out


def violations(case):
    c = get(case) if isinstance(case, str) else case
    return [e for e in fpf_check(c, include_nonconormal=True)
            if not c.orbit_map[e.sub_orbit].conormal and not e.equal]


def fixed_dim(case, ambient_orbit):
    c = get(case) if isinstance(case, str) else case
    dims = [phv.dim(c.sub, so) for so, data in c.orbit_map.items() if data.saturation == ambient_orbit]
    return max(dims, default=0)


def saturation_preserves_type(case):
    c = get(case) if isinstance(case, str) else case
    for so, data in c.orbit_map.items():
        if not data.conormal:
            continue
        a, b = phv.orbit(c.sub, so), phv.orbit(c.ambient, data.saturation)
        if (a.is_open, a.is_closed) != (b.is_open, b.is_closed):
            return False
    return True


def _cell(text):
    if text == "0":
        return []
    out = []
    for part in text.split("+"):
        ch, _, sh = part.strip().partition("[")
        out.append((ch, int(sh.rstrip("]"))))
    return sorted(out)


def _table(rows):
    out = {}
    for sheaf, cells in rows.items():
        p = phv.parse_sheaf(sheaf)
        for so, pair in cells.items():
            left, right = pair.split("/")
            out[(p, so)] = (_cell(left.strip()), _cell(right.strip()))
    return out


_Z = "0 / 0"

# printed summary tables: LHS / RHS per (sheaf, sub-orbit)
PRINTED_SUMMARY = {
    "P2ii": _table({
        "IC(1_C0)": {"C0": "1[0] / 1[0]", "C1": _Z},
        "IC(1_C1)": {"C0": "1[0] / 1[0]", "C1": "1[2] / 1[2]"},
    }),
    "P4iv": _table({
        "IC(1_C0)": {"C0": "1[0] / 1[0]", "C1": _Z, "C2": _Z, "C3": _Z},
        "IC(1_C1)": {"C0": "rho[0] / 0", "C1": "1[2] / 1[2]", "C2": _Z, "C3": _Z},
        "IC(1_C2)": {"C0": "0 / 1[2] + 1[1]", "C1": "vartheta2[2] / 1[3]", "C2": "1[3] / 1[3]", "C3": _Z},
        "IC(1_C3)": {"C0": _Z, "C1": _Z, "C2": _Z, "C3": "1[4] / 1[4]"},
        "IC(rho_C3)": {
            "C0": "0 / 1[2] + vartheta2[2]", "C1": "0 / 1[3] + vartheta2[3]",
            "C2": "vartheta2[3] / vartheta2[3]", "C3": "rho[4] / 1[4] + vartheta2[4]",
        },
        "IC(eps_C3)": {
            "C0": "eps[0] / vartheta2[2]", "C1": "1[2] / vartheta2[3]",
            "C2": "vartheta2[3] / vartheta2[3]", "C3": "eps[4] / vartheta2[4]",
        },
    }),
    "P4v": _table({
        "IC(1_C0)": {"C0": "1[0] / 1[0]", "C1": _Z, "C2": _Z, "C3": _Z},
        "IC(1_C1)": {"C0": "rho[0] / 1[1]", "C1": "1[2] / 1[2]", "C2": "1[2] / 1[2]", "C3": _Z},
        "IC(1_C2)": {"C0": "0 / 1[2] + 1[1]", "C1": "vartheta2[2] / 1[3]", "C2": "vartheta2[2] / 1[3]", "C3": _Z},
        "IC(1_C3)": {"C0": _Z, "C1": _Z, "C2": _Z, "C3": "1[4] / 1[4]"},
        "IC(rho_C3)": {
            "C0": "0 / 1[2] + vartheta3[2] + vartheta3^2[2]",
            "C1": "0 / vartheta3[3] + vartheta3^2[3]",
            "C2": "0 / vartheta3[3] + vartheta3^2[3]",
            "C3": "rho[4] / vartheta3[4] + vartheta3^2[4]",
        },
        "IC(eps_C3)": {"C0": "eps[0] / 1[2]", "C1": "1[2] / 1[3]", "C2": "1[2] / 1[3]", "C3": "eps[4] / 1[4]"},
    }),
}

CellDiff = namedtuple("CellDiff", "case sheaf sub_orbit printed computed")


def summary_diffs(case_id):
    """Cells where the printed summary disagrees with the computed one."""
    out = []
    for (p, so), printed in PRINTED_SUMMARY[case_id].items():
        computed = (lhs_cell(case_id, p, so), rhs_cell(case_id, p, so))
        if printed != computed:
            out.append(CellDiff(case_id, p, so, printed, computed))
    return out
