"""Langlands and ABV classification tables for unipotent representations.

Every family of parameters sits over one prehomogeneous space; the orbit
labels C0, C1, ... of that space are the sublabels a, b, ... of the
parameters, and each representation is attached to one simple perverse
sheaf (the Vogan bijection).  ABV coefficients are computed from the NEvs
tables and compared against literal transcriptions of the printed tables.
"""

from collections import namedtuple
from fractions import Fraction

from . import phv
from .exactnum import QValue, RootOfUnity
from .infclass import CASE_OF_INDEX, classify, standard_parameter
from .phv import MicroSheaf, P0, P1, P2, P3, P4

GROUPS = ("G2", "T", "GL2_short", "GL2_long", "SO4", "SO4_delta",
          "PGL3", "PGL3_delta", "PGL3_deltaPrime")

# the quasi-split group whose parameters a form shares
BASE_GROUP = {
    "G2": "G2", "T": "T", "GL2_short": "GL2_short", "GL2_long": "GL2_long",
    "SO4": "SO4", "SO4_delta": "SO4", "PGL3": "PGL3",
    "PGL3_delta": "PGL3", "PGL3_deltaPrime": "PGL3",
}

SUBLABELS = "abcd"


class InvalidParameter(ValueError):
    pass


class NotInPacket(KeyError):
    pass


class Repn(namedtuple("Repn", "group name fid sheaf")):
    """An irreducible representation of the form `group`, with its simple perverse sheaf."""

    __slots__ = ()

    def __str__(self):
        return self.name if self.group == "G2" else f"{self.group}:{self.name}"


FamilySpec = namedtuple("FamilySpec", "group fid phv reps defaults")


def _r(name, orbit, char="1", form=None):
    return (name, MicroSheaf(orbit, char), form)


def _spec(group, fid, cls, reps, defaults=()):
    out = []
    for name, sheaf, form in reps:
        out.append(Repn(form or group, name, fid, sheaf))
    return FamilySpec(group, fid, cls, tuple(out), dict(defaults))


_ONE = RootOfUnity(0)
_HALF = Fraction(1, 2)

FAMILIES = {}


def _add(spec):
    FAMILIES[(spec.group, spec.fid)] = spec


# G2, in orbit order; extra sheaves on the open orbit come last
_add(_spec("G2", "0", P0("1"), [_r("I(mu1 nu^a1 x mu2 nu^a2)", "C0")],
           {"u1": _ONE, "a1": Fraction(0), "u2": _ONE, "a2": Fraction(0)}))
_add(_spec("G2", "1", P1(), [_r("I_g2(a-1/2, mu.det)", "C0"), _r("I_g2(a-1/2, mu.St)", "C1")],
           {"u": _ONE, "a": _HALF}))
_add(_spec("G2", "2", P1(), [_r("I_g1(a-1/2, mu.det)", "C0"), _r("I_g1(a-1/2, mu.St)", "C1")],
           {"u": _ONE, "a": _HALF}))
_add(_spec("G2", "3", P2(1), [_r("I_g1(1/6, th3^n.det)", "C0"), _r("I_g1(1/6, th3^n.St)", "C1")],
           {"n": 0}))
_add(_spec("G2", "4", P3(2), [
    _r("J_g2(1, I(1 x th2))", "C0"), _r("J_g1(1/2, th2.St)", "C1"),
    _r("J_g2(1/2, th2.St)", "C2"), _r("pi(th2)", "C3"),
    _r("I0(G2[-1])", "C3", "vartheta2"),
]))
_add(_spec("G2", "5", P2(0), [_r("I_g2(3/2, 1)", "C0"), _r("I_g2(3/2, St)", "C1")]))
_add(_spec("G2", "6", P3(3), [
    _r("J_g2(1, I(th3 x th3^-1))", "C0"), _r("J_g1(1/2, th3^2.St)", "C1"),
    _r("J_g1(1/2, th3.St)", "C2"), _r("pi(th3)", "C3"),
    _r("I0(G2[th3])", "C3", "vartheta3"), _r("I0(G2[th3^2])", "C3", "vartheta3^2"),
]))
_add(_spec("G2", "7", P3(1), [
    _r("1_G2", "C0"), _r("J_g1(3/2, St)", "C1"), _r("J_g2(5/2, St)", "C2"), _r("St_G2", "C3"),
]))
_add(_spec("G2", "8", P4(), [
    _r("J_g2(1, I(1 x 1))", "C0"), _r("J_g1(1/2, St)", "C1"), _r("J_g2(1/2, St)", "C2"),
    _r("pi(1)'", "C3"), _r("pi(1)", "C3", "rho"), _r("I0(G2[1])", "C3", "eps"),
]))

# endoscopic groups
_add(_spec("T", "0", P0("1"), [_r("chi_T", "C0")], {"chi1": QValue(), "chi2": QValue()}))
for _g in ("GL2_short", "GL2_long"):
    _add(_spec(_g, "0", P0("1"), [_r("I(chi1,chi2)", "C0")], {"chi1": QValue(), "chi2": QValue()}))
    _add(_spec(_g, "1", P1(), [_r("chi.det", "C0"), _r("chi.St", "C1")], {"chi": QValue()}))
_add(_spec("SO4", "0", P0("1"), [_r("I_SO4(chi1,chi2)", "C0")], {"chi1": QValue(), "chi2": QValue()}))
_add(_spec("SO4", "0'", P0("Z2"), [_r("pi4", "C0"), _r("pi4'", "C0", "vartheta2")]))
_add(_spec("SO4", "1", P1(), [_r("I_b1(chi.det)", "C0"), _r("I_b1(chi.St)", "C1")], {"chi": QValue()}))
_add(_spec("SO4", "2", P1(), [_r("I_b2(chi.det)", "C0"), _r("I_b2(chi.St)", "C1")], {"chi": QValue()}))
_add(_spec("SO4", "3", P3(2), [
    _r("chi_SO4", "C0"), _r("J_b1(1/2, chi.St)", "C1"), _r("J_b2(1/2, chi.St)", "C2"),
    _r("St_SO4(chi)", "C3"), _r("chi_SO4delta", "C3", "vartheta2", "SO4_delta"),
], {"chi": _ONE}))
_add(_spec("PGL3", "0", P0("1"), [_r("I_PGL3(chi1,chi2)", "C0")], {"chi1": QValue(), "chi2": QValue()}))
_add(_spec("PGL3", "1", P1(), [_r("I_a1(chi.det x chi^-2)", "C0"), _r("I_a1(chi.St x chi^-2)", "C1")],
           {"chi": QValue()}))
_add(_spec("PGL3", "2", P1(), [
    _r("I_a1(chi nu^1/6.det x chi nu^-1/3)", "C0"), _r("I_a1(chi nu^1/6.St x chi nu^-1/3)", "C1"),
], {"chi": _ONE}))
_add(_spec("PGL3", "3", P3(3), [
    _r("chi_PGL3", "C0"), _r("chi.J_a1(nu, nu^-1/2 St)", "C1"), _r("chi.J_a1(nu^1/2 St, nu^-1)", "C2"),
    _r("chi.St_PGL3", "C3"), _r("chi_PGL3delta", "C3", "vartheta3", "PGL3_delta"),
    _r("chi_PGL3deltaPrime", "C3", "vartheta3^2", "PGL3_deltaPrime"),
], {"chi": _ONE}))


def family_spec(group, fid):
    key = (BASE_GROUP.get(group, group), str(fid))
    if key not in FAMILIES:
        raise InvalidParameter(f"no family {fid!r} for {group}")
    return FAMILIES[key]


def families(group="G2"):
    return [s for (g, _), s in FAMILIES.items() if g == group]


def all_repns(group="G2"):
    """Every representation of a group, including those of its pure inner forms."""
    return [r for s in families(BASE_GROUP[group]) for r in s.reps]


def repn(name, group="G2"):
    for s in families(BASE_GROUP[group]):
        for r in s.reps:
            if r.name == name:
                return r
    raise KeyError(f"unknown representation {name!r} of {group}")


# --- parameters -------------------------------------------------------------

class ParamFamily(namedtuple("ParamFamily", "group fid data")):
    """A family of parameters with its continuous data (a sorted tuple of pairs)."""

    __slots__ = ()

    @property
    def spec(self):
        return family_spec(self.group, self.fid)

    @property
    def phv(self):
        return self.spec.phv

    def get(self, key):
        return dict(self.data)[key]

    def sublabels(self):
        return [_sub(self.phv, o.label) for o in phv.orbits(self.phv)]

    def params(self):
        return [LParam(self, s) for s in self.sublabels()]

    def __str__(self):
        return f"{self.group}:{self.fid}"


def _sub(cls, orbit_label):
    if len(phv.orbits(cls)) == 1:
        return ""
    return SUBLABELS[int(orbit_label[1:])]


def _orbit_of(cls, sub):
    if sub == "":
        return "C0"
    return f"C{SUBLABELS.index(sub)}"


def param_family(group, fid, **data):
    spec = family_spec(group, fid)
    full = dict(spec.defaults)
    unknown = set(data) - set(full)
    if unknown:
        raise InvalidParameter(f"unexpected data {sorted(unknown)} for {group}:{fid}")
    full.update({k: _coerce(full[k], v) for k, v in data.items()})
    fam = ParamFamily(spec.group, spec.fid, tuple(sorted(full.items())))
    validate(fam)
    return fam


def _coerce(default, value):
    if isinstance(default, RootOfUnity) and isinstance(value, str):
        v = QValue.parse(value)
        if v.exp != 0:
            raise InvalidParameter(f"{value!r} is not a root of unity")
        return v.unit
    if isinstance(default, RootOfUnity) and not isinstance(value, RootOfUnity):
        return RootOfUnity(Fraction(value))
    if isinstance(default, QValue) and not isinstance(value, QValue):
        return QValue.parse(str(value))
    if isinstance(default, Fraction):
        return Fraction(value)
    if isinstance(default, int):
        return int(value)
    return value


_G2_CASE_DATA = {"0": ("u1", "a1", "u2", "a2"), "1": ("u", "a"), "2": ("u", "a"), "3": ("n",)}


def g2_lambda(fam):
    """lam(Fr) for a G2 family, via the standard representative."""
    case = CASE_OF_INDEX[int(fam.fid)]
    kw = {k: fam.get(k) for k in _G2_CASE_DATA.get(fam.fid, ())}
    return standard_parameter(case, **kw)


def validate(fam):
    d = dict(fam.data)
    if fam.group == "G2":
        if fam.fid == "3" and d["n"] not in (0, 1, 2):
            raise InvalidParameter("n must be 0, 1 or 2")
        case = CASE_OF_INDEX[int(fam.fid)]
        got = classify(g2_lambda(fam)).case_id
        if got != case:
            raise InvalidParameter(f"data {d} gives case {got}, not {case}")
        return
    if fam.group == "SO4" and fam.fid == "3" and d["chi"].order not in (1, 2):
        raise InvalidParameter("chi must have order dividing 2")
    if fam.group == "PGL3" and fam.fid in ("2", "3") and d["chi"].order not in (1, 3):
        raise InvalidParameter("chi must have order dividing 3")


class LParam(namedtuple("LParam", "family sub")):
    __slots__ = ()

    @property
    def group(self):
        return self.family.group

    @property
    def label(self):
        return f"{self.family.fid}{self.sub}"

    @property
    def orbit(self):
        return _orbit_of(self.family.phv, self.sub)

    @property
    def orbit_data(self):
        return phv.orbit(self.family.phv, self.orbit)

    @property
    def dim(self):
        return self.orbit_data.dim

    @property
    def a_phi(self):
        return self.orbit_data.a_c

    @property
    def a_abv(self):
        return self.orbit_data.a_abv

    @property
    def is_open(self):
        return self.orbit_data.is_open

    @property
    def is_closed(self):
        return self.orbit_data.is_closed

    @property
    def is_elliptic(self):
        return self.group == "G2" and self.label in ELLIPTIC

    @property
    def arthur(self):
        return is_arthur(self)

    def __str__(self):
        return f"{self.group}:{self.label}"


def lparam(spec_text=None, group="G2", label=None, **data):
    """Build a parameter from 'G2:4d' or ('G2', '4d')."""
    if spec_text is not None:
        group, _, label = spec_text.partition(":")
    label = str(label)
    fid, sub = label, ""
    if label[-1:] in SUBLABELS and len(label) > 1:
        fid, sub = label[:-1], label[-1]
    fam = param_family(group, fid, **data)
    if sub not in fam.sublabels():
        raise InvalidParameter(f"{group}:{fid} has no parameter {label!r}")
    return LParam(fam, sub)


def g2_params():
    """The 25 G2 parameters with default continuous data."""
    out = []
    for i in range(9):
        out.extend(param_family("G2", str(i)).params())
    return out


# --- Vogan bijection, packets and coefficients -------------------------------

def vogan_bijection(fam):
    return {r: r.sheaf for r in fam.spec.reps}


def abv_character(phi, r):
    """NEvs(P(r)) at the orbit of phi, as {character: multiplicity}; empty if r is outside the packet."""
    return phv.nevs(phi.family.phv, r.sheaf).get(phi.orbit, {})


def _single(rep):
    if sum(rep.values()) != 1:
        raise ValueError(f"expected an irreducible character, got {rep}")
    return next(iter(rep))


def abv_packet(phi):
    out = []
    for r in phi.family.spec.reps:
        rep = abv_character(phi, r)
        if rep:
            out.append((r, _single(rep)))
    return out


def l_packet(phi):
    return [(r, r.sheaf.char) for r in phi.family.spec.reps if r.sheaf.orbit == phi.orbit]


def coronal(phi):
    inside = {r for r, _ in l_packet(phi)}
    return [(r, ch) for r, ch in abv_packet(phi) if r not in inside]


def pure_l_packet(phi, form=None):
    out = l_packet(phi)
    return out if form is None else [(r, ch) for r, ch in out if r.group == form]


def coefficient(phi, s, r):
    """<s, r> for r in the ABV packet of phi, computed from the NEvs table."""
    rep = abv_character(phi, r)
    if not rep:
        raise NotInPacket(f"{r} is not in the ABV packet of {phi}")
    got = phv.trace(phi.a_abv, rep, s)
    lit = _literal_character(phi, r)
    if lit is not None and phi.a_abv.value(lit, s) != got:
        raise AssertionError(f"table and computation disagree at {phi}, {r}")
    return got


def classes(phi):
    return list(phi.a_abv.classes)


# A_phi -> A^ABV_phi: identity when the groups agree, trivial inclusion otherwise
def component_map(phi):
    if phi.a_phi.order == phi.a_abv.order:
        return {c: c for c in phi.a_phi.classes}
    return {"1": "1"}


def llc_character(phi, r):
    for x, ch in l_packet(phi):
        if x == r:
            return ch
    raise NotInPacket(f"{r} is not in the L-packet of {phi}")


def check_llc_extension(phi):
    """ABV character of every member of the L-packet restricts to its LLC character."""
    for r, ch in l_packet(phi):
        abv = _single(abv_character(phi, r))
        for c_phi, c_abv in component_map(phi).items():
            if phi.a_phi.value(ch, c_phi) != phi.a_abv.value(abv, c_abv):
                return False
    return True


def is_bijective(phi):
    chars = [ch for _, ch in abv_packet(phi)]
    return sorted(chars) == sorted(phi.a_abv.char_names())


# --- literal tables ----------------------------------------------------------

# ABV table for G2 as printed: parameter -> {representation: character}
ABV_TABLE = {
    "0": {"I(mu1 nu^a1 x mu2 nu^a2)": "1"},
    "1a": {"I_g2(a-1/2, mu.det)": "1"},
    "1b": {"I_g2(a-1/2, mu.St)": "1"},
    "2a": {"I_g1(a-1/2, mu.det)": "1"},
    "2b": {"I_g1(a-1/2, mu.St)": "1"},
    "3a": {"I_g1(1/6, th3^n.det)": "1"},
    "3b": {"I_g1(1/6, th3^n.St)": "1"},
    "4a": {"J_g2(1, I(1 x th2))": "1", "I0(G2[-1])": "vartheta2"},
    "4b": {"J_g1(1/2, th2.St)": "1", "I0(G2[-1])": "vartheta2"},
    "4c": {"J_g2(1/2, th2.St)": "1", "I0(G2[-1])": "vartheta2"},
    "4d": {"pi(th2)": "1", "I0(G2[-1])": "vartheta2"},
    "5a": {"I_g2(3/2, 1)": "1"},
    "5b": {"I_g2(3/2, St)": "1"},
    "6a": {"J_g2(1, I(th3 x th3^-1))": "1", "I0(G2[th3])": "vartheta3", "I0(G2[th3^2])": "vartheta3^2"},
    "6b": {"J_g1(1/2, th3^2.St)": "1", "I0(G2[th3])": "vartheta3", "I0(G2[th3^2])": "vartheta3^2"},
    "6c": {"J_g1(1/2, th3.St)": "1", "I0(G2[th3])": "vartheta3", "I0(G2[th3^2])": "vartheta3^2"},
    "6d": {"pi(th3)": "1", "I0(G2[th3])": "vartheta3", "I0(G2[th3^2])": "vartheta3^2"},
    "7a": {"1_G2": "1"},
    "7b": {"J_g1(3/2, St)": "1"},
    "7c": {"J_g2(5/2, St)": "1"},
    "7d": {"St_G2": "1"},
    "8a": {"J_g2(1, I(1 x 1))": "1", "J_g1(1/2, St)": "rho", "I0(G2[1])": "eps"},
    "8b": {"J_g1(1/2, St)": "1", "J_g2(1/2, St)": "vartheta2", "I0(G2[1])": "1"},
    "8c": {"J_g2(1/2, St)": "1", "pi(1)": "vartheta2", "I0(G2[1])": "vartheta2"},
    "8d": {"pi(1)'": "1", "pi(1)": "rho", "I0(G2[1])": "eps"},
}

# LLC table for G2: parameter -> {representation: character of A_phi}
LLC_TABLE = {
    "0": {"I(mu1 nu^a1 x mu2 nu^a2)": "1"},
    "1a": {"I_g2(a-1/2, mu.det)": "1"}, "1b": {"I_g2(a-1/2, mu.St)": "1"},
    "2a": {"I_g1(a-1/2, mu.det)": "1"}, "2b": {"I_g1(a-1/2, mu.St)": "1"},
    "3a": {"I_g1(1/6, th3^n.det)": "1"}, "3b": {"I_g1(1/6, th3^n.St)": "1"},
    "4a": {"J_g2(1, I(1 x th2))": "1"}, "4b": {"J_g1(1/2, th2.St)": "1"},
    "4c": {"J_g2(1/2, th2.St)": "1"}, "4d": {"pi(th2)": "1", "I0(G2[-1])": "vartheta2"},
    "5a": {"I_g2(3/2, 1)": "1"}, "5b": {"I_g2(3/2, St)": "1"},
    "6a": {"J_g2(1, I(th3 x th3^-1))": "1"}, "6b": {"J_g1(1/2, th3^2.St)": "1"},
    "6c": {"J_g1(1/2, th3.St)": "1"},
    "6d": {"pi(th3)": "1", "I0(G2[th3])": "vartheta3", "I0(G2[th3^2])": "vartheta3^2"},
    "7a": {"1_G2": "1"}, "7b": {"J_g1(3/2, St)": "1"}, "7c": {"J_g2(5/2, St)": "1"}, "7d": {"St_G2": "1"},
    "8a": {"J_g2(1, I(1 x 1))": "1"}, "8b": {"J_g1(1/2, St)": "1"}, "8c": {"J_g2(1/2, St)": "1"},
    "8d": {"pi(1)'": "1", "pi(1)": "rho", "I0(G2[1])": "eps"},
}

# coefficient tables for the family with an order-n torus case on the endoscopic groups
SO4_COEFFS = {
    "3a": {"chi_SO4": "1", "chi_SO4delta": "vartheta2"},
    "3b": {"J_b1(1/2, chi.St)": "1", "chi_SO4delta": "vartheta2"},
    "3c": {"J_b2(1/2, chi.St)": "1", "chi_SO4delta": "vartheta2"},
    "3d": {"St_SO4(chi)": "1", "chi_SO4delta": "vartheta2"},
}
PGL3_COEFFS = {
    "3a": {"chi_PGL3": "1", "chi_PGL3delta": "vartheta3", "chi_PGL3deltaPrime": "vartheta3^2"},
    "3b": {"chi.J_a1(nu, nu^-1/2 St)": "1", "chi_PGL3delta": "vartheta3", "chi_PGL3deltaPrime": "vartheta3^2"},
    "3c": {"chi.J_a1(nu^1/2 St, nu^-1)": "1", "chi_PGL3delta": "vartheta3",
           "chi_PGL3deltaPrime": "vartheta3^2"},
    "3d": {"chi.St_PGL3": "1", "chi_PGL3delta": "vartheta3", "chi_PGL3deltaPrime": "vartheta3^2"},
}
SO4_ZERO_PRIME = {"0'": {"pi4": "1", "pi4'": "vartheta2"}}

LITERAL_TABLES = {("G2", None): ABV_TABLE, ("SO4", "3"): SO4_COEFFS, ("PGL3", "3"): PGL3_COEFFS,
                  ("SO4", "0'"): SO4_ZERO_PRIME}


def _literal_character(phi, r):
    if phi.group == "G2":
        table = ABV_TABLE
    else:
        table = LITERAL_TABLES.get((phi.group, phi.family.fid))
        if table is None:
            return None
    col = table.get(phi.label, {})
    return col.get(r.name)


def literal_column(phi):
    if phi.group == "G2":
        return dict(ABV_TABLE[phi.label])
    table = LITERAL_TABLES.get((phi.group, phi.family.fid))
    if table is None:
        return None
    return dict(table[phi.label])


def table_diffs(group="G2"):
    """(parameter, representation, literal, computed) wherever the two tables differ."""
    out = []
    for fam in families(group):
        pf = param_family(group, fam.fid)
        for phi in pf.params():
            lit = literal_column(phi)
            if lit is None:
                continue
            got = {r.name: ch for r, ch in abv_packet(phi)}
            for name in sorted(set(lit) | set(got)):
                if lit.get(name) != got.get(name):
                    out.append((phi.label, name, lit.get(name), got.get(name)))
    return out


def llc_diffs():
    out = []
    for phi in g2_params():
        got = {r.name: ch for r, ch in l_packet(phi)}
        if got != LLC_TABLE[phi.label]:
            out.append((phi.label, LLC_TABLE[phi.label], got))
    return out


def non_singleton_l_packets():
    return {phi.label: len(l_packet(phi)) for phi in g2_params() if len(l_packet(phi)) > 1}


# --- per-parameter properties ------------------------------------------------

ELLIPTIC = frozenset({"4d", "6d", "7d", "8d"})

MINIMAL_ENDOSCOPIC = {
    "0": ("T",), "1a": ("T",), "1b": ("GL2_short",), "2a": ("T",), "2b": ("GL2_long",),
    "3a": ("T",), "3b": ("GL2_long",),
    "4a": ("T",), "4b": ("GL2_long",), "4c": ("GL2_short",), "4d": ("SO4",),
    "5a": ("T",), "5b": ("GL2_short",),
    "6a": ("T",), "6b": ("GL2_long",), "6c": ("GL2_long",), "6d": ("PGL3",),
    "7a": ("T",), "7b": ("GL2_long",), "7c": ("GL2_short",), "7d": ("G2",),
    "8a": ("T",), "8b": ("GL2_long",), "8c": ("GL2_short",), "8d": ("SO4", "PGL3"),
}

# class of s_psi in A^ABV for the Arthur-type G2 parameters with non-trivial A^ABV
S_PSI = {
    "4a": "1", "4b": "theta2", "4c": "theta2", "4d": "1",
    "6a": "1", "6d": "1",
    "8a": "1", "8b": "theta2", "8c": "theta2", "8d": "1",
}

_ALWAYS = {"4", "8", "6a", "6d", "7a", "7d"}
_NEVER = {"3", "5", "6b", "6c", "7b", "7c"}


def is_arthur(phi):
    lab, fid, d = phi.label, phi.family.fid, dict(phi.family.data)
    g = phi.group
    if g == "G2":
        if fid in _ALWAYS or lab in _ALWAYS:
            return True
        if fid in _NEVER or lab in _NEVER:
            return False
        if fid == "0":
            return d["a1"] == 0 and d["a2"] == 0
        return d["a"] == _HALF
    if g == "PGL3" and fid == "3":
        return phi.sub in ("a", "d")
    if g == "PGL3" and fid == "2":
        return False
    if fid in ("3", "0'"):
        return True
    # unitary characters
    return all(v.exp == 0 for v in d.values() if isinstance(v, QValue))


def s_psi(phi):
    if not is_arthur(phi):
        raise ValueError(f"{phi} is not of Arthur type")
    if phi.group != "G2":
        return "1"
    return S_PSI.get(phi.label, "1")


Properties = namedtuple("Properties", "open closed tempered_bounded elliptic arthur dim minimal_endoscopic_groups")


def properties(phi):
    tempered = phi.group == "G2" and phi.is_open and phi.label in ELLIPTIC
    return Properties(
        phi.is_open, phi.is_closed, tempered, phi.is_elliptic, is_arthur(phi), phi.dim,
        MINIMAL_ENDOSCOPIC.get(phi.label) if phi.group == "G2" else None,
    )


# --- Aubert duality ----------------------------------------------------------

_AUBERT_SUB = {"a": "d", "d": "a", "b": "c", "c": "b"}


def aubert_dual(phi):
    if phi.group != "G2":
        raise ValueError("Aubert duality is only tabulated for G2")
    fam = phi.family
    if phi.sub == "":
        return phi
    if fam.phv.kind in ("P1", "P2"):
        return LParam(fam, "b" if phi.sub == "a" else "a")
    return LParam(fam, _AUBERT_SUB[phi.sub])


# representation-level Aubert involution, from the parameter pairing and the tables
AUBERT_REPN = {
    "I(mu1 nu^a1 x mu2 nu^a2)": "I(mu1 nu^a1 x mu2 nu^a2)",
    "I_g2(a-1/2, mu.det)": "I_g2(a-1/2, mu.St)",
    "I_g1(a-1/2, mu.det)": "I_g1(a-1/2, mu.St)",
    "I_g1(1/6, th3^n.det)": "I_g1(1/6, th3^n.St)",
    "J_g2(1, I(1 x th2))": "pi(th2)", "J_g1(1/2, th2.St)": "J_g2(1/2, th2.St)",
    "I0(G2[-1])": "I0(G2[-1])",
    "I_g2(3/2, 1)": "I_g2(3/2, St)",
    "J_g2(1, I(th3 x th3^-1))": "pi(th3)", "J_g1(1/2, th3^2.St)": "J_g1(1/2, th3.St)",
    "I0(G2[th3])": "I0(G2[th3])", "I0(G2[th3^2])": "I0(G2[th3^2])",
    "1_G2": "St_G2", "J_g1(3/2, St)": "J_g2(5/2, St)",
    "J_g2(1, I(1 x 1))": "pi(1)'", "J_g1(1/2, St)": "pi(1)",
    "J_g2(1/2, St)": "J_g2(1/2, St)", "I0(G2[1])": "I0(G2[1])",
}
for _k, _v in list(AUBERT_REPN.items()):
    AUBERT_REPN.setdefault(_v, _k)


def aubert_dual_repn(r):
    return repn(AUBERT_REPN[r.name], r.group)


def aubert_fourier_mismatches(printed=False):
    """Representations where vogan(aubert(r)) differs from fourier(vogan(r))."""
    out = []
    for spec in families("G2"):
        table = phv.fourier_table(spec.phv, printed=printed)
        for r in spec.reps:
            if aubert_dual_repn(r).sheaf != table[r.sheaf]:
                out.append(r)
    return out


def parameter_of(r):
    """The G2 (or endoscopic) parameter whose L-packet contains r, with default data."""
    fam = param_family(BASE_GROUP[r.group], r.fid)
    return LParam(fam, _sub(fam.phv, r.sheaf.orbit))


def is_spherical(r):
    phi = parameter_of(r)
    return phi.is_closed and r.sheaf.char == "1"


def is_generic(r):
    phi = parameter_of(r)
    return phi.is_open and r.sheaf.char == "1"


# unitarity of G2 unipotent representations at the default data, as used for
# the Arthur/unitary comparison
UNITARY = {
    "I(mu1 nu^a1 x mu2 nu^a2)": True,
    "I_g2(a-1/2, mu.det)": True, "I_g2(a-1/2, mu.St)": True,
    "I_g1(a-1/2, mu.det)": True, "I_g1(a-1/2, mu.St)": True,
    "I_g1(1/6, th3^n.det)": False, "I_g1(1/6, th3^n.St)": False,
    "J_g2(1, I(1 x th2))": True, "J_g1(1/2, th2.St)": True, "J_g2(1/2, th2.St)": True,
    "pi(th2)": True, "I0(G2[-1])": True,
    "I_g2(3/2, 1)": False, "I_g2(3/2, St)": False,
    "J_g2(1, I(th3 x th3^-1))": True, "J_g1(1/2, th3^2.St)": False, "J_g1(1/2, th3.St)": False,
    "pi(th3)": True, "I0(G2[th3])": True, "I0(G2[th3^2])": True,
    "1_G2": True, "J_g1(3/2, St)": False, "J_g2(5/2, St)": False, "St_G2": True,
    "J_g2(1, I(1 x 1))": True, "J_g1(1/2, St)": True, "J_g2(1/2, St)": True,
    "pi(1)'": True, "pi(1)": True, "I0(G2[1])": True,
}


def is_arthur_repn(r):
    """r lies in the ABV packet of some Arthur-type parameter."""
    fam = param_family(BASE_GROUP[r.group], r.fid)
    return any(is_arthur(phi) and abv_character(phi, r) for phi in fam.params())


def arthur_unitary_mismatches():
    out = []
    for r in all_repns("G2"):
        a = is_arthur_repn(r)
        if a != UNITARY[r.name] or a != is_arthur(parameter_of(r)):
            out.append(r)
    return out


# --- endoscopic tables -------------------------------------------------------

def endoscopic_tables(group):
    """LLC, ABV and coefficient tables for an endoscopic group, at default data."""
    base = BASE_GROUP[group]
    if base == "G2":
        raise ValueError("use the G2 tables directly")
    out = {}
    for spec in families(base):
        pf = param_family(base, spec.fid)
        for phi in pf.params():
            out[str(phi)] = {
                "l_packet": [(str(r), ch) for r, ch in l_packet(phi)],
                "abv_packet": [(str(r), ch) for r, ch in abv_packet(phi)],
                "a_abv": phi.a_abv.name,
                "arthur": is_arthur(phi),
            }
    return out


def coefficient_matrix(phi):
    """{representation: {class: value}} over the ABV packet."""
    return {r: {c: coefficient(phi, c, r) for c in classes(phi)} for r, _ in abv_packet(phi)}
