"""Endoscopic triples for G2, lifting of parameters and of stable distributions.

Each triple is (H, s, xi) with s a semisimple element of the dual group and H
its centralizer.  A parameter of H gives a parameter of G2 through the
embedding of dual groups; which G2 parameter comes out, and whether xi is
conormal there, is read off from one lifting table per (triple, H-family).
"""

from collections import namedtuple
from fractions import Fraction

from . import packets, phv, subphv
from .distributions import VirtualChar, combine, theta
from .exactnum import QValue, RootOfUnity
from .infclass import FAMILY_INDEX, classify, h_group
from .rootdata import m


class NotConormal(ValueError):
    pass


class NoLift(ValueError):
    pass


class NotRelevant(ValueError):
    pass


EndoTriple = namedtuple("EndoTriple", "name group s centralizer")

_I = RootOfUnity.of(4)
_TH3 = RootOfUnity.of(3)
_ONE = RootOfUnity(0)
_MINUS = RootOfUnity(Fraction(1, 2))


def _u(r):
    return QValue(r, 0)


TRIPLES = {
    "T_reg": EndoTriple("T_reg", "T", m(_u(RootOfUnity.of(12)), _u(_I)), "DualTorus"),
    "A1_short": EndoTriple("A1_short", "GL2_short", m(_u(_I), _u(_I)), "GL2"),
    "A1_long": EndoTriple("A1_long", "GL2_long", m(_u(_MINUS), _u(_I)), "GL2"),
    "D2": EndoTriple("D2", "SO4", m(_u(_ONE), _u(_MINUS)), "SO4sub"),
    "A2": EndoTriple("A2", "PGL3", m(_u(_TH3 ** 2), _u(_TH3)), "SL3"),
    "G2_triv": EndoTriple("G2_triv", "G2", m(_u(_ONE), _u(_ONE)), "G2dual"),
}


def endo_triples():
    return list(TRIPLES.values())


def triple(name):
    if name not in TRIPLES:
        raise KeyError(f"unknown endoscopic triple {name!r}")
    return TRIPLES[name]


def centralizer_kind(t):
    return h_group(t.s).kind


# --- the lifting table ------------------------------------------------------------

LiftRow = namedtuple("LiftRow", "arthur regular irregular")

_A_ALL = ("1a", "2a", "3a", "4a", "5a", "6a", "7a", "8a")

LIFT_TABLE = {
    ("T_reg", "0"): LiftRow(("0",), (), _A_ALL),
    ("A1_short", "0"): LiftRow(("0",), (), _A_ALL),
    ("A1_short", "1a"): LiftRow(("1a",), ("5a",), ("4a", "7a", "8a")),
    ("A1_short", "1b"): LiftRow(("1b",), ("5b",), ("4c", "7c", "8c")),
    ("A1_long", "0"): LiftRow(("0",), (), _A_ALL),
    ("A1_long", "1a"): LiftRow(("2a",), ("3a",), ("4a", "6a", "7a", "8a")),
    ("A1_long", "1b"): LiftRow(("2b",), ("3b",), ("4b", "6b", "7b", "8b")),
    ("D2", "0"): LiftRow(("0",), (), _A_ALL),
    ("D2", "0'"): LiftRow(("0",), (), ()),
    ("D2", "1a"): LiftRow(("1a",), ("5a",), ("7a",)),
    ("D2", "1b"): LiftRow(("1b",), ("5b",), ("7c",)),
    ("D2", "2a"): LiftRow(("2a",), ("3a",), ("6a", "7a")),
    ("D2", "2b"): LiftRow(("2b",), ("3b",), ("6b", "7b")),
    ("D2", "3a"): LiftRow(("4a", "8a"), (), ()),
    ("D2", "3b"): LiftRow(("4b", "8b"), (), ()),
    ("D2", "3c"): LiftRow(("4c", "8c"), (), ()),
    ("D2", "3d"): LiftRow(("4d", "8d"), (), ()),
    ("A2", "0"): LiftRow(("0",), (), ("1a", "5a")),
    ("A2", "1a"): LiftRow(("2a",), (), ("4a", "7a")),
    ("A2", "1b"): LiftRow(("2b",), (), ("4b", "7b")),
    ("A2", "2a"): LiftRow((), ("3a",), ()),
    ("A2", "2b"): LiftRow((), ("3b",), ()),
    ("A2", "3a"): LiftRow(("6a", "8a"), (), ()),
    ("A2", "3b"): LiftRow((), ("6b",), ("8b",)),
    ("A2", "3c"): LiftRow((), ("6c",), ("8b",)),
    ("A2", "3d"): LiftRow(("6d", "8d"), (), ()),
}


def _row_key(tri, endo_phi):
    lab = endo_phi.label
    if endo_phi.family.fid in ("0", "0'"):
        lab = endo_phi.family.fid
    return (tri.name, lab)


def lift_row(tri, endo_phi):
    key = _row_key(tri, endo_phi)
    if key not in LIFT_TABLE:
        raise NoLift(f"no lifting data for {endo_phi} along {tri.name}")
    return LIFT_TABLE[key]


def triples_for(phi):
    """Minimal endoscopic groups of a G2 parameter."""
    label = phi if isinstance(phi, str) else phi.label
    return packets.MINIMAL_ENDOSCOPIC[label]


def lift_rows_for(label):
    """Triples (with H-parameter labels) whose lifting row contains the G2 parameter `label`."""
    out = []
    for (name, h_label), row in LIFT_TABLE.items():
        if label in row.arthur + row.regular + row.irregular:
            out.append((name, h_label))
    return out


# --- embeddings of endoscopic parameters ------------------------------------------

_HALF = QValue.q(Fraction(1, 2))
_Q = QValue.q()


def _chi(phi, key):
    v = phi.family.get(key)
    return v if isinstance(v, QValue) else QValue(v, 0)


def endoscopic_lambda(endo_phi):
    """lam(Fr) of the composed G2 parameter, in the coordinates m(x, y)."""
    g, fid = endo_phi.group, endo_phi.family.fid
    if g in ("T", "GL2_short") and fid == "0":
        return m(_chi(endo_phi, "chi1"), _chi(endo_phi, "chi2"))
    if g in ("GL2_long", "SO4", "PGL3") and fid == "0":
        c1, c2 = _chi(endo_phi, "chi1"), _chi(endo_phi, "chi2")
        return m(c1 * c2, c1)
    if g == "SO4" and fid == "0'":
        return m(_u(_MINUS), _u(_MINUS))
    w = _chi(endo_phi, "chi")
    if g == "GL2_short":
        return m(w * _HALF, w / _HALF)
    if g in ("GL2_long", "SO4") and fid in ("1", "2"):
        if g == "SO4" and fid == "1":
            return m(_Q, w * _HALF)
        return m(w ** 2, w * _HALF)
    if g == "SO4" and fid == "3":
        return m(_Q, w * _Q)
    if g == "PGL3":
        if fid == "1":
            return m(w ** 2, w * _HALF)
        if fid == "2":
            return m(w ** 2 * QValue.q(Fraction(1, 3)), w * QValue.q(Fraction(2, 3)))
        if fid == "3":
            return m(w ** 2 * _Q, w * _Q)
    raise NoLift(f"no embedding for {endo_phi}")


def _g2_data(fid, t):
    x, y = t.x, t.y
    if fid == "0":
        return {"u1": x.unit, "a1": x.exp, "u2": y.unit, "a2": y.exp}
    if fid == "1":
        return {"u": y.unit, "a": y.exp}
    if fid == "2":
        return {"u": x.unit, "a": x.exp}
    if fid == "3":
        return {"n": int(x.unit.frac * 3) % 3}
    return {}


def lift_parameter(tri, endo_phi):
    """The G2 parameter obtained from an H-parameter through the triple."""
    if isinstance(tri, str):
        tri = triple(tri)
    if tri.group != packets.BASE_GROUP[endo_phi.group]:
        raise NoLift(f"{endo_phi} is not a parameter of {tri.group}")
    row = lift_row(tri, endo_phi)
    c = classify(endoscopic_lambda(endo_phi))
    fid = str(FAMILY_INDEX[c.case_id])
    hits = [lab for lab in row.arthur + row.regular + row.irregular
            if lab.rstrip("abcd") == fid]
    if len(hits) != 1:
        raise NoLift(f"{endo_phi} gives family {fid}, not in its lifting row {row}")
    return packets.lparam(group="G2", label=hits[0], **_g2_data(fid, c.frobenius))


def is_xi_conormal(tri, endo_phi):
    if isinstance(tri, str):
        tri = triple(tri)
    row = lift_row(tri, endo_phi)
    return lift_parameter(tri, endo_phi).label in row.arthur + row.regular


LiftRecord = namedtuple("LiftRecord", "triple source target xi_conormal arthur relative_dim")


def lift_record(tri, endo_phi):
    if isinstance(tri, str):
        tri = triple(tri)
    target = lift_parameter(tri, endo_phi)
    return LiftRecord(tri.name, str(endo_phi), target.label, is_xi_conormal(tri, endo_phi),
                      packets.is_arthur(endo_phi), target.dim - endo_phi.dim)


# --- geometry of a lift ----------------------------------------------------------

LiftGeometry = namedtuple("LiftGeometry", "kind sub_case amb_class sub_class")


def _generator(cls):
    if cls.kind == "P3" and cls.n > 1:
        return phv.cyclic_class(cls.n, 1)
    return "1"


def lift_geometry(tri, endo_phi, target):
    """How V_H sits in V for this lift: the same space, or one of the fixed-point sub-cases."""
    h, g = endo_phi.family.phv, target.family.phv
    if h.kind == g.kind and (h.kind != "P3" or h.n == g.n) and h.kind != "P0":
        s = _generator(g)
        return LiftGeometry("iso", None, s, s)
    if h.kind == "P0" and g.kind == "P0":
        return LiftGeometry("iso", None, "1", "1")
    if h.kind == "P1" and g.kind == "P2":
        return LiftGeometry("fixed", "P2ii", "1", "1")
    if g.kind == "P4" and h.kind == "P3":
        cid = "P4iv" if h.n == 2 else "P4v"
        so = subphv.get(cid).orbit_map[endo_phi.orbit]
        if not so.conormal:
            raise NotConormal(f"{endo_phi.orbit} is not conormal in {cid}")
        return LiftGeometry("fixed", cid, so.amb_class, so.sub_class)
    raise NotConormal(f"no conormal geometry from {h} to {g}")


def expected_orbit(tri, endo_phi, target):
    """The orbit of the lift predicted by saturation."""
    geo = lift_geometry(tri, endo_phi, target)
    if geo.kind == "iso":
        return endo_phi.orbit
    return subphv.get(geo.sub_case).orbit_map[endo_phi.orbit].saturation


LiftResult = namedtuple("LiftResult", "triple source target s_class distribution agrees")


def _sign(n):
    return 1 if n % 2 == 0 else -1


def lift_distribution(tri, endo_phi):
    """Lift of the stable distribution of an H-parameter, computed by restriction of sheaves.

    The coefficient of Theta_pi is the alternating trace of s on the microlocal
    stalks of the restricted sheaf at the orbit of the H-parameter; it is
    compared with Theta_{phi,s} evaluated on G2.
    """
    if isinstance(tri, str):
        tri = triple(tri)
    target = lift_parameter(tri, endo_phi)
    if not is_xi_conormal(tri, endo_phi):
        raise NotConormal(f"{endo_phi} does not lift conormally along {tri.name}")
    source = theta(endo_phi, "1")
    if endo_phi.family.phv.kind == "P0":
        # V = V_H = 0: the stable distribution goes to the single member of the lift
        (r, _), = packets.abv_packet(target)
        dist = VirtualChar.basis(r)
        return LiftResult(tri.name, endo_phi.label, target.label, "1", dist, dist == theta(target))
    geo = lift_geometry(tri, endo_phi, target)
    amb = target.family.phv
    sub = amb if geo.kind == "iso" else subphv.get(geo.sub_case).sub
    c_sub = endo_phi.orbit
    d_sub = phv.dim(sub, c_sub)
    sub_group = phv.orbit(sub, c_sub).a_abv
    out = {}
    for r in target.family.spec.reps:
        pieces = [(r.sheaf, 0)] if geo.kind == "iso" else subphv.restrict(geo.sub_case, r.sheaf)
        total = phv.ZERO
        for obj, sh in pieces:
            rep = subphv.nevs_object(sub, obj).get(c_sub, {})
            if rep:
                d_pi = phv.dim(amb, r.sheaf.orbit)
                total = total + phv.trace(sub_group, rep, geo.sub_class) * _sign(sh + d_sub - d_pi)
        out[r] = total
    dist = VirtualChar(out)
    return LiftResult(tri.name, endo_phi.label, target.label, geo.amb_class, dist,
                      dist == theta(target, geo.amb_class))


def check_lift_orbit(tri, endo_phi):
    """For conormal lifts, the tabulated G2 parameter sits on the orbit predicted by geometry."""
    if isinstance(tri, str):
        tri = triple(tri)
    target = lift_parameter(tri, endo_phi)
    if not is_xi_conormal(tri, endo_phi) or endo_phi.family.phv.kind == "P0":
        return True
    return expected_orbit(tri, endo_phi, target) == target.orbit


def lifting_report():
    """(triple, H-parameter, G2 parameter, conormal, orbit ok, distribution ok) for every row."""
    out = []
    for (name, h_label) in LIFT_TABLE:
        tri = triple(name)
        for endo_phi in _representatives(tri, h_label):
            target = lift_parameter(tri, endo_phi)
            conormal = is_xi_conormal(tri, endo_phi)
            orbit_ok = check_lift_orbit(tri, endo_phi)
            dist_ok = lift_distribution(tri, endo_phi).agrees if conormal else None
            out.append((name, str(endo_phi), target.label, conormal, orbit_ok, dist_ok))
    return out


# H-parameters used to exercise each lifting row; continuous data chosen so the
# composed parameter lands in the listed G2 family
_REPRESENTATIVE_DATA = {
    ("T", "0"): [{"chi1": "q", "chi2": "q"}, {"chi1": "1", "chi2": "1"}, {"chi1": "q^2", "chi2": "q"}],
    ("GL2_short", "0"): [{"chi1": "1", "chi2": "1"}, {"chi1": "q", "chi2": "q^2"}],
    ("GL2_long", "0"): [{"chi1": "1", "chi2": "1"}],
    ("SO4", "0"): [{"chi1": "1", "chi2": "1"}],
    ("PGL3", "0"): [{"chi1": "1", "chi2": "1"}, {"chi1": "q", "chi2": "q"}],
    ("GL2_short", "1"): [{"chi": "1"}, {"chi": "q^(1/2)"}, {"chi": "q^(3/2)"}, {"chi": "-q^(1/2)"}],
    ("GL2_long", "1"): [{"chi": "1"}, {"chi": "q^(1/6)"}, {"chi": "q^(1/2)"}, {"chi": "q^(3/2)"}],
    ("SO4", "1"): [{"chi": "1"}, {"chi": "q^(3/2)"}, {"chi": "q^(1/2)"}],
    ("SO4", "2"): [{"chi": "1"}, {"chi": "q^(1/6)"}, {"chi": "q^(1/2)"}],
    ("PGL3", "1"): [{"chi": "1"}, {"chi": "q^(1/2)"}],
    ("PGL3", "2"): [{"chi": 0}],
    ("SO4", "3"): [{"chi": Fraction(1, 2)}, {"chi": 0}],
    ("PGL3", "3"): [{"chi": Fraction(1, 3)}, {"chi": 0}],
}


def _representatives(tri, h_label):
    fid = h_label if h_label in ("0", "0'") else h_label[:-1]
    out = []
    for d in _REPRESENTATIVE_DATA.get((tri.group, fid), [{}]):
        try:
            phi = packets.lparam(group=tri.group, label=h_label, **d)
            lift_parameter(tri, phi)
        except (packets.InvalidParameter, NoLift):
            continue
        out.append(phi)
    return out


# --- pure inner forms ---------------------------------------------------------------

PureInnerForm = namedtuple("PureInnerForm", "name base split_rank quasi_split_rank")

INNER_FORMS = {
    "SO4": PureInnerForm("SO4", "SO4", 2, 2),
    "SO4_delta": PureInnerForm("SO4_delta", "SO4", 0, 2),
    "PGL3": PureInnerForm("PGL3", "PGL3", 2, 2),
    "PGL3_delta": PureInnerForm("PGL3_delta", "PGL3", 0, 2),
    "PGL3_deltaPrime": PureInnerForm("PGL3_deltaPrime", "PGL3", 0, 2),
}


def kottwitz_sign(form):
    f = INNER_FORMS[form] if isinstance(form, str) else form
    return _sign(f.quasi_split_rank - f.split_rank)


def inner_form_distribution(endo_phi, form):
    """e(delta) times the stable combination over the members of the packet living on `form`."""
    e = kottwitz_sign(form)
    out = {}
    for r, ch in packets.abv_packet(endo_phi):
        if r.group != form:
            continue
        d = phv.dim(endo_phi.family.phv, r.sheaf.orbit)
        out[r] = packets.coefficient(endo_phi, "1", r) * (e * _sign(endo_phi.dim - d))
    return VirtualChar(out, packets.BASE_GROUP[form])


def is_relevant(endo_phi, form):
    """Relevance in the usual sense: the L-packet has a member on the form."""
    return bool(packets.pure_l_packet(endo_phi, form))


def lift_to_inner_form(endo_phi, form):
    """e(delta) Theta^{G^delta}_phi.  This can be non-zero for a parameter that is not relevant
    to the form, through coronal members; NotRelevant is raised only when it vanishes."""
    if form == packets.BASE_GROUP[form]:
        return theta(endo_phi, "1")
    dist = inner_form_distribution(endo_phi, form)
    if not dist:
        raise NotRelevant(f"{endo_phi} is not relevant to {form}")
    return dist


# --- endoscopic decomposition of elliptic members ------------------------------------

ECTerm = namedtuple("ECTerm", "s_class triple coefficient distribution")
ECDecomposition = namedtuple("ECDecomposition", "param repn terms total agrees")

_CLASS_TRIPLE = {"1": "G2_triv", "theta2": "D2", "(12)": "D2",
                 "theta3": "A2", "theta3^2": "A2", "(123)": "A2"}


class NotSConormal(ValueError):
    pass


def ec_decompose(r, phi=None):
    """Theta_pi = sum over classes c of conj<c, pi>/|Z(c)| Theta_{phi,c}, each term attached to a triple."""
    if isinstance(r, str):
        r = packets.repn(r)
    if phi is None:
        phi = packets.parameter_of(r)
    if phi.label not in packets.ELLIPTIC or not packets.is_bijective(phi):
        raise NotSConormal(f"no endoscopic decomposition through {phi}")
    g = phi.a_abv
    d = phv.dim(phi.family.phv, r.sheaf.orbit)
    terms = []
    for c in packets.classes(phi):
        k = packets.coefficient(phi, c, r).conj() * Fraction(1, g.centralizer(c)) * _sign(phi.dim - d)
        terms.append(ECTerm(c, _CLASS_TRIPLE[c], k, theta(phi, c)))
    total = combine((t.coefficient, t.distribution) for t in terms)
    return ECDecomposition(phi.label, r.name, terms, total, total == VirtualChar.basis(r))


def ec_lift_consistency(phi):
    """Each non-identity generator term equals the lift from the open parameter of its triple."""
    out = {}
    for c in packets.classes(phi):
        name = _CLASS_TRIPLE[c]
        if name == "G2_triv" or c.endswith("^2"):
            continue
        tri = triple(name)
        for endo_phi in _representatives(tri, "3d"):
            res = lift_distribution(tri, endo_phi)
            if res.target == phi.label:
                out[c] = res.distribution == theta(phi, c) and res.s_class == c
    return out
