"""Classification of unramified infinitesimal parameters of G2.

A parameter is given by lam(Fr) = m(u1 q^a1, u2 q^a2).  The set of roots taking
the value q determines the Vogan variety; up to the Weyl group it is one of nine
standard subsets, and each case comes with its centralizer H and one of the
five prehomogeneous spaces.
"""

from collections import namedtuple
from math import lcm

from .exactnum import QValue, RootOfUnity
from .phv import P0, P1, P2, P3, P4
from .rootdata import (
    LONG_ROOTS, POSITIVE_ROOTS, ROOTS, TorusElement, exponents, m, root_name,
    weyl_act_root, weyl_act_torus, weyl_elements,
)

CASES = ("C0", "C1short", "C2long", "C3", "C4D2", "C5", "C6A2", "C7reg", "C8sub")

STANDARD_SUBSETS = {
    "C0": frozenset(),
    "C1short": frozenset({(1, 2)}),
    "C2long": frozenset({(2, 3)}),
    "C3": frozenset({(1, 0), (2, 3)}),
    "C4D2": frozenset({(1, 0), (1, 2)}),
    "C5": frozenset({(0, 1), (1, 1)}),
    "C6A2": frozenset({(1, 0), (1, 3)}),
    "C7reg": frozenset({(1, 0), (0, 1)}),
    "C8sub": frozenset({(1, 0), (1, 1), (1, 2), (1, 3)}),
}

PHV_OF_CASE = {
    "C0": P0("1"),
    "C1short": P1(),
    "C2long": P1(),
    "C3": P2(1),
    "C4D2": P3(2),
    "C5": P2(0),
    "C6A2": P3(3),
    "C7reg": P3(1),
    "C8sub": P4(),
}

# short numeric family index used in parameter labels (phi_4d etc.)
FAMILY_INDEX = {c: i for i, c in enumerate(CASES)}
CASE_OF_INDEX = {i: c for i, c in enumerate(CASES)}

Q = QValue.q()


class NoStandardMatch(RuntimeError):
    pass


GroupDescriptor = namedtuple("GroupDescriptor", "kind root")


def describe_group(g):
    if g.kind == "GL2":
        return f"GL2({root_name(g.root)})"
    return g.kind


InfCase = namedtuple("InfCase", "case_id normalizer r_lambda h_group phv frobenius")


def _root_table(t):
    # integer numerators over a common denominator: per root (unit part mod D, exponent)
    fx, fy, ex, ey = t.x.unit.frac, t.y.unit.frac, t.x.exp, t.y.exp
    d = lcm(fx.denominator, fy.denominator, ex.denominator, ey.denominator)
    nfx, nfy = fx.numerator * (d // fx.denominator), fy.numerator * (d // fy.denominator)
    nex, ney = ex.numerator * (d // ex.denominator), ey.numerator * (d // ey.denominator)
    out = {}
    for r in ROOTS:
        a, b = exponents(r)
        out[r] = ((a * nfx + b * nfy) % d, a * nex + b * ney)
    return d, out


def r_lambda(t):
    """Roots whose value at t is exactly q."""
    if not isinstance(t, TorusElement):
        t = t.frobenius
    d, table = _root_table(t)
    return frozenset(r for r, (u, e) in table.items() if u == 0 and e == d)


def unit_roots(t):
    d, table = _root_table(t)
    return frozenset(r for r, (u, e) in table.items() if u == 0 and e == 0)


def h_group(t):
    ones = unit_roots(t)
    n = len(ones)
    if n == 0:
        return GroupDescriptor("DualTorus", None)
    if n == 2:
        pos = next(r for r in ones if r in POSITIVE_ROOTS)
        return GroupDescriptor("GL2", pos)
    if n == 4:
        return GroupDescriptor("SO4sub", None)
    if n == 6 and ones == LONG_ROOTS:
        return GroupDescriptor("SL3", None)
    if n == 12:
        return GroupDescriptor("G2dual", None)
    raise NoStandardMatch(f"unexpected centralizer root system {sorted(ones)}")


def classify(t):
    """Classify lam(Fr) = t.  Ties are broken by the sorted order of Weyl elements."""
    if not isinstance(t, TorusElement):
        t = t.frobenius
    # eval(w.r, w.t) = eval(r, t), so the translates of R_lam are images of one set
    base = r_lambda(t)
    for w in weyl_elements():
        rl = frozenset(weyl_act_root(w, r) for r in base)
        for case in _BY_SIZE.get(len(rl), ()):
            if rl == STANDARD_SUBSETS[case]:
                tw = weyl_act_torus(w, t)
                return InfCase(case, w, rl, h_group(tw), PHV_OF_CASE[case], tw)
    raise NoStandardMatch(f"no Weyl translate of {t!r} matches a standard subset")


_BY_SIZE = {}
for _c in CASES:
    _BY_SIZE.setdefault(len(STANDARD_SUBSETS[_c]), []).append(_c)


def dim_v(case_id):
    return len(STANDARD_SUBSETS[case_id])


def classify_pair(x, y):
    return classify(m(_qv(x), _qv(y)))


def _qv(v):
    return v if isinstance(v, QValue) else QValue.parse(str(v))


def dual_torus_element(chi1, chi2):
    """lam(Fr) for the principal series I(chi1 (x) chi2), chi_i given as u*q^a.

    Writing chi1 = (u, a) and chi2 = (v, b) the torus element is
    m(v*u q^(a+b), u q^a).
    """
    u1 = chi2.unit * chi1.unit
    a1 = chi1.exp + chi2.exp
    return m(QValue(u1, a1), QValue(chi1.unit, chi1.exp))


Reducibility = namedtuple("Reducibility", "irreducible two_orbit case_id")


def reducibility(chi1, chi2):
    c = classify(dual_torus_element(_qv(chi1), _qv(chi2)))
    return Reducibility(dim_v(c.case_id) == 0, c.phv.kind in ("P1", "P2"), c.case_id)


def standard_parameter(case_id, u=None, a=None, u1=None, a1=None, u2=None, a2=None, n=0):
    """A representative lam(Fr) for each family, with the family's continuous data."""
    one = RootOfUnity(0)
    th3 = RootOfUnity.of(3)
    if case_id == "C0":
        return m(QValue(u1 or one, a1 or 0), QValue(u2 or one, a2 or 0))
    if case_id == "C1short":
        return m(Q, QValue(u or one, a or 0))
    if case_id == "C2long":
        u = u or one
        a = QValue(0, 0).exp + (a or 0)
        return m(QValue(u, a), QValue(u.inverse(), 1 - a))
    if case_id == "C3":
        th = th3 ** n
        return m(QValue(th, QValue.q(1).exp / 3), QValue(th ** 2, QValue.q(2).exp / 3))
    if case_id == "C4D2":
        return m(Q, -Q)
    if case_id == "C5":
        return m(Q ** 2, Q)
    if case_id == "C6A2":
        return m(QValue(th3, 1), QValue(th3 ** 2, 1))
    if case_id == "C7reg":
        return m(Q ** 3, Q ** 2)
    if case_id == "C8sub":
        return m(Q, Q)
    raise KeyError(case_id)
