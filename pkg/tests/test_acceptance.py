"""Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic throughout.

Run with `pytest -v -s tests/test_acceptance.py` or directly as a script.
"""

import random
import time
from fractions import Fraction

import pytest

from g2abv import distributions as D, endoscopy as E, packets, phv, subphv
from g2abv.exactnum import QValue, RootOfUnity
from g2abv.infclass import CASES, classify
from g2abv.rootdata import m, weyl_act_torus, weyl_elements

CORPUS_SIZE = 10_000


def fuzz_corpus(n=CORPUS_SIZE, seed=2024):
    rng = random.Random(seed)
    out = []
    for _ in range(n):
        vals = []
        for _ in range(2):
            order = rng.randint(1, 12)
            den = rng.randint(1, 6)
            vals.append(QValue(RootOfUnity(Fraction(rng.randrange(order), order)),
                               Fraction(rng.randint(-4 * den, 4 * den), den)))
        out.append(m(*vals))
    return out


def criterion_1():
    anchors = {("q^2", "q"): "C5", ("q", "-q"): "C4D2", ("zeta(3)*q", "zeta(3)^2*q"): "C6A2",
               ("q^3", "q^2"): "C7reg", ("q", "q"): "C8sub", ("zeta(5)", "zeta(7)*q^(1/6)"): "C0"}
    bad = [k for k, v in anchors.items()
           if classify(m(QValue.parse(k[0]), QValue.parse(k[1]))).case_id != v]
    ws = weyl_elements()
    corpus = fuzz_corpus()
    for i, t in enumerate(corpus):
        c = classify(t).case_id
        if c not in CASES or classify(weyl_act_torus(ws[i % 12], t)).case_id != c:
            bad.append(str(t))
    return not bad, f"{len(corpus)} elements, {len(anchors)} anchors, failures {bad[:3]}"


def criterion_2():
    diffs = {g: packets.table_diffs(g) for g in ("G2", "SO4", "PGL3")}
    sizes = sorted(packets.non_singleton_l_packets().values())
    n = sum(len(packets.abv_packet(phi)) for phi in packets.g2_params())
    ok = not any(diffs.values()) and not packets.llc_diffs() and sizes == [2, 3, 3]
    ok = ok and len(packets.g2_params()) == 25
    return ok, f"25 parameters, {n} packet rows, L-packet sizes {sizes}"


def criterion_3():
    fpf = {cid: subphv.fpf_check(cid) for cid in subphv.PRINTED}
    identities = all(e.equal for es in fpf.values() for e in es)
    cells = {cid: subphv.summary_diffs(cid) for cid in subphv.PRINTED}
    violation = bool(subphv.violations("P4v"))
    n = sum(len(es) for es in fpf.values())
    bad = [(d.case, str(d.sheaf), d.sub_orbit) for ds in cells.values() for d in ds]
    detail = f"{n} identities hold={identities}, P4v violation={violation}, differing printed cells {bad}"
    return identities and violation and not bad, detail


def criterion_4():
    flags = {}
    for i in range(9):
        spans, bij = D.span_check(packets.param_family("G2", str(i)))
        if spans != bij:
            return False, f"span differs from bijectivity in family {i}"
        flags.update(spans)
    ok = sum(flags.values()) == 23 and [k for k, v in flags.items() if not v] == ["8b", "8c"]
    ok = ok and all(all(D.invert(packets.param_family("G2", str(i))).back_substitution.values())
                    for i in range(9))
    rep = D.case6a_report()
    ok = ok and rep.inverse_matches_block and bool(rep.warnings)
    return ok, "23 spanning parameters, 9 families inverted; warnings: " + "; ".join(rep.warnings)


def criterion_5():
    bad = [(phi.label, s) for phi in packets.g2_params() if packets.is_arthur(phi)
           for s in packets.classes(phi) if not D.theta_arthur_check(phi, s)]
    certs = [D.sign_counterexample(packets.lparam("G2:" + lab)).certified for lab in ("6b", "6c")]
    mism = packets.arthur_unitary_mismatches()
    return not bad and all(certs) and not mism, f"arthur failures {bad}, certified {certs}, mismatches {mism}"


def criterion_6():
    inv = all(phv.is_involution(phv.fourier_table(c)) for c in phv.all_classes())
    mism = packets.aubert_fourier_mismatches()
    diffs = phv.fourier_differences(phv.P4())
    return inv and not mism and len(diffs) == 2, f"involution={inv}, mismatches={mism}, printed diffs={len(diffs)}"


def criterion_7():
    checked, bad = 0, []
    for (name, h_label) in E.LIFT_TABLE:
        tri = E.triple(name)
        for phi in E._representatives(tri, h_label):
            if not E.is_xi_conormal(tri, phi):
                continue
            target = E.lift_parameter(tri, phi)
            iso = E.lift_geometry(tri, phi, target).kind == "iso" if phi.family.phv.kind != "P0" else True
            if name in ("D2", "A2") or iso:
                checked += 1
                res = E.lift_distribution(tri, phi)
                if not res.agrees:
                    bad.append((name, str(phi)))
    forms = []
    for g, form in (("SO4", "SO4_delta"), ("PGL3", "PGL3_delta"), ("PGL3", "PGL3_deltaPrime")):
        phi = packets.lparam(group=g, label="3d")
        d = E.lift_to_inner_form(phi, form)
        members = packets.pure_l_packet(phi, form)
        forms.append(d == D.VirtualChar({members[0][0]: E.kottwitz_sign(form)}, g))
    return not bad and all(forms) and checked > 0, f"{checked} conormal lifts, failures {bad}, inner forms {forms}"


def criterion_8():
    bad = []
    for lab in ("4d", "6d", "7d", "8d"):
        phi = packets.lparam("G2:" + lab)
        for r, _ in packets.l_packet(phi):
            if not E.ec_decompose(r, phi).agrees:
                bad.append(r.name)
    coeffs = [t.coefficient for t in E.ec_decompose("pi(1)'").terms]
    ok = not bad and coeffs == [Fraction(1, 6), Fraction(1, 2), Fraction(1, 3)]
    return ok, f"failures {bad}, pi(1)' coefficients {[str(c) for c in coeffs]}"


CRITERIA = [
    (1, "classification", criterion_1),
    (2, "table reproduction", criterion_2),
    (3, "fixed-point formula and summary tables", criterion_3),
    (4, "span and inversion", criterion_4),
    (5, "Arthur identities", criterion_5),
    (6, "Aubert and Fourier", criterion_6),
    (7, "lifting", criterion_7),
    (8, "endoscopic decomposition", criterion_8),
]

# one printed summary cell is nonzero where the diagonal NEvs table of P2 forces zero
KNOWN_FAILURES = {3: "printed P2ii summary cell (IC(1_C1), C'0) disagrees with the NEvs table"}


def report_line(num, name, fn):
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    return ok, f"{'PASS' if ok else 'FAIL'} criterion {num} ({name}) [{dt:.2f}s]: {detail}"


def _params():
    for num, name, fn in CRITERIA:
        marks = []
        if num in KNOWN_FAILURES:
            marks.append(pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[num]))
        yield pytest.param(num, name, fn, id=f"criterion_{num}", marks=marks)


@pytest.mark.parametrize("num,name,fn", list(_params()))
def test_criterion(num, name, fn, capsys):
    ok, line = report_line(num, name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    start = time.perf_counter()
    for num, name, fn in CRITERIA:
        print(report_line(num, name, fn)[1])
    print(f"total {time.perf_counter() - start:.2f}s")
