"""Command-line front end.

    g2abv classify q^2 q
    g2abv coeffs G2:8d
    g2abv theta G2:6b --s 1
    g2abv lift A2 PGL3:3d?chi=1
    g2abv ec "pi(1)'"
    g2abv verify all --json

Parameter specs are `<group>:<label>[?key=value&...]`; the group defaults to G2.
"""

import argparse
import json
import re
import sys

from . import distributions, endoscopy, packets, phv, subphv
from .exactnum import Cyclo, ParseError, QValue
from .infclass import NoStandardMatch, classify, describe_group, dim_v
from .rootdata import m, root_name

SCHEMA = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def parse_spec(text):
    """'PGL3:3d?chi=1' -> LParam."""
    head, _, query = text.partition("?")
    group, sep, label = head.partition(":")
    if not sep:
        group, label = "G2", head
    data = {}
    for item in filter(None, query.split("&")):
        k, eq, v = item.partition("=")
        if not eq:
            raise UsageError(f"bad parameter data {item!r} in {text!r}")
        data[k.strip()] = v.strip()
    if group not in packets.GROUPS:
        raise UsageError(f"unknown group {group!r}")
    return packets.lparam(group=group, label=label, **data)


def _c(x):
    return x.canonical() if isinstance(x, Cyclo) else str(x)


def _vc(v):
    return [[str(r), _c(c)] for r, c in v.items()]


# --- commands ---------------------------------------------------------------------

def cmd_classify(x, y):
    t = m(QValue.parse(x), QValue.parse(y))
    c = classify(t)
    return {
        "lambda": str(t),
        "case": c.case_id,
        "phv": str(c.phv),
        "H": describe_group(c.h_group),
        "dim_V": dim_v(c.case_id),
        "R_lambda": sorted(root_name(r) for r in c.r_lambda),
        "normalized": str(c.frobenius),
    }, []


def cmd_packet(spec):
    phi = parse_spec(spec)
    p = packets.properties(phi)
    return {
        "param": str(phi),
        "phv": str(phi.family.phv),
        "orbit": phi.orbit,
        "dim": phi.dim,
        "A_phi": phi.a_phi.name,
        "A_abv": phi.a_abv.name,
        "l_packet": [[str(r), ch] for r, ch in packets.l_packet(phi)],
        "abv_packet": [[str(r), ch] for r, ch in packets.abv_packet(phi)],
        "coronal": [[str(r), ch] for r, ch in packets.coronal(phi)],
        "arthur": p.arthur,
        "elliptic": p.elliptic,
    }, []


def cmd_coeffs(spec):
    phi = parse_spec(spec)
    cls = packets.classes(phi)
    rows = [[str(r)] + [_c(v[c]) for c in cls] for r, v in packets.coefficient_matrix(phi).items()]
    return {"param": str(phi), "classes": cls, "rows": rows}, []


def cmd_theta(spec, s=None):
    phi = parse_spec(spec)
    cls = packets.classes(phi) if s is None else [s]
    for c in cls:
        if c not in phi.a_abv.classes:
            raise UsageError(f"{c!r} is not a class of {phi.a_abv.name}; classes: {list(phi.a_abv.classes)}")
    warnings = []
    if phi.label == "6a" and phi.group == "G2":
        warnings = distributions.case6a_report().warnings
    return {"param": str(phi), "theta": {c: _vc(distributions.theta(phi, c)) for c in cls}}, warnings


def cmd_lift(tri, spec):
    phi = parse_spec(spec)
    rec = endoscopy.lift_record(tri, phi)
    out = dict(rec._asdict())
    if rec.xi_conormal:
        res = endoscopy.lift_distribution(tri, phi)
        out.update(s_class=res.s_class, distribution=_vc(res.distribution), agrees=res.agrees)
    return out, []


def cmd_ec(name):
    r = packets.repn(name)
    d = endoscopy.ec_decompose(r)
    return {
        "repn": d.repn,
        "param": d.param,
        "terms": [[t.s_class, t.triple, _c(t.coefficient), _vc(t.distribution)] for t in d.terms],
        "round_trip": d.agrees,
    }, []


# --- verification suites ----------------------------------------------------------

def _item(name, ok, detail=None):
    return {"name": name, "ok": bool(ok), "detail": detail}


def verify_tables():
    items, warns = [], []
    for g in ("G2", "SO4", "PGL3"):
        d = packets.table_diffs(g)
        items.append(_item(f"ABV coefficients for {g} match the stored table", not d, [str(x) for x in d]))
    d = packets.llc_diffs()
    items.append(_item("L-packets are the open-orbit sub-rows of the ABV table", not d, [str(x) for x in d]))
    sizes = packets.non_singleton_l_packets()
    items.append(_item("non-singleton L-packets have sizes (2, 3, 3)",
                       sorted(sizes.values()) == [2, 3, 3], {k: v for k, v in sorted(sizes.items())}))
    bad = [phi.label for phi in packets.g2_params() if not packets.check_llc_extension(phi)]
    items.append(_item("ABV characters extend the LLC characters", not bad, bad))
    bad = [str(r) for r in packets.arthur_unitary_mismatches()]
    items.append(_item("Arthur type agrees with unitarity", not bad, bad))
    return items, warns


def verify_fpf():
    items, warns = [], []
    total = 0
    for cid in subphv.PRINTED:
        entries = subphv.fpf_check(cid)
        total += len(entries)
        bad = [[str(e.sheaf), e.sub_orbit, _c(e.left), _c(e.right)] for e in entries if not e.equal]
        items.append(_item(f"trace identities on {cid} ({len(entries)} cells)", not bad, bad))
        diffs = subphv.summary_diffs(cid)
        if diffs:
            warns.extend(f"{cid} printed summary cell {d.sheaf} at C'{d.sub_orbit[1:]}: printed {d.printed}, "
                         f"computed {d.computed}" for d in diffs)
    items.append(_item("a non-conormal orbit of P4v violates the identity",
                       bool(subphv.violations("P4v")), len(subphv.violations("P4v"))))
    items.append(_item("total trace identities checked", True, total))
    return items, warns


def verify_inversion():
    items, warns = [], []
    mism = []
    for i in range(9):
        fam = packets.param_family("G2", str(i))
        spans, bij = distributions.span_check(fam)
        mism += [k for k in spans if spans[k] != bij[k]]
        inv = distributions.invert(fam)
        items.append(_item(f"family {i} inverts with exact back-substitution",
                           all(inv.back_substitution.values()) and len(inv.expressions) == len(fam.spec.reps)))
        for lab, name, status in inv.closed_form:
            if status == "mismatch":
                warns.append(f"closed-form inverse differs at {lab}, {name}")
    items.append(_item("span equality exactly on the bijective parameters", not mism, mism))
    rep = distributions.case6a_report()
    items.append(_item("6a inverse matches the printed 1/3 block", rep.inverse_matches_block))
    warns.extend(rep.warnings)
    for fid in ("4", "6"):
        tm = distributions.standard_module_matrix(fid)
        ok = all(distributions.stability_scaffold(fid)) and distributions.is_unitriangular(tm)
        items.append(_item(f"standard-module scaffold for family {fid}", ok))
    items.append(_item("both parabolic routes give the same Case 4 principal series",
                       distributions.case4_routes_agree()))
    bad = [f"{lab} at {s}" for lab, s, _, _ in distributions.claim_diffs()]
    items.append(_item("hand-written expansions agree with the definition", not bad, bad))
    bad = [f"{phi.label} at {s}" for phi in packets.g2_params() if packets.is_arthur(phi)
           for s in packets.classes(phi) if not distributions.theta_arthur_check(phi, s)]
    items.append(_item("Arthur form of Theta for every Arthur-type parameter", not bad, bad))
    for lab in ("6b", "6c"):
        ce = distributions.sign_counterexample(packets.lparam("G2:" + lab))
        items.append(_item(f"no s realises the coronal sign at {lab}", ce.certified,
                           [_c(ce.value), [_c(v) for v in ce.value_set]]))
    return items, warns


def verify_aubert():
    items, warns = [], []
    bad = [str(c) for c in phv.all_classes() if not phv.is_involution(phv.fourier_table(c))]
    items.append(_item("Fourier tables are involutions", not bad, bad))
    bad = [str(r) for r in packets.aubert_fourier_mismatches()]
    items.append(_item("vogan(aubert(pi)) = fourier(vogan(pi)) on every family", not bad, bad))
    diffs = phv.fourier_differences(phv.P4())
    items.append(_item("printed P4 Fourier table differs in exactly two rows", len(diffs) == 2,
                       [[str(p), str(a), str(b)] for p, a, b in diffs]))
    if not phv.is_involution(phv.fourier_table(phv.P4(), printed=True)):
        warns.append("printed P4 Fourier table is not an involution; the corrected table is used")
    return items, warns


def verify_lifting():
    items, warns = [], []
    report = endoscopy.lifting_report()
    bad = [r for r in report if not r[4]]
    items.append(_item("every lift lands on the orbit predicted by saturation", not bad, bad))
    bad = [r for r in report if r[5] is False]
    items.append(_item("lifted distributions equal Theta(phi, s) on conormal rows",
                       not bad and any(r[5] for r in report), bad))
    bad = []
    for (name, h_label) in endoscopy.LIFT_TABLE:
        tri = endoscopy.triple(name)
        for phi in endoscopy._representatives(tri, h_label):
            if packets.is_arthur(phi) and not endoscopy.is_xi_conormal(tri, phi):
                bad.append(f"{name} {phi}")
    items.append(_item("Arthur-type endoscopic parameters lift conormally", not bad, bad))
    forms = {}
    for g, form in (("SO4", "SO4_delta"), ("PGL3", "PGL3_delta")):
        d = endoscopy.lift_to_inner_form(packets.lparam(group=g, label="3d"), form)
        forms[form] = [endoscopy.kottwitz_sign(form), _vc(d)]
    items.append(_item("inner-form contributions carry the Kottwitz sign",
                       all(v[0] == 1 and len(v[1]) == 1 for v in forms.values()), forms))
    bad = []
    for lab in sorted(packets.ELLIPTIC):
        phi = packets.lparam("G2:" + lab)
        for r, _ in packets.l_packet(phi):
            if not endoscopy.ec_decompose(r, phi).agrees:
                bad.append(str(r))
        if not all(endoscopy.ec_lift_consistency(phi).values()):
            bad.append(f"lift terms of {lab}")
    items.append(_item("endoscopic decomposition round-trips on the elliptic packets", not bad, bad))
    return items, warns


SUITES = {
    "tables": verify_tables,
    "fpf": verify_fpf,
    "inversion": verify_inversion,
    "aubert": verify_aubert,
    "lifting": verify_lifting,
}


def cmd_verify(suite):
    names = list(SUITES) if suite == "all" else [suite]
    out, warns = {}, []
    for n in names:
        items, w = SUITES[n]()
        out[n] = items
        warns.extend(w)
    return out, warns


def _verify_ok(result):
    return all(i["ok"] for items in result.values() for i in items)


# --- dump -------------------------------------------------------------------------

def dump_tables():
    out = {}
    for phi in packets.g2_params():
        out[str(phi)] = {
            "a_abv": phi.a_abv.name,
            "classes": packets.classes(phi),
            "coefficients": {str(r): {c: _c(v) for c, v in row.items()}
                             for r, row in packets.coefficient_matrix(phi).items()},
            "l_packet": {str(r): ch for r, ch in packets.l_packet(phi)},
        }
    return out


def dump_fpf():
    return {cid: [[str(e.sheaf), e.sub_orbit, _c(e.left), _c(e.right)] for e in subphv.fpf_check(cid)]
            for cid in subphv.PRINTED}


def dump_lifting():
    return {f"{name}:{h}": row._asdict() for (name, h), row in endoscopy.LIFT_TABLE.items()}


DUMPS = {"tables": dump_tables, "fpf": dump_fpf, "lifting": dump_lifting}


def cmd_dump(what):
    if what == "all":
        return {k: f() for k, f in DUMPS.items()}, []
    return DUMPS[what](), []


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=1)


def reingest(text):
    """Parse a dump and re-render it with every Cyclo value re-read; used for round-trip checks."""
    def walk(x):
        if isinstance(x, dict):
            return {k: walk(v) for k, v in x.items()}
        if isinstance(x, list):
            return [walk(v) for v in x]
        if isinstance(x, str):
            try:
                return Cyclo.parse(x).canonical()
            except (ParseError, ValueError):
                return x
        return x
    return canonical_json(walk(json.loads(text)))


# --- argument parsing and output ----------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON document")
    p = argparse.ArgumentParser(prog="g2abv", description="Unipotent ABV-packets of p-adic G2.",
                                parents=[common])
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    s = cmd("classify", help="classify lam(Fr) = m(x, y)")
    s.add_argument("x")
    s.add_argument("y")
    s = cmd("packet", help="L- and ABV-packet of a parameter")
    s.add_argument("spec")
    s = cmd("coeffs", help="ABV coefficients <s, pi>")
    s.add_argument("spec")
    s = cmd("theta", help="the distributions Theta_{phi,s}")
    s.add_argument("spec")
    s.add_argument("--s", default=None, help="conjugacy class (default: all)")
    s = cmd("lift", help="lift an endoscopic parameter to G2")
    s.add_argument("triple", choices=sorted(endoscopy.TRIPLES))
    s.add_argument("spec")
    s = cmd("ec", help="endoscopic decomposition of an elliptic representation")
    s.add_argument("repn")
    s = cmd("verify", help="run a verification suite")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s = cmd("dump", help="dump tables in canonical form")
    s.add_argument("what", nargs="?", default="all", choices=sorted(DUMPS) + ["all"])
    return p


def _run(args):
    c = args.command
    if c == "classify":
        return cmd_classify(args.x, args.y)
    if c == "packet":
        return cmd_packet(args.spec)
    if c == "coeffs":
        return cmd_coeffs(args.spec)
    if c == "theta":
        return cmd_theta(args.spec, args.s)
    if c == "lift":
        return cmd_lift(args.triple, args.spec)
    if c == "ec":
        return cmd_ec(args.repn)
    if c == "verify":
        return cmd_verify(args.suite)
    return cmd_dump(args.what)


def _text(result, indent=""):
    lines = []
    if isinstance(result, dict):
        for k, v in result.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{indent}{k}:")
                lines.extend(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_inline(v)}")
    elif isinstance(result, list):
        for v in result:
            if isinstance(v, dict) and "ok" in v:
                mark = "ok  " if v["ok"] else "FAIL"
                extra = "" if v["detail"] in (None, [], {}) else f"  {_inline(v['detail'])}"
                lines.append(f"{indent}[{mark}] {v['name']}{extra}")
            elif isinstance(v, (dict, list)) and not _flat(v):
                lines.extend(_text(v, indent + "  "))
            else:
                lines.append(f"{indent}{_inline(v)}")
    else:
        lines.append(f"{indent}{result}")
    return lines


def _flat(v):
    items = v.values() if isinstance(v, dict) else v
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in items)


def _inline(v):
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_inline(x)}" for k, x in v.items()) + "}"
    return str(v)


_NEGATIVE = re.compile(r"^-(q|zeta|\d)")


def _protect_negatives(argv):
    # '-q' would otherwise be read as an option; zeta(2) is the same value
    return [("zeta(2)*" + a[1:]) if _NEGATIVE.match(a) else a for a in argv]


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        result, warnings = _run(args)
    except (UsageError, ParseError, packets.InvalidParameter, packets.NotInPacket, KeyError,
            NoStandardMatch, endoscopy.NoLift, endoscopy.NotSConormal) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"g2abv: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    status = EXIT_OK
    if args.command == "verify" and not _verify_ok(result):
        status = EXIT_FAIL
    if args.command == "dump":
        print(canonical_json(result))
        return status
    if getattr(args, "json", False):
        doc = {"schema": SCHEMA, "command": argv, "result": result, "warnings": warnings, "status": status}
        print(canonical_json(doc))
    else:
        print("\n".join(_text(result)))
        for w in warnings:
            print(f"warning: {w}")
    return status


if __name__ == "__main__":
    sys.exit(main())
