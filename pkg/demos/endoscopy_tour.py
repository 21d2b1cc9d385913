"""Lift endoscopic parameters to G2 and decompose the elliptic packets."""

from fractions import Fraction

from g2abv import endoscopy as E, packets

cases = [
    ("A2", packets.lparam("PGL3:3d", chi=0)),
    ("A2", packets.lparam("PGL3:3d", chi=Fraction(1, 3))),
    ("D2", packets.lparam("SO4:3d", chi=Fraction(1, 2))),
    ("A1_long", packets.lparam("GL2_long:1b", chi="q^(1/6)")),
]
for name, phi in cases:
    rec = E.lift_record(name, phi)
    line = f"{name:8} {rec.source:14} -> {rec.target:3} conormal={rec.xi_conormal}"
    if rec.xi_conormal:
        res = E.lift_distribution(name, phi)
        line += f"  s={res.s_class}: {res.distribution}"
    print(line)

print()
for name in ("pi(1)'", "pi(1)", "I0(G2[1])", "pi(th3)"):
    d = E.ec_decompose(name)
    terms = " + ".join(f"{t.coefficient.pretty()}*[{t.triple}, {t.s_class}]" for t in d.terms)
    print(f"Theta[{name}] = {terms}   (round trip {d.agrees})")

print()
phi = packets.lparam("PGL3:3a")
print("PGL3:3a relevant to the division-algebra form:", E.is_relevant(phi, "PGL3_delta"))
print("  yet its distribution there is", E.lift_to_inner_form(phi, "PGL3_delta"))
