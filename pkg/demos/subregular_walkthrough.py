"""Walk through the subregular family: packets, coefficients, Theta_{phi,s} and their inversion."""

from g2abv import distributions as D, packets
from g2abv.infclass import classify
from g2abv.rootdata import m
from g2abv.exactnum import QValue

t = m(QValue.q(), QValue.q())
c = classify(t)
print(f"lambda = {t}: case {c.case_id}, space {c.phv}")

for phi in packets.param_family("G2", "8").params():
    members = ", ".join(f"{r} ({ch})" for r, ch in packets.abv_packet(phi))
    print(f"  {phi}: dim {phi.dim}, A^ABV = {phi.a_abv.name}; ABV packet: {members}")

phi = packets.lparam("G2:8d")
print("\nTheta_{8d,s}:")
for s in packets.classes(phi):
    print(f"  s = {s}: {D.theta(phi, s)}")

print("\nphi_8b has a three-member packet but only two classes:")
spans, _ = D.span_check(packets.param_family("G2", "8"))
print("  spans equal:", spans)

inv = D.invert(packets.param_family("G2", "8"))
print("\nTheta of pi(1)' through the family:")
for (lab, s), k in inv.expressions[packets.repn("pi(1)'")].items():
    print(f"  {k.pretty():>6} * Theta[{lab}, {s}]")
