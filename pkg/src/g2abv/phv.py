"""The five prehomogeneous vector spaces P0 - P4 as finite tables.

Each space has its orbits, the equivariant fundamental groups of the orbits and
of the regular conormal strata, the simple equivariant perverse sheaves, the
microlocal vanishing-cycles table (NEvs) and the Fourier transform.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .exactnum import Cyclo, RootOfUnity, ZERO


class FiniteGroup:
    """A small finite group with its conjugacy classes and character table."""

    def __init__(self, name, classes, sizes, characters):
        self.name = name
        self.classes = tuple(classes)
        self.sizes = tuple(sizes)
        self.characters = {k: tuple(Cyclo.coerce(v) for v in vals) for k, vals in characters.items()}

    @property
    def order(self):
        return sum(self.sizes)

    def is_trivial(self):
        return self.order == 1

    def centralizer(self, cls):
        return self.order // self.sizes[self.classes.index(cls)]

    def value(self, char, cls):
        if char not in self.characters:
            raise KeyError(f"{char!r} is not a character of {self.name}")
        if cls not in self.classes:
            raise KeyError(f"{cls!r} is not a class of {self.name}")
        return self.characters[char][self.classes.index(cls)]

    def degree(self, char):
        return self.value(char, self.classes[0])

    def char_names(self):
        return list(self.characters)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.name == other.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return self.name


def cyclic_class(n, k):
    k %= n
    if k == 0:
        return "1"
    return f"theta{n}" if k == 1 else f"theta{n}^{k}"


def cyclic_char(n, j):
    j %= n
    if j == 0:
        return "1"
    return f"vartheta{n}" if j == 1 else f"vartheta{n}^{j}"


@lru_cache(maxsize=None)
def cyclic(n):
    if n == 1:
        return trivial()
    classes = [cyclic_class(n, k) for k in range(n)]
    chars = {
        cyclic_char(n, j): [Cyclo.embed(RootOfUnity(Fraction(j * k, n))) for k in range(n)]
        for j in range(n)
    }
    return FiniteGroup(f"Z{n}", classes, [1] * n, chars)


@lru_cache(maxsize=None)
def trivial():
    return FiniteGroup("1", ["1"], [1], {"1": [1]})


@lru_cache(maxsize=None)
def s3():
    return FiniteGroup(
        "S3",
        ["1", "(12)", "(123)"],
        [1, 3, 2],
        {"1": [1, 1, 1], "eps": [1, -1, 1], "rho": [2, 0, -1]},
    )


def group_named(name):
    if name == "1":
        return trivial()
    if name == "S3":
        return s3()
    if name.startswith("Z"):
        return cyclic(int(name[1:]))
    raise KeyError(name)


def class_order(group, cls):
    """Order of the elements in a conjugacy class."""
    if cls == "1":
        return 1
    if group.name == "S3":
        return 2 if cls == "(12)" else 3
    n = int(group.name[1:])
    k = 1 if "^" not in cls else int(cls.split("^")[1])
    return n // gcd(n, k)


class PhvClass(namedtuple("PhvClass", "kind n group")):
    """One of P0(G), P1, P2(n), P3(n), P4."""

    __slots__ = ()

    def __str__(self):
        if self.kind == "P0":
            return f"P0({self.group})"
        if self.kind in ("P2", "P3"):
            return f"{self.kind}({self.n})"
        return self.kind


def P0(group="1"):
    return PhvClass("P0", None, group)


def P1():
    return PhvClass("P1", None, None)


def P2(n=0):
    return PhvClass("P2", n, None)


def P3(n):
    if n < 1:
        raise ValueError("P3 needs a positive integer")
    return PhvClass("P3", n, None)


def P4():
    return PhvClass("P4", None, None)


def parse_phv(text):
    text = text.strip()
    if text in ("P1", "P4"):
        return PhvClass(text, None, None)
    head, _, arg = text.partition("(")
    arg = arg.rstrip(")")
    if head == "P0":
        return P0(arg or "1")
    if head == "P2":
        return P2(int(arg))
    if head == "P3":
        return P3(int(arg))
    raise ValueError(f"unknown prehomogeneous class {text!r}")


OrbitData = namedtuple("OrbitData", "label dim is_open is_closed a_c a_abv")


class MicroSheaf(namedtuple("MicroSheaf", "orbit char")):
    """The simple object IC(char_orbit)."""

    __slots__ = ()

    def __str__(self):
        return f"IC({self.char}_{self.orbit})"


def ic(char, orbit):
    return MicroSheaf(orbit, char)


def parse_sheaf(text):
    body = text.strip()
    if not (body.startswith("IC(") and body.endswith(")")):
        raise ValueError(f"not a sheaf label: {text!r}")
    char, _, orbit = body[3:-1].rpartition("_")
    return MicroSheaf(orbit, char)


@lru_cache(maxsize=None)
def orbits(cls):
    k = cls.kind
    one = trivial()
    if k == "P0":
        g = group_named(cls.group)
        return (OrbitData("C0", 0, True, True, g, g),)
    if k in ("P1", "P2"):
        d = 1 if k == "P1" else 2
        return (OrbitData("C0", 0, False, True, one, one), OrbitData("C1", d, True, False, one, one))
    if k == "P3":
        g = cyclic(cls.n)
        return (
            OrbitData("C0", 0, False, True, one, g),
            OrbitData("C1", 1, False, False, one, g),
            OrbitData("C2", 1, False, False, one, g),
            OrbitData("C3", 2, True, False, g, g),
        )
    if k == "P4":
        s, z2 = s3(), cyclic(2)
        return (
            OrbitData("C0", 0, False, True, one, s),
            OrbitData("C1", 2, False, False, one, z2),
            OrbitData("C2", 3, False, False, one, z2),
            OrbitData("C3", 4, True, False, s, s),
        )
    raise ValueError(cls)


def orbit(cls, label):
    for o in orbits(cls):
        if o.label == label:
            return o
    raise KeyError(f"{cls} has no orbit {label}")


def orbit_labels(cls):
    return [o.label for o in orbits(cls)]


def dim(cls, label):
    return orbit(cls, label).dim


@lru_cache(maxsize=None)
def simple_objects(cls):
    out = []
    for o in orbits(cls):
        for ch in o.a_c.char_names():
            out.append(MicroSheaf(o.label, ch))
    return tuple(out)


def _diag(cls):
    return {MicroSheaf(o.label, "1"): {o.label: {"1": 1}} for o in orbits(cls)}


def _p3_table(n):
    table = _diag(P3(n))
    for j in range(1, n):
        ch = cyclic_char(n, j)
        table[MicroSheaf("C3", ch)] = {c: {ch: 1} for c in ("C0", "C1", "C2", "C3")}
    return table


_P4_TABLE = {
    MicroSheaf("C0", "1"): {"C0": {"1": 1}},
    MicroSheaf("C1", "1"): {"C0": {"rho": 1}, "C1": {"1": 1}},
    MicroSheaf("C2", "1"): {"C1": {"vartheta2": 1}, "C2": {"1": 1}},
    MicroSheaf("C3", "1"): {"C3": {"1": 1}},
    MicroSheaf("C3", "rho"): {"C2": {"vartheta2": 1}, "C3": {"rho": 1}},
    MicroSheaf("C3", "eps"): {"C0": {"eps": 1}, "C1": {"1": 1}, "C2": {"vartheta2": 1}, "C3": {"eps": 1}},
}


@lru_cache(maxsize=None)
def nevs_table(cls):
    k = cls.kind
    if k == "P0":
        g = group_named(cls.group)
        return {MicroSheaf("C0", ch): {"C0": {ch: 1}} for ch in g.char_names()}
    if k in ("P1", "P2"):
        return _diag(cls)
    if k == "P3":
        return _p3_table(cls.n)
    return dict(_P4_TABLE)


def nevs(cls, p):
    """NEvs(p) as {orbit: {character: multiplicity}}; orbits with value zero are absent."""
    table = nevs_table(cls)
    if p not in table:
        raise KeyError(f"{p} is not a simple object of {cls}")
    return table[p]


_P4_FOURIER_PRINTED = {
    MicroSheaf("C0", "1"): MicroSheaf("C3", "1"),
    MicroSheaf("C1", "1"): MicroSheaf("C3", "rho"),
    MicroSheaf("C2", "1"): MicroSheaf("C2", "1"),
    MicroSheaf("C3", "1"): MicroSheaf("C1", "1"),
    MicroSheaf("C3", "rho"): MicroSheaf("C0", "1"),
    MicroSheaf("C3", "eps"): MicroSheaf("C3", "eps"),
}

# the printed column is a 4-cycle; the involutive variant swaps the two middle images
_P4_FOURIER = dict(_P4_FOURIER_PRINTED)
_P4_FOURIER[MicroSheaf("C3", "1")] = MicroSheaf("C0", "1")
_P4_FOURIER[MicroSheaf("C3", "rho")] = MicroSheaf("C1", "1")


@lru_cache(maxsize=None)
def fourier_table(cls, printed=False):
    k = cls.kind
    if k == "P0":
        return {p: p for p in simple_objects(cls)}
    if k in ("P1", "P2"):
        a, b = MicroSheaf("C0", "1"), MicroSheaf("C1", "1")
        return {a: b, b: a}
    if k == "P3":
        swap = {"C0": "C3", "C3": "C0", "C1": "C2", "C2": "C1"}
        out = {MicroSheaf(c, "1"): MicroSheaf(swap[c], "1") for c in swap}
        for p in simple_objects(cls):
            if p.char != "1":
                out[p] = p
        return out
    return dict(_P4_FOURIER_PRINTED if printed else _P4_FOURIER)


def fourier(cls, p):
    return fourier_table(cls)[p]


def fourier_printed(cls, p):
    return fourier_table(cls, printed=True)[p]


def fourier_differences(cls):
    """Rows where the printed and involutive Fourier tables disagree."""
    a, b = fourier_table(cls, printed=True), fourier_table(cls)
    return [(p, a[p], b[p]) for p in simple_objects(cls) if a[p] != b[p]]


def is_involution(table):
    return all(table[table[p]] == p for p in table)


def trace(group, rep, s):
    """Trace at class s of a representation given as {character: multiplicity}."""
    out = ZERO
    for ch, mult in rep.items():
        out = out + group.value(ch, s) * mult
    return out


def trace_shifted(group, rep, shift, s):
    """(-1)^shift times the trace of rep at s."""
    t = trace(group, rep, s)
    return t if shift % 2 == 0 else -t


def all_classes():
    return [P0("1"), P0("Z2"), P1(), P2(0), P2(1), P3(1), P3(2), P3(3), P4()]
