"""Dual G2 root data in the coordinates m(x, y) of the dual torus.

A root (p, r) stands for p*g1 + r*g2 where g1 is the long simple root and g2
the short one.  Torus elements are pairs (x, y) of QValues with x the value of
g1 + 2*g2 and y the value of g1 + g2.
"""

from fractions import Fraction
from functools import lru_cache

from .exactnum import QValue

POSITIVE_ROOTS = ((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), (2, 3))
ROOTS = POSITIVE_ROOTS + tuple((-p, -r) for p, r in POSITIVE_ROOTS)
LONG_ROOTS = frozenset({(1, 0), (1, 3), (2, 3), (-1, 0), (-1, -3), (-2, -3)})

G1 = (1, 0)
G2 = (0, 1)

ROOT_NAMES = {
    (1, 0): "g1", (0, 1): "g2", (1, 1): "g1+g2",
    (1, 2): "g1+2g2", (1, 3): "g1+3g2", (2, 3): "2g1+3g2",
}

# roots -> exponents of (x, y):  (p, r) |-> x^(r-p) y^(2p-r)
L = ((-1, 1), (2, -1))
L_INV = ((1, 1), (2, 1))


class InvalidRoot(ValueError):
    pass


def root_name(r):
    if r in ROOT_NAMES:
        return ROOT_NAMES[r]
    return "-" + ROOT_NAMES[(-r[0], -r[1])]


def is_long(r):
    check_root(r)
    return r in LONG_ROOTS


def is_positive(r):
    return r in POSITIVE_ROOTS


def check_root(r):
    if tuple(r) not in ROOTS:
        raise InvalidRoot(f"{r!r} is not a root of G2")


class TorusElement:
    """m(x, y)."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = x if isinstance(x, QValue) else QValue.parse(str(x))
        self.y = y if isinstance(y, QValue) else QValue.parse(str(y))

    def __mul__(self, other):
        return TorusElement(self.x * other.x, self.y * other.y)

    def __eq__(self, other):
        return isinstance(other, TorusElement) and self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash((self.x, self.y))

    def character(self, a, b):
        """x^a y^b."""
        return self.x ** a * self.y ** b

    def __repr__(self):
        return f"m({self.x}, {self.y})"


def m(x, y):
    return TorusElement(x, y)


def exponents(r):
    p, s = r
    return (L[0][0] * p + L[0][1] * s, L[1][0] * p + L[1][1] * s)


def eval_root(r, t):
    check_root(tuple(r))
    a, b = exponents(r)
    return t.character(a, b)


def _matmul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(2)) for j in range(2)) for i in range(2)
    )


def _apply(M, v):
    return (M[0][0] * v[0] + M[0][1] * v[1], M[1][0] * v[0] + M[1][1] * v[1])


def _inv(M):
    (a, b), (c, d) = M
    det = a * d - b * c
    assert det in (1, -1)
    return ((d * det, -b * det), (-c * det, a * det))


# simple reflections on root coordinates, from the Cartan matrix with g1 long
S1 = ((-1, 1), (0, 1))
S2 = ((1, 0), (3, -1))
IDENTITY = ((1, 0), (0, 1))


@lru_cache(maxsize=None)
def weyl_elements():
    """The 12 elements of W, generated by closure and sorted lexicographically."""
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for s in (S1, S2):
                v = _matmul(s, w)
                if v not in seen:
                    seen.add(v)
                    nxt.append(v)
        frontier = nxt
    return tuple(sorted(seen))


def weyl_act_root(w, r):
    return _apply(w, r)


def weyl_act_torus(w, t):
    # conjugate w to the (x, y)-exponent lattice, then (w.t)(chi) = t(w^-1 chi)
    n_inv = _inv(_matmul(_matmul(L, w), L_INV))
    col = lambda j: (n_inv[0][j], n_inv[1][j])
    return TorusElement(t.character(*col(0)), t.character(*col(1)))


def weyl_compose(a, b):
    return _matmul(a, b)


# (g1, g1) = 3, (g2, g2) = 1, (g1, g2) = -3/2
_GRAM = ((Fraction(3), Fraction(-3, 2)), (Fraction(-3, 2), Fraction(1)))


def inner(a, b):
    return sum(a[i] * _GRAM[i][j] * b[j] for i in range(2) for j in range(2))


def pairing(a, b):
    """<a, b^vee> = 2 (a, b) / (b, b)."""
    v = 2 * inner(a, b) / inner(b, b)
    assert v.denominator == 1
    return int(v)


def coroot(b, z):
    """The torus element b^vee(z) for a QValue z."""
    check_root(b)
    return TorusElement(z ** pairing((1, 2), b), z ** pairing((1, 1), b))
