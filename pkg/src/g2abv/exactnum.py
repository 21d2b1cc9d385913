"""Exact arithmetic in the 12th cyclotomic field and with formal values u*q^a.

Nothing here uses floating point.  ``q`` is a formal symbol, so two values
u*q^a and u'*q^a' are equal exactly when u = u' and a = a'.
"""

from fractions import Fraction
from functools import total_ordering

Rational = Fraction

N = 12


class ParseError(ValueError):
    """Raised on malformed value strings; carries the offending position."""

    def __init__(self, message, text="", pos=0):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class EmbeddingError(ValueError):
    pass


@total_ordering
class RootOfUnity:
    """exp(2 pi i * frac) with frac a reduced fraction in [0, 1)."""

    __slots__ = ("frac",)

    def __init__(self, frac=0):
        self.frac = Fraction(frac) % 1

    @classmethod
    def of(cls, n, k=1):
        return cls(Fraction(k, n))

    @property
    def order(self):
        return self.frac.denominator

    def __mul__(self, other):
        return RootOfUnity(self.frac + other.frac)

    def __truediv__(self, other):
        return RootOfUnity(self.frac - other.frac)

    def __pow__(self, k):
        return RootOfUnity(self.frac * k)

    def inverse(self):
        return RootOfUnity(-self.frac)

    def __eq__(self, other):
        return isinstance(other, RootOfUnity) and self.frac == other.frac

    def __lt__(self, other):
        return self.frac < other.frac

    def __hash__(self):
        return hash(("rou", self.frac))

    def __repr__(self):
        return f"RootOfUnity({self.frac})"

    def __str__(self):
        if self.frac == 0:
            return "1"
        if self.frac == Fraction(1, 2):
            return "-1"
        n, k = self.frac.denominator, self.frac.numerator
        return f"zeta({n})" if k == 1 else f"zeta({n})^{k}"


def _reduce(coeffs):
    # z^4 = z^2 - 1, applied from the top down
    c = list(coeffs)
    for k in range(len(c) - 1, 3, -1):
        a = c[k]
        if a:
            c[k - 2] += a
            c[k - 4] -= a
        c[k] = 0
    c = c[:4] + [Fraction(0)] * (4 - len(c[:4]))
    return tuple(Fraction(x) for x in c)


class Cyclo:
    """Element of Q(z), z a primitive 12th root of unity, on the basis 1, z, z^2, z^3."""

    __slots__ = ("c",)

    def __init__(self, c=(0, 0, 0, 0)):
        if isinstance(c, (int, Fraction)):
            c = (c, 0, 0, 0)
        self.c = _reduce(c)

    @classmethod
    def zpow(cls, k):
        return _POWERS[k % N]

    @classmethod
    def embed(cls, u):
        """Embed a RootOfUnity (or a rational frac of a turn) whose order divides 12."""
        frac = u.frac if isinstance(u, RootOfUnity) else Fraction(u) % 1
        k = frac * N
        if k.denominator != 1:
            raise EmbeddingError(f"root of unity of order {frac.denominator} does not embed in Q(zeta12)")
        return _POWERS[int(k)]

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Cyclo):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclo(x)
        if isinstance(x, RootOfUnity):
            return cls.embed(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Cyclo")

    def __add__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return Cyclo(tuple(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(tuple(-a for a in self.c))

    def __sub__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return Cyclo.coerce(other) - self

    def __mul__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        prod = [Fraction(0)] * 7
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j, b in enumerate(o.c):
                if b:
                    prod[i + j] += a * b
        return Cyclo(prod)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, k):
        """The automorphism z -> z^k, k a unit mod 12."""
        if k % 2 == 0 or k % 3 == 0:
            raise ValueError(f"{k} is not a unit mod 12")
        out = ZERO
        for i, a in enumerate(self.c):
            if a:
                out = out + _POWERS[(i * k) % N] * a
        return out

    def conj(self):
        return self.galois(11)

    def norm(self):
        n = self * self.galois(5) * self.galois(7) * self.galois(11)
        assert n.is_rational(), n
        return n.c[0]

    def inverse(self):
        nm = self.norm()
        if nm == 0:
            raise ZeroDivisionError("inverse of zero in Q(zeta12)")
        return self.galois(5) * self.galois(7) * self.galois(11) * Fraction(1, 1) / nm

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclo(tuple(a / other for a in self.c))
        return self * Cyclo.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Cyclo.coerce(other) * self.inverse()

    def is_rational(self):
        return not any(self.c[1:])

    def is_zero(self):
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            o = Cyclo.coerce(other)
        except TypeError:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        if self.is_rational():
            return hash(self.c[0])
        return hash(self.c)

    def __repr__(self):
        return f"Cyclo({self.canonical()!r})"

    def canonical(self):
        """Render as 'a + b*z + c*z^2 + d*z^3' with zero terms dropped."""
        terms = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            mono = ("", "z", "z^2", "z^3")[i]
            mag = abs(a)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            terms.append(("-" if a < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = canonical

    def pretty(self):
        """Human form: recognises rational multiples of a single root of unity."""
        if self.is_rational():
            return str(self.c[0])
        hits = []
        for k in range(N):
            # z^k is a unit, so self * z^-k is rational iff self is a rational multiple of z^k
            r = self * _POWERS[(-k) % N]
            if r.is_rational():
                hits.append((r.c[0] < 0, k, r.c[0]))
        if hits:
            _, k, r = min(hits)
            return _scaled(r, _ROOT_NAMES[k])
        return self.canonical()

    @classmethod
    def parse(cls, text):
        """Inverse of canonical()."""
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty cyclotomic value", text, 0)
        coeffs = [Fraction(0)] * 4
        i = 0
        while i < len(s):
            start = i
            sign = 1
            if s[i] in "+-":
                sign = -1 if s[i] == "-" else 1
                i += 1
            j = i
            while j < len(s) and (s[j].isdigit() or s[j] == "/"):
                j += 1
            num = s[i:j]
            i = j
            power = 0
            if i < len(s) and s[i] == "*":
                i += 1
            if i < len(s) and s[i] == "z":
                i += 1
                power = 1
                if i < len(s) and s[i] == "^":
                    i += 1
                    if i >= len(s) or not s[i].isdigit():
                        raise ParseError("expected exponent", text, i)
                    power = int(s[i])
                    i += 1
            if not num and power == 0:
                raise ParseError("expected a term", text, start)
            try:
                a = Fraction(num) if num else Fraction(1)
            except (ValueError, ZeroDivisionError):
                raise ParseError("bad rational", text, start)
            if power > 3:
                raise ParseError("power of z above 3", text, i - 1)
            coeffs[power] += sign * a
            if i < len(s) and s[i] not in "+-":
                raise ParseError("unexpected character", text, i)
        return cls(coeffs)


def _scaled(r, name):
    if name == "1":
        return str(r)
    if r == 1:
        return name
    if r == -1:
        return "-" + name
    return f"{r}*{name}"


_ROOT_NAMES = {
    0: "1", 1: "z", 2: "z^2", 3: "i", 4: "theta3", 5: "z^5", 6: "-1",
    7: "z^7", 8: "theta3^2", 9: "-i", 10: "z^10", 11: "z^11",
}

ZERO = object.__new__(Cyclo)
ZERO.c = (Fraction(0),) * 4
ONE = object.__new__(Cyclo)
ONE.c = (Fraction(1),) + (Fraction(0),) * 3


def _build_powers():
    out, cur = [], ONE
    z = Cyclo((0, 1, 0, 0))
    for _ in range(N):
        out.append(cur)
        cur = cur * z
    return out


_POWERS = _build_powers()

THETA2 = _POWERS[6]
THETA3 = _POWERS[4]


def cyclo_arith(x, y, op):
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ValueError(f"unknown op {op!r}")


def cyclo_conj(x):
    return x.conj()


def cyclo_eq(x, y):
    return x == y


class QValue:
    """u * q^a for a root of unity u and a rational exponent a."""

    __slots__ = ("unit", "exp")

    def __init__(self, unit=None, exp=0):
        if unit is None:
            unit = RootOfUnity(0)
        elif not isinstance(unit, RootOfUnity):
            unit = RootOfUnity(unit)
        self.unit = unit
        self.exp = Fraction(exp)

    @classmethod
    def q(cls, a=1):
        return cls(RootOfUnity(0), a)

    def __mul__(self, other):
        return QValue(self.unit * other.unit, self.exp + other.exp)

    def __truediv__(self, other):
        return QValue(self.unit / other.unit, self.exp - other.exp)

    def __pow__(self, k):
        return QValue(self.unit ** k, self.exp * k)

    def inverse(self):
        return QValue(self.unit.inverse(), -self.exp)

    def __neg__(self):
        return QValue(self.unit * MINUS, self.exp)

    def __eq__(self, other):
        return isinstance(other, QValue) and self.unit == other.unit and self.exp == other.exp

    def __hash__(self):
        return hash((self.unit, self.exp))

    def is_one(self):
        return self.unit.frac == 0 and self.exp == 0

    def __repr__(self):
        return f"QValue({self})"

    def __str__(self):
        u = str(self.unit)
        if self.exp == 0:
            return u
        if self.exp == 1:
            qs = "q"
        elif self.exp.denominator == 1 and self.exp > 0:
            qs = f"q^{self.exp}"
        else:
            qs = f"q^({self.exp})"
        if u == "1":
            return qs
        if u == "-1":
            return "-" + qs
        return f"{u}*{qs}"

    @classmethod
    def parse(cls, text):
        return _QParser(text).parse()


MINUS = RootOfUnity(Fraction(1, 2))


def qvalue_mul(x, y):
    return x * y


def qvalue_pow(x, k):
    return x ** k


def qvalue_eq(x, y):
    return x == y


class _QParser:
    # value  := ['-'] factor ('*' factor)*
    # factor := 'zeta(' int ')' ['^' int] | 'q' ['^' exponent] | int
    # exponent := int | '-' int | '(' ['-'] int ['/' int] ')'

    def __init__(self, text):
        self.text = text
        self.s = text.replace(" ", "")
        self.i = 0

    def fail(self, msg):
        raise ParseError(msg, self.text, self.i)

    def peek(self):
        return self.s[self.i] if self.i < len(self.s) else ""

    def eat(self, tok):
        if self.s.startswith(tok, self.i):
            self.i += len(tok)
            return True
        return False

    def integer(self, signed=False):
        start = self.i
        if signed and self.peek() == "-":
            self.i += 1
        while self.peek().isdigit():
            self.i += 1
        body = self.s[start:self.i]
        if body in ("", "-"):
            self.i = start
            self.fail("expected an integer")
        return int(body)

    def exponent(self):
        if self.eat("("):
            num = self.integer(signed=True)
            den = 1
            if self.eat("/"):
                den = self.integer()
                if den == 0:
                    self.fail("zero denominator")
            if not self.eat(")"):
                self.fail("expected ')'")
            return Fraction(num, den)
        return Fraction(self.integer(signed=True))

    def factor(self, val):
        if self.eat("zeta("):
            n = self.integer()
            if n <= 0:
                self.fail("order must be positive")
            if not self.eat(")"):
                self.fail("expected ')'")
            k = self.exponent() if self.eat("^") else Fraction(1)
            if k.denominator != 1:
                self.fail("root-of-unity power must be an integer")
            return val * QValue(RootOfUnity(Fraction(int(k), n)), 0)
        if self.eat("q"):
            a = self.exponent() if self.eat("^") else Fraction(1)
            return val * QValue(RootOfUnity(0), a)
        if self.peek().isdigit():
            if self.integer() != 1:
                self.i -= 1
                self.fail("only the constant 1 is a valid scalar")
            return val
        self.fail("expected 'zeta(n)', 'q' or '1'")

    def parse(self):
        if not self.s:
            self.fail("empty value")
        val = QValue()
        if self.eat("-"):
            val = -val
        val = self.factor(val)
        while self.eat("*"):
            val = self.factor(val)
        if self.i != len(self.s):
            self.fail("unexpected trailing input")
        return val
