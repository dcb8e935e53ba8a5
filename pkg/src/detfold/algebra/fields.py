"""Exact scalar fields: rationals, prime fields F_q, quadratic extensions.

Rationals are plain ``fractions.Fraction`` (always reduced, positive
denominator).  Prime-field and extension elements are small wrapper objects
supporting the usual operators, so polynomial and matrix code is generic in
the field.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InputError, Rejection

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 2^31."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field of exact rationals; elements are fractions.Fraction."""

    char = 0
    name = "rational"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise InputError(f"cannot coerce {x!r} into the rational field")

    def from_fraction(self, fr: Fraction) -> Fraction:
        return fr

    def sqrt(self, a: Fraction):
        """Exact square root, or None when a is not a square."""
        if a < 0:
            return None
        num, den = a.numerator, a.denominator
        rn = _isqrt_exact(num)
        rd = _isqrt_exact(den)
        if rn is None or rd is None:
            return None
        return Fraction(rn, rd)

    def sort_key(self, a: Fraction):
        return (a.numerator, a.denominator)

    def format(self, a: Fraction) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational-field")

    def __repr__(self):
        return "QQ"


def _isqrt_exact(n: int):
    import math

    r = math.isqrt(n)
    return r if r * r == n else None


QQ = RationalField()


class FpElt:
    """Element of a prime field, normalized residue in [0, q)."""

    __slots__ = ("v", "field")

    def __init__(self, v: int, field: "PrimeField"):
        self.v = v % field.q
        self.field = field

    def _lift(self, other):
        if isinstance(other, FpElt):
            if other.field.q != self.field.q:
                raise InputError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElt(other, self.field)
        if isinstance(other, Fraction):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElt(self.v + o.v, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElt(self.v - o.v, self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElt(o.v - self.v, self.field)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElt(self.v * o.v, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElt(-self.v, self.field)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return FpElt(pow(self.v, e, self.field.q), self.field)

    def inverse(self) -> "FpElt":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return FpElt(pow(self.v, self.field.q - 2, self.field.q), self.field)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        if isinstance(other, FpElt):
            return self.v == other.v and self.field.q == other.field.q
        if isinstance(other, int):
            return self.v == other % self.field.q
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.field.q))

    def __repr__(self):
        return f"{self.v}"


class PrimeField:
    """F_q for a prime q < 2^31 (q > 2 so quadratic forms behave)."""

    def __init__(self, q: int):
        if not isinstance(q, int) or q >= 2**31 or not is_prime(q):
            raise InputError(f"field modulus must be a prime below 2^31, got {q}")
        if q == 2:
            raise Rejection("characteristic 2 is unsupported (symmetric forms degenerate)")
        self.q = q
        self.char = q
        self.name = f"fp:{q}"

    def zero(self) -> FpElt:
        return FpElt(0, self)

    def one(self) -> FpElt:
        return FpElt(1, self)

    def from_int(self, n: int) -> FpElt:
        return FpElt(n, self)

    def coerce(self, x):
        if isinstance(x, FpElt):
            if x.field.q != self.q:
                raise InputError("mixed prime fields")
            return x
        if isinstance(x, int):
            return FpElt(x, self)
        if isinstance(x, Fraction):
            if x.denominator % self.q == 0:
                raise Rejection(f"denominator of {x} vanishes mod {self.q}")
            return FpElt(x.numerator, self) / FpElt(x.denominator, self)
        raise InputError(f"cannot coerce {x!r} into F_{self.q}")

    def sqrt(self, a: FpElt):
        """Tonelli-Shanks; returns the smaller-residue root, or None."""
        v, q = a.v % self.q, self.q
        if v == 0:
            return self.zero()
        if pow(v, (q - 1) // 2, q) != 1:
            return None
        if q % 4 == 3:
            r = pow(v, (q + 1) // 4, q)
        else:
            s, e = q - 1, 0
            while s % 2 == 0:
                s //= 2
                e += 1
            n = 2
            while pow(n, (q - 1) // 2, q) != q - 1:
                n += 1
            x = pow(v, (s + 1) // 2, q)
            b = pow(v, s, q)
            g = pow(n, s, q)
            r_exp = e
            while True:
                t, m = b, 0
                while t != 1:
                    t = t * t % q
                    m += 1
                if m == 0:
                    r = x
                    break
                gs = pow(g, 2 ** (r_exp - m - 1), q)
                x = x * gs % q
                b = b * gs * gs % q
                g = gs * gs % q
                r_exp = m
        r = min(r, q - r)
        return FpElt(r, self)

    def sort_key(self, a: FpElt):
        return (a.v,)

    def format(self, a: FpElt) -> str:
        return str(a.v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("prime-field", self.q))

    def __repr__(self):
        return f"GF({self.q})"


class QuadExtElt:
    """a + b*sqrt(d) over a base field in which d is not a square."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a, b, field: "QuadExt"):
        self.a = a
        self.b = b
        self.field = field

    def _lift(self, other):
        if isinstance(other, QuadExtElt):
            if other.field is not self.field and other.field != self.field:
                raise InputError("mixed quadratic extensions")
            return other
        try:
            return self.field.coerce(other)
        except (InputError, Rejection):
            return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtElt(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtElt(self.a - o.a, self.b - o.b, self.field)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtElt(o.a - self.a, o.b - self.b, self.field)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        d = self.field.d
        return QuadExtElt(
            self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, self.field
        )

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExtElt(-self.a, -self.b, self.field)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "QuadExtElt":
        # norm a^2 - d b^2 is nonzero for nonzero elements since d is a non-square
        n = self.a * self.a - self.field.d * self.b * self.b
        if not n:
            raise ZeroDivisionError("inverse of 0 in quadratic extension")
        return QuadExtElt(self.a / n, -self.b / n, self.field)

    def conjugate(self) -> "QuadExtElt":
        return QuadExtElt(self.a, -self.b, self.field)

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, "quadext"))

    def __repr__(self):
        return f"({self.a}+{self.b}*r{self.field.d})"


class QuadExt:
    """Quadratic extension base(sqrt(d)) adjoined on demand."""

    def __init__(self, base, d):
        d = base.coerce(d)
        if base.sqrt(d) is not None:
            raise InputError(f"{d} is a square in the base field; extension is trivial")
        self.base = base
        self.d = d
        self.char = base.char
        self.name = f"{base.name}(sqrt {base.format(d)})"

    def zero(self) -> QuadExtElt:
        return QuadExtElt(self.base.zero(), self.base.zero(), self)

    def one(self) -> QuadExtElt:
        return QuadExtElt(self.base.one(), self.base.zero(), self)

    def from_int(self, n: int) -> QuadExtElt:
        return QuadExtElt(self.base.from_int(n), self.base.zero(), self)

    def root(self) -> QuadExtElt:
        return QuadExtElt(self.base.zero(), self.base.one(), self)

    def coerce(self, x):
        if isinstance(x, QuadExtElt):
            if x.field != self:
                raise InputError("element of a different quadratic extension")
            return x
        return QuadExtElt(self.base.coerce(x), self.base.zero(), self)

    def sqrt(self, a: QuadExtElt):
        # Only needed for base-field values that became squares up here.
        if not a.b:
            r = self.base.sqrt(a.a)
            if r is not None:
                return self.coerce(r)
            if isinstance(self.base, PrimeField):
                # a = (x*sqrt(d))^2 with x^2 = a/d; always solvable in F_q(sqrt d)
                x = self.base.sqrt(a.a / self.d)
                if x is not None:
                    return QuadExtElt(self.base.zero(), x, self)
        return None

    def sort_key(self, a: QuadExtElt):
        return self.base.sort_key(a.a) + self.base.sort_key(a.b)

    def format(self, a: QuadExtElt) -> str:
        if not a.b:
            return self.base.format(a.a)
        return f"{self.base.format(a.a)}+{self.base.format(a.b)}*sqrt({self.base.format(self.d)})"

    def __eq__(self, other):
        return isinstance(other, QuadExt) and other.base == self.base and other.d == self.d

    def __hash__(self):
        return hash(("quad-ext", self.base, "d"))

    def __repr__(self):
        return self.name


def field_from_name(name: str):
    """Parse 'rational' or 'fp:Q' into a field object."""
    if name == "rational":
        return QQ
    if name.startswith("fp:"):
        try:
            q = int(name[3:])
        except ValueError:
            raise InputError(f"bad field spec {name!r}") from None
        return PrimeField(q)
    raise InputError(f"unknown field {name!r} (expected 'rational' or 'fp:Q')")
