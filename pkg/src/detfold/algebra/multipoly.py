"""Sparse multivariate polynomials over an exact field.

Terms live in a dict mapping exponent tuples to nonzero coefficients.  The
printing order is graded lexicographic (total degree first, then x1 > x2 > ...)
so output is deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import DegenerateResultant, InputError

VARS_X = ("x1", "x2", "x3")
VARS_XU = ("x1", "x2", "x3", "u1", "u2", "u3")


class MultiPoly:
    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, vars: tuple, terms: dict):
        self.field = field
        self.vars = vars
        self.terms = {e: c for e, c in terms.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field, vars) -> "MultiPoly":
        return cls(field, vars, {})

    @classmethod
    def constant(cls, field, vars, c) -> "MultiPoly":
        c = field.coerce(c)
        return cls(field, vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def variable(cls, field, vars, name: str) -> "MultiPoly":
        if name not in vars:
            raise InputError(f"unknown variable {name!r}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(field, vars, {e: field.one()})

    # -- basic structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Total degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {sum(e) for e in self.terms}
        return len(degs) == 1

    def degree_in(self, var: str) -> int:
        i = self.vars.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def involves(self, var: str) -> bool:
        i = self.vars.index(var)
        return any(e[i] > 0 for e in self.terms)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "MultiPoly"):
        if self.vars != other.vars or self.field != other.field:
            raise InputError("polynomial ring mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            s = c if s is None else s + c
            if s:
                terms[e] = s
            elif e in terms:
                del terms[e]
        return MultiPoly(self.field, self.vars, terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.field, self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                s = c if s is None else s + c
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return MultiPoly(self.field, self.vars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "MultiPoly":
        c = self.field.coerce(c)
        if not c:
            return MultiPoly.zero(self.field, self.vars)
        return MultiPoly(self.field, self.vars, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise InputError("negative polynomial power")
        out = MultiPoly.constant(self.field, self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items(), key=lambda t: t[0]))))

    # -- calculus and evaluation ----------------------------------------------

    def diff(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        out: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
            nc = c * self.field.from_int(e[i])
            if nc:
                out[ne] = out.get(ne, self.field.zero()) + nc
        return MultiPoly(self.field, self.vars, {e: c for e, c in out.items() if c})

    def evaluate(self, values) -> object:
        """Value at a coordinate tuple (scalars of this field or coercible)."""
        if len(values) != len(self.vars):
            raise InputError(
                f"dimension mismatch: {len(self.vars)} variables, {len(values)} coordinates"
            )
        vals = [self.field.coerce(v) for v in values]
        total = self.field.zero()
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                for _ in range(k):
                    t = t * v
            total = total + t
        return total

    def substitute(self, mapping: dict, target: "MultiPoly | None" = None) -> "MultiPoly":
        """Substitute polynomials (or scalars) for variables.

        mapping: var name -> MultiPoly over the target ring, or a scalar.
        Unmapped variables must exist in the target ring.
        """
        if target is None:
            tfield, tvars = self.field, self.vars
        else:
            tfield, tvars = target.field, target.vars
        subs = []
        for v in self.vars:
            if v in mapping:
                m = mapping[v]
                if not isinstance(m, MultiPoly):
                    m = MultiPoly.constant(tfield, tvars, m)
                subs.append(m)
            else:
                subs.append(MultiPoly.variable(tfield, tvars, v))
        out = MultiPoly.zero(tfield, tvars)
        for e, c in self.terms.items():
            t = MultiPoly.constant(tfield, tvars, tfield.coerce(c))
            for sub, k in zip(subs, e):
                if k:
                    t = t * sub**k
            out = out + t
        return out

    def map_field(self, field) -> "MultiPoly":
        """Move coefficients into another field via coercion (e.g. reduce mod q)."""
        out: dict = {}
        for e, c in self.terms.items():
            nc = field.coerce(c)
            if nc:
                out[e] = nc
        return MultiPoly(field, self.vars, out)

    # -- division ---------------------------------------------------------

    def lead(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def try_divide(self, divisor: "MultiPoly"):
        """Exact quotient self/divisor, or None if division is not exact."""
        self._check(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self
        out = MultiPoly.zero(self.field, self.vars)
        de, dc = divisor.lead()
        while not rem.is_zero:
            re_, rc = rem.lead()
            qe = tuple(a - b for a, b in zip(re_, de))
            if any(k < 0 for k in qe):
                return None
            qc = rc / dc
            qterm = MultiPoly(self.field, self.vars, {qe: qc})
            out = out + qterm
            rem = rem - qterm * divisor
        return out

    def divides(self, other: "MultiPoly") -> bool:
        return other.try_divide(self) is not None

    # -- univariate views ----------------------------------------------------

    def coeffs_in(self, var: str) -> list:
        """Coefficients (as MultiPoly in the same ring) of powers of var, ascending."""
        i = self.vars.index(var)
        d = self.degree_in(var)
        buckets: list[dict] = [dict() for _ in range(max(d, 0) + 1)]
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1 :]
            buckets[e[i]][ne] = c
        return [MultiPoly(self.field, self.vars, b) for b in buckets]

    # -- printing --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)
        parts = []
        for idx, (e, c) in enumerate(items):
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k > 0
            )
            cs = self.field.format(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if mono and mag == "1":
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = mag
            if idx == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self})"


def _grlex_key(e: tuple):
    return (sum(e), tuple(-k for k in reversed(e)))


def poly_matrix_det(entries: list) -> MultiPoly:
    """Determinant of a small square matrix of polynomials (cofactor expansion)."""
    n = len(entries)
    if n == 1:
        return entries[0][0]
    first = entries[0][0]
    field, vars = first.field, first.vars
    total = MultiPoly.zero(field, vars)
    for j in range(n):
        if entries[0][j].is_zero:
            continue
        minor = [[entries[i][k] for k in range(n) if k != j] for i in range(1, n)]
        sub = poly_matrix_det(minor)
        term = entries[0][j] * sub
        total = total + term if j % 2 == 0 else total - term
    return total


def resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of f and g with respect to var.

    The result is a polynomial free of var; it vanishes identically iff f and
    g share a factor involving var.  Computed fraction-free (Bareiss), so all
    intermediate divisions are exact.
    """
    if f.is_zero or g.is_zero:
        raise InputError("resultant of the zero polynomial")
    m, n = f.degree_in(var), g.degree_in(var)
    if m <= 0 or n <= 0:
        raise DegenerateResultant(f"input free of {var}: degrees ({m}, {n})")
    fc = f.coeffs_in(var)
    gc = g.coeffs_in(var)
    size = m + n
    zero = MultiPoly.zero(f.field, f.vars)
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in enumerate(reversed(fc)):
            row[i + k] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in enumerate(reversed(gc)):
            row[i + k] = c
        rows.append(row)
    return _bareiss_det(rows)


def _bareiss_det(mat: list) -> MultiPoly:
    """Fraction-free determinant over a polynomial ring."""
    n = len(mat)
    if n == 0:
        raise InputError("empty matrix")
    field, vars = mat[0][0].field, mat[0][0].vars
    one = MultiPoly.constant(field, vars, 1)
    m = [row[:] for row in mat]
    sign = 1
    prev = one
    for k in range(n - 1):
        if m[k][k].is_zero:
            pivot_row = next((i for i in range(k + 1, n) if not m[i][k].is_zero), None)
            if pivot_row is None:
                return MultiPoly.zero(field, vars)
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = num.try_divide(prev)
                if q is None:
                    raise InputError("fraction-free elimination failed (non-exact division)")
                m[i][j] = q
            m[i][k] = MultiPoly.zero(field, vars)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det
