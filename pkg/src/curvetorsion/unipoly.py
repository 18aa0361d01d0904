"""Dense univariate polynomials over Q or a number field.

Coefficients are stored constant-term first with a nonzero leading
coefficient (the zero polynomial has an empty tuple and degree -1).
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, AlgNum, FieldError


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        cs = [field.coerce(c) for c in coeffs]
        n = len(cs)
        while n > 0 and field.is_zero(cs[n - 1]):
            n -= 1
        self.coeffs = tuple(cs[:n])

    @classmethod
    def zero(cls, field=QQ):
        return cls(field, [])

    @classmethod
    def const(cls, c, field=QQ):
        return cls(field, [c])

    @classmethod
    def x(cls, field=QQ):
        return cls(field, [0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self):
        if self.is_zero():
            return self
        inv = 1 / self.lc if not isinstance(self.lc, AlgNum) else self.lc.inverse()
        return UniPoly(self.field, [c * inv for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [self.field.zero] * (n - len(self.coeffs))
        b = list(other.coeffs) + [self.field.zero] * (n - len(other.coeffs))
        return UniPoly(self.field, [x + y for x, y in zip(a, b)])

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, AlgNum)):
            c = self.field.coerce(other)
            return UniPoly(self.field, [a * c for a in self.coeffs])
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPoly.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if self.field.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = UniPoly.const(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            if other.field == self.field:
                return other
            if other.field == QQ:
                return UniPoly(self.field, list(other.coeffs))
            raise FieldError("polynomials over incompatible fields")
        if isinstance(other, (int, Fraction, AlgNum)):
            return UniPoly(self.field, [other])
        raise TypeError(f"cannot combine UniPoly with {other!r}")

    def divmod(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if self.degree < db:
            return UniPoly.zero(self.field), self
        inv = 1 / other.lc if not isinstance(other.lc, AlgNum) else other.lc.inverse()
        q = [self.field.zero] * (self.degree - db + 1)
        for i in range(self.degree - db, -1, -1):
            c = rem[i + db] * inv
            if not self.field.is_zero(c):
                q[i] = c
                for j, bj in enumerate(other.coeffs):
                    rem[i + j] = rem[i + j] - c * bj
        return UniPoly(self.field, q), UniPoly(self.field, rem[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def derivative(self):
        return UniPoly(self.field, [i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, a):
        """p(x + a)."""
        result = UniPoly.zero(self.field)
        xa = UniPoly(self.field, [a, 1])
        for c in reversed(self.coeffs):
            result = result * xa + UniPoly.const(c, self.field)
        return result

    def compose(self, other):
        result = UniPoly.zero(self.field)
        for c in reversed(self.coeffs):
            result = result * other + UniPoly.const(c, self.field)
        return result

    def __repr__(self):
        if self.is_zero():
            return "UniPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if self.field.is_zero(c):
                continue
            if i == 0:
                parts.append(f"({c})")
            elif i == 1:
                parts.append(f"({c})*x")
            else:
                parts.append(f"({c})*x^{i}")
        return " + ".join(parts)


def gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm (valid over any field)."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def squarefree_decomposition(p: UniPoly):
    """Yun-style decomposition: list of (monic factor, multiplicity).

    The product of factor^multiplicity times the leading coefficient
    reconstructs p.  Works over Q and over number fields.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    if p.degree == 0:
        return []
    w = p.monic()
    out = []
    g = gcd(w, w.derivative())
    c = w.exact_div(g)  # product of distinct factors
    k = 1
    while c.degree > 0:
        nxt = gcd(c, g)
        piece = c.exact_div(nxt)
        if piece.degree > 0:
            out.append((piece.monic(), k))
        c = nxt
        g = g.exact_div(nxt)
        k += 1
    return out


def squarefree_part(p: UniPoly) -> UniPoly:
    if p.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    prod = UniPoly.const(1, p.field)
    for f, _ in squarefree_decomposition(p):
        prod = prod * f
    return prod


def resultant(p: UniPoly, q: UniPoly):
    """Resultant with the Sylvester determinant convention.

    Computed by fraction-free Bareiss elimination on the Sylvester matrix,
    which stays exact over Q and over number fields.  Res(p, q) = 0 exactly
    when p and q share a nonconstant common factor.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("resultant of two zero polynomials is undefined")
    if p.is_zero() or q.is_zero():
        other = q if p.is_zero() else p
        if other.degree <= 0:
            raise ValueError("resultant of a constant with the zero polynomial is undefined")
        return other.field.zero
    n, m = p.degree, q.degree
    if n == 0:
        return p.coeffs[0] ** m
    if m == 0:
        return q.coeffs[0] ** n
    field = p.field if p.field != QQ else q.field
    pc = [field.coerce(c) for c in p.coeffs]
    qc = [field.coerce(c) for c in q.coeffs]
    size = n + m
    rows = []
    for i in range(m):
        row = [field.zero] * size
        for j, c in enumerate(reversed(pc)):
            row[i + j] = c
        rows.append(row)
    for i in range(n):
        row = [field.zero] * size
        for j, c in enumerate(reversed(qc)):
            row[i + j] = c
        rows.append(row)
    return _bareiss_det(field, rows)


def _bareiss_det(field, rows):
    """Determinant by Bareiss elimination with exact division."""
    n = len(rows)
    if n == 0:
        return field.one
    sign = 1
    prev = field.one
    m = [row[:] for row in rows]
    for k in range(n - 1):
        if field.is_zero(m[k][k]):
            pivot = next((i for i in range(k + 1, n) if not field.is_zero(m[i][k])), None)
            if pivot is None:
                return field.zero
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num / prev
            m[i][k] = field.zero
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def from_fraction_list(coeffs, field=QQ):
    return UniPoly(field, coeffs)


def lagrange_interpolate(points, field=QQ):
    """Unique polynomial of degree < len(points) through (x_i, y_i)."""
    result = UniPoly.zero(field)
    xs = [field.coerce(x) for x, _ in points]
    for i, (_, yi) in enumerate(points):
        num = UniPoly.const(1, field)
        den = field.one
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * UniPoly(field, [-xj, 1])
            den = den * (xs[i] - xj)
        result = result + num * (field.coerce(yi) / den)
    return result
