"""Truncated power series in one local parameter s, exact coefficients."""

from __future__ import annotations


class TruncSeries:
    """Coefficients c[0..order] of a series known modulo s^(order+1)."""

    __slots__ = ("field", "order", "coeffs")

    def __init__(self, field, order, coeffs):
        cs = [field.coerce(c) for c in coeffs[: order + 1]]
        cs += [field.zero] * (order + 1 - len(cs))
        self.field = field
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, field, order, c):
        return cls(field, order, [c])

    def __add__(self, other):
        order = min(self.order, other.order)
        return TruncSeries(self.field, order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        order = min(self.order, other.order)
        return TruncSeries(self.field, order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.field, self.order, [c * other for c in self.coeffs])
        order = min(self.order, other.order)
        out = [self.field.zero] * (order + 1)
        for i, a in enumerate(self.coeffs[: order + 1]):
            if self.field.is_zero(a):
                continue
            for j in range(0, order + 1 - i):
                b = other.coeffs[j]
                if not self.field.is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(self.field, order, out)

    __rmul__ = __mul__

    def scale(self, c):
        return TruncSeries(self.field, self.order, [a * c for a in self.coeffs])

    def valuation(self):
        """Index of the first nonzero coefficient, or None if zero so far."""
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                return i
        return None

    def coeff(self, i):
        return self.coeffs[i]

    def __repr__(self):
        return f"TruncSeries(order={self.order}, {list(self.coeffs)})"


def series_pow_cache(base: TruncSeries):
    """Memoized nonnegative powers of a series."""
    one = TruncSeries.constant(base.field, base.order, base.field.one)
    cache = {0: one}

    def power(n):
        if n not in cache:
            cache[n] = power(n - 1) * base
        return cache[n]

    return power


def eval_form_on_series(form, sx, sy, sz):
    """Evaluate a homogeneous form at three series with compatible field."""
    px, py, pz = series_pow_cache(sx), series_pow_cache(sy), series_pow_cache(sz)
    field = sx.field
    order = min(sx.order, sy.order, sz.order)
    acc = TruncSeries(field, order, [])
    for (a, b, c), coeff in form.terms.items():
        term = px(a) * py(b) * pz(c)
        acc = acc + term.scale(field.coerce(coeff))
    return acc
