"""Factorization of univariate polynomials over a number field (norm method).

For squarefree f over K = Q[t]/(m) pick a small integer shift s so that the
norm N(x) = Res_t(m(t), f(x - s*t)) is squarefree over Q; then the factors
of f over K are the gcds of f with the rational factors of N shifted back.
Only single extensions of Q are handled.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, NumberField
from .qpoly import factor_rational, squarefree_q
from .unipoly import UniPoly, gcd as poly_gcd, lagrange_interpolate, resultant, squarefree_decomposition


def _shifted_in_t(f: UniPoly, s: int, x0: Fraction) -> UniPoly:
    """f(x0 - s*t) as a polynomial in t over Q, replacing coefficients by
    their power-basis polynomials."""
    K = f.field
    lin = UniPoly(QQ, [Fraction(x0), Fraction(-s)])  # x0 - s*t
    acc = UniPoly.zero(QQ)
    power = UniPoly.const(1, QQ)
    for i, c in enumerate(f.coeffs):
        cpoly = UniPoly(QQ, list(c.coords))
        acc = acc + cpoly * power
        if i < len(f.coeffs) - 1:
            power = power * lin
    return acc


def _norm(f: UniPoly, s: int) -> UniPoly:
    K = f.field
    m = UniPoly(QQ, list(K.min_poly))
    n = f.degree * K.degree
    pts = []
    k = 0
    while len(pts) < n + 1:
        for x0 in ([Fraction(0)] if k == 0 else [Fraction(k), Fraction(-k)]):
            if len(pts) == n + 1:
                break
            pts.append((x0, resultant(m, _shifted_in_t(f, s, x0))))
        k += 1
    return lagrange_interpolate(pts, QQ)


def factor_squarefree_over_field(f: UniPoly):
    """Monic irreducible factors over the number field of a squarefree input."""
    K = f.field
    if not isinstance(K, NumberField):
        raise ValueError("use factor_rational over Q")
    f = f.monic()
    if f.degree <= 1:
        return [f]
    for s in (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5):
        norm = _norm(f, s)
        if norm.degree != f.degree * K.degree:
            continue
        if not squarefree_q(norm):
            continue
        _, rational_factors = factor_rational(norm)
        shift = K.gen * s  # factor of N(x) matches f via x -> x + s*t
        out = []
        for nf, _ in rational_factors:
            lifted = UniPoly(K, [K.coerce(c) for c in nf.coeffs]).shift(shift)
            g = poly_gcd(f, lifted)
            if g.degree >= 1:
                out.append(g.monic())
        total = sum(g.degree for g in out)
        if total != f.degree:
            continue
        out.sort(key=lambda g: (g.degree, tuple(tuple(c.coords) for c in g.coeffs)))
        return out
    raise ValueError("no squarefree norm found; extension may be degenerate")


def factor_over_field(p: UniPoly):
    """(unit, [(monic irreducible, multiplicity)]) over a number field."""
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    K = p.field
    unit = p.lc
    out = []
    for w, mult in squarefree_decomposition(p):
        for g in factor_squarefree_over_field(w):
            out.append((g, mult))
    out.sort(key=lambda fm: (fm[0].degree, tuple(tuple(c.coords) for c in fm[0].coeffs)))
    return unit, out
