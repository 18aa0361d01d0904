"""Univariate factorization and gcd over Q, delegated to sympy.

Only the rational base field goes through sympy; number field polynomials
use the Euclidean routines in unipoly.  Conversions are exact (Fraction
to sympy.Rational and back).
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .fields import QQ
from .unipoly import UniPoly

_X = sympy.Symbol("x")


def to_sympy(p: UniPoly):
    if p.field != QQ:
        raise ValueError("sympy bridge is for rational polynomials only")
    return sympy.Poly([sympy.Rational(c) for c in reversed(p.coeffs)] or [0], _X, domain="QQ")


def from_sympy(poly) -> UniPoly:
    coeffs = [Fraction(c.p, c.q) for c in reversed(poly.all_coeffs())]
    return UniPoly(QQ, coeffs)


def factor_rational(p: UniPoly):
    """Factor over Q: returns (leading unit, [(monic irreducible, multiplicity)]).

    The unit times the product of factor^multiplicity reconstructs p exactly.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit, factors = to_sympy(p).factor_list()
    unit = Fraction(sympy.Rational(unit).p, sympy.Rational(unit).q)
    out = []
    for fac, mult in factors:
        f = from_sympy(fac)
        lead = f.lc
        if lead != 1:
            unit *= lead**mult
            f = f.monic()
        out.append((f, int(mult)))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return unit, out


def is_irreducible_q(coeffs) -> bool:
    p = UniPoly(QQ, list(coeffs))
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    _, factors = factor_rational(p)
    return len(factors) == 1 and factors[0][1] == 1


def gcd_q(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic gcd over Q via sympy (fast on large inputs)."""
    g = sympy.gcd(to_sympy(p), to_sympy(q))
    g = from_sympy(sympy.Poly(g, _X, domain="QQ"))
    return g.monic() if not g.is_zero() else g


def squarefree_q(p: UniPoly) -> bool:
    if p.is_zero():
        return False
    if p.degree == 0:
        return True
    return gcd_q(p, p.derivative()).degree == 0
