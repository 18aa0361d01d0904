"""Property-based checks of the exact-arithmetic invariants."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from curvetorsion.fields import QQ
from curvetorsion.homopoly import HomogeneousPoly, monomials
from curvetorsion.linalg import det_int, kernel_basis, rank, smith_normal_form
from curvetorsion.parsing import parse_poly
from curvetorsion.qpoly import factor_rational
from curvetorsion.unipoly import UniPoly, gcd, resultant

small_int = st.integers(min_value=-9, max_value=9)


def upoly(min_deg=0, max_deg=4):
    return st.lists(small_int, min_size=min_deg + 1, max_size=max_deg + 1).map(
        lambda cs: UniPoly(QQ, cs)
    )


@settings(max_examples=60, deadline=None)
@given(upoly(1, 3), upoly(1, 3), upoly(0, 2))
def test_resultant_vanishes_iff_common_factor(a, b, c):
    if a.is_zero() or b.is_zero():
        return
    p, q = a * c, b * c
    if p.is_zero() or q.is_zero():
        return
    g = gcd(p, q)
    r = resultant(p, q)
    assert (r == 0) == (g.degree > 0)


@settings(max_examples=40, deadline=None)
@given(upoly(1, 5))
def test_factorization_reexpands(p):
    if p.is_zero():
        return
    unit, factors = factor_rational(p)
    prod = UniPoly.const(unit, QQ)
    for f, m in factors:
        assert f.lc == 1
        prod = prod * f**m
    assert prod == p


matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda nc: st.lists(
        st.lists(small_int, min_size=nc, max_size=nc), min_size=1, max_size=4
    )
)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_kernel_vectors_annihilate(m):
    nc = len(m[0])
    basis = kernel_basis(m, nc, QQ)
    assert rank(m, QQ) + len(basis) == nc
    for v in basis:
        for row in m:
            assert sum(Fraction(a) * b for a, b in zip(row, v)) == 0


@settings(max_examples=40, deadline=None)
@given(matrices)
def test_smith_transform_identity(m):
    factors, left, right = smith_normal_form(m)
    nr, nc = len(m), len(m[0])
    assert abs(det_int(left)) == 1 and abs(det_int(right)) == 1
    lm = [[sum(left[i][k] * m[k][j] for k in range(nr)) for j in range(nc)] for i in range(nr)]
    lmr = [
        [sum(lm[i][k] * right[k][j] for k in range(nc)) for j in range(nc)] for i in range(nr)
    ]
    for i in range(nr):
        for j in range(nc):
            expected = factors[i] if i == j and i < len(factors) else 0
            assert lmr[i][j] == expected
    nonzero = [f for f in factors if f]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0


def hpoly(degree):
    monos = monomials(degree)
    return st.lists(small_int, min_size=len(monos), max_size=len(monos)).map(
        lambda cs: HomogeneousPoly(QQ, degree, dict(zip(monos, map(Fraction, cs))))
    )


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=4).flatmap(hpoly))
def test_parser_roundtrip(p):
    if p.is_zero():
        return
    assert parse_poly(p.text()) == p


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=2, max_value=6),
    st.lists(st.integers(min_value=1, max_value=6), min_size=1, max_size=2),
)
def test_exponent_vectors_properties(n, degrees):
    from math import gcd as igcd

    from curvetorsion.covers import canonical_exponent, exponent_vectors

    theta = exponent_vectors(n, tuple(degrees))
    for a in theta.representatives:
        assert sum(x * d for x, d in zip(a, degrees)) % n == 0
        g = 0
        for x in a:
            g = igcd(g, x)
        assert igcd(g, n) == 1
        # representatives are fixed points of the canonical map
        assert canonical_exponent(n, a) == a
        for l in range(1, n):
            if igcd(l, n) == 1:
                assert canonical_exponent(n, tuple((l * x) % n for x in a)) == a


@settings(max_examples=25, deadline=None)
@given(small_int, small_int, small_int, small_int)
def test_local_param_resubstitution(b, c, d, e):
    # conics through (0 : 0 : 1); local_param certifies f(branch) = 0 exactly
    from curvetorsion.curves import (
        GeometryError,
        PlaneCurve,
        check_smooth,
        cluster_from_point,
        local_param,
    )

    terms = {(1, 1, 0): b, (2, 0, 0): c, (0, 2, 0): e, (1, 0, 1): d, (0, 1, 1): 1}
    try:
        curve = PlaneCurve(HomogeneousPoly.from_terms(terms))
    except (ValueError, GeometryError):
        return
    if not check_smooth(curve).is_smooth:
        return
    cl = cluster_from_point((0, 0, 1), curve=curve)
    param = local_param(curve, cl, order=6)  # raises if re-substitution fails
    assert len(param.y_coeffs) == 7


@settings(max_examples=12, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=2, max_value=3))
def test_intersection_bezout_total(seed, degree):
    from curvetorsion.construct import rand_form
    from curvetorsion.curves import (
        CommonComponentError,
        GeometryError,
        PlaneCurve,
        check_smooth,
        intersect,
    )
    import random

    rng = random.Random(seed)
    try:
        d = PlaneCurve(rand_form(2, rng))
        c = PlaneCurve(rand_form(degree, rng))
    except GeometryError:
        return
    if not check_smooth(d).is_smooth:
        return
    try:
        div = intersect(d, c, rng_seed=seed)
    except (CommonComponentError, GeometryError):
        return
    assert div.degree() == d.degree * c.degree
