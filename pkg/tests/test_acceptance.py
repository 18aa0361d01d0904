"""Acceptance suite: one test per criterion, every assertion exact.

Each test prints a single PASS line with its wall time (visible with -v -s;
the assertions themselves are the gate).  Budgets are generous; the whole
suite is expected to finish in well under its limits on a laptop.
"""

import time
from fractions import Fraction

import pytest

from curvetorsion import (
    DivisorClass,
    EllipticChart,
    HomogeneousPoly,
    Part,
    PicardContext,
    PlaneCurve,
    certify,
    cluster_from_point,
    comb_type,
    elliptic_class_order,
    equiv_maps,
    admissible,
    intersect,
    parse_poly,
    relation_lattice,
    splitting_number,
    splitting_table,
    torsion_order,
)
from curvetorsion.covers import Decomposition, permuted_lattice_hnf


def form(terms):
    return HomogeneousPoly.from_terms(terms)


def _pass(name, t0):
    print(f"PASS {name} ({time.time() - t0:.1f}s)")


def test_criterion_1_three_artal_reproduction(artal_pair):
    t0 = time.time()
    dec_col, dec_non = artal_pair
    assert dec_col.n == 3 and dec_non.n == 3
    res_col = torsion_order(dec_col.classes[0], 3)
    res_non = torsion_order(dec_non.classes[0], 3)
    assert res_col.order == 1
    assert res_col.witness.normalized() == form({(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert res_non.order == 3
    rep = certify(dec_col, dec_non)
    assert rep.verdict == "ZariskiPair" and rep.rule == "Cor (i)"
    assert rep.orders == ((1,), (3,))
    _pass("criterion 1: 3-Artal pair via Cor (i), orders (1, 3), witness x+y+z", t0)


def test_criterion_2_splitting_numbers(artal_pair, tangent_pair, chain_4661, chain_4662, pair_4663):
    t0 = time.time()
    dec_col, dec_non = artal_pair
    assert splitting_number(dec_col, (1,)) == (1, 3)
    assert splitting_number(dec_non, (1,)) == (3, 1)
    corpus = [dec_col, dec_non, *tangent_pair]
    for pair in (chain_4661[1], chain_4662[2], pair_4663):
        corpus.append(Decomposition(pair.d, [Part((pair.c,))], name="typed"))
    entries = 0
    for dec in corpus:
        table = splitting_table(dec)
        for nu, s in table.entries.values():
            assert nu * s == table.n
            entries += 1
    assert entries >= 8
    _pass(f"criterion 2: splitting numbers, s*order = n on {entries} table entries", t0)


def test_criterion_3_four_tangent_lines(tangent_pair):
    t0 = time.time()
    dec_eq, dec_df = tangent_pair
    lat_eq = relation_lattice(dec_eq)
    lat_df = relation_lattice(dec_df)
    assert lat_eq.invariant_factors == (1, 2)
    assert lat_df.invariant_factors == (2, 2)
    t1 = comb_type(dec_eq.arrangement_components())
    t2 = comb_type(dec_df.arrangement_components())
    maps = equiv_maps(t1, t2)
    adm = admissible(dec_eq, dec_df, maps)
    assert maps and adm.all_maps_admissible
    rep = certify(dec_eq, dec_df)
    assert rep.verdict == "ZariskiPair" and rep.rule == "Cor (iii)"
    _pass("criterion 3: groups Z/2 vs Z/2 x Z/2, all maps admissible, Cor (iii)", t0)


def test_criterion_4_power_chains(chain_4661, chain_4662):
    t0 = time.time()
    seed14, pair4661 = chain_4661
    assert seed14.type_tuple == (1, 4, 1, 1)
    assert pair4661.type_tuple == (4, 6, 6, 1)
    seed22, mid, pair4662 = chain_4662
    assert seed22.type_tuple == (2, 2, 1, 1)
    assert mid.type_tuple == (2, 4, 2, 1)
    assert pair4662.type_tuple == (4, 6, 6, 2)
    # each power step re-verified its predicted order internally; re-verify the
    # endpoints once more from scratch with fresh seeds
    from curvetorsion import verify_type

    assert verify_type(pair4661.d, pair4661.c, rng_seed=99).nu == 1
    assert verify_type(pair4662.d, pair4662.c, rng_seed=99).nu == 2
    _pass("criterion 4: chains (1,4;1,1)->(4,6;6,1) and (2,2;1,1)->(2,4;2,1)->(4,6;6,2)", t0)


def test_criterion_5_type_4663_pipeline(pair_4663):
    t0 = time.time()
    assert pair_4663.type_tuple == (4, 6, 6, 3)
    ctx = PicardContext(pair_4663.d)
    div = intersect(pair_4663.d, pair_4663.c)
    cls = DivisorClass(ctx, [(cl, 1) for cl, _ in div.clusters], 1, check_membership=False)
    res = torsion_order(cls, 6)
    assert res.order == 3
    assert (1, False) in res.tested and (2, False) in res.tested
    # geometric obstructions were certified during construction
    obstruction = next(s for s in pair_4663.provenance if s.kind == "obstructions")
    assert obstruction.parameters["noncollinear"] is True
    _pass("criterion 5: type (4,6;6,3) built; orders 1, 2 excluded twice over", t0)


def test_criterion_6_zariski_tuple(chain_4661, chain_4662, pair_4663):
    t0 = time.time()
    pairs = [chain_4661[1], chain_4662[2], pair_4663]
    decs = [
        Decomposition(p.d, [Part((p.c,))], name=f"type-466{p.nu}") for p in pairs
    ]
    for i in range(3):
        for j in range(i + 1, 3):
            rep = certify(decs[i], decs[j])
            assert rep.verdict == "ZariskiPair", (i, j, rep.reason)
            assert rep.rule == "Cor (i)"
    # fourth member is verification-only: exercised when equations are supplied
    import os

    from curvetorsion import verify_type
    from curvetorsion.curvefile import load_curve_file

    extra = os.path.join(os.path.dirname(__file__), "..", "sample_curves", "type_4666.json")
    if os.path.exists(extra):
        cf = load_curve_file(extra)
        spec = cf.typed_pair_spec(None)
        rep = verify_type(cf.curve(spec.d), cf.curve(spec.c))
        assert rep.ok and (rep.n, rep.nu) == (6, 6)
        _pass("criterion 6: Zariski 4-tuple (4th member verified from file)", t0)
    else:
        _pass("criterion 6: Zariski 3-tuple certified pairwise (4th member not supplied)", t0)


ORACLE_CURVES = [
    # equation, exponent of the rational torsion in play, rational points
    (form({(0, 2, 1): 1, (3, 0, 0): -1, (0, 0, 3): -1}), (0, 1, 0), 6,
     [(0, 1, 0), (2, 3, 1), (2, -3, 1), (0, 1, 1), (0, -1, 1), (-1, 0, 1)]),
    (form({(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): 36}), (0, 1, 0), 2,
     [(0, 1, 0), (0, 0, 1), (6, 0, 1), (-6, 0, 1)]),
    (form({(0, 2, 1): 1, (3, 0, 0): -1, (0, 0, 3): -4}), (0, 1, 0), 3,
     [(0, 1, 0), (0, 2, 1), (0, -2, 1)]),
    (form({(0, 2, 1): 1, (3, 0, 0): -1, (1, 0, 2): -4}), (0, 1, 0), 4,
     [(0, 1, 0), (2, 4, 1), (2, -4, 1), (0, 0, 1)]),
    (form({(0, 2, 1): 1, (0, 1, 2): 1, (3, 0, 0): -1, (2, 0, 1): 1}), (0, 1, 0), 5,
     [(0, 1, 0), (0, 0, 1), (0, -1, 1), (1, 0, 1), (1, -1, 1)]),
    (form({(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}), (1, -1, 0), 3,
     [(1, -1, 0), (0, 1, -1), (1, 0, -1)]),
]


def test_criterion_7_oracle_equivalence():
    import random

    t0 = time.time()
    rng = random.Random(20240803)
    checked = 0
    curves_used = 0
    for eq, origin, exponent, points in ORACLE_CURVES:
        curve = PlaneCurve(eq, "E")
        chart = EllipticChart(curve, origin)
        ctx = PicardContext(curve)
        curves_used += 1
        classes = []
        for _ in range(9):
            chosen = [points[rng.randrange(len(points))] for _ in range(3)]
            effective = [(cluster_from_point(p, curve=curve), 1) for p in chosen]
            classes.append(DivisorClass(ctx, effective, 1))
        # one class with a genuine Galois orbit from a random line section
        line = PlaneCurve(
            form({(1, 0, 0): rng.randint(1, 5), (0, 1, 0): rng.randint(1, 5), (0, 0, 1): rng.randint(1, 5)}),
            "l",
        )
        div = intersect(curve, line)
        classes.append(DivisorClass(ctx, [(cl, m) for cl, m in div.clusters], 1, check_membership=False))
        for cls in classes:
            lin = torsion_order(cls, exponent).order
            orc = elliptic_class_order(chart, cls, exponent)
            assert lin is not None and lin == orc
            checked += 1
    assert checked >= 50 and curves_used >= 5
    _pass(f"criterion 7: oracle equals linear route on {checked} classes over {curves_used} cubics", t0)


def test_criterion_8_property_suite(artal_pair, tangent_pair, chain_4661):
    t0 = time.time()
    # Bezout totals on a spread of intersections
    quartic, sextic = chain_4661[1].d, chain_4661[1].c
    for d, c in [
        (artal_pair[0].d, artal_pair[0].part_curves[0]),
        (quartic, sextic),
        (tangent_pair[0].d, tangent_pair[0].part_curves[0]),
    ]:
        div = intersect(d, c)
        assert div.degree() == d.degree * c.degree
    # shear independence
    d1 = intersect(quartic, sextic, rng_seed=4)
    d2 = intersect(quartic, sextic, rng_seed=44)
    assert d1.multiplicities() == d2.multiplicities()
    assert all(d2.find(cl) is not None for cl, _ in d1.clusters)
    # unit-scaling invariance at the level of orders
    deq, _ = tangent_pair
    for a in ((0, 1), (1, 0), (1, 1)):
        assert splitting_number(deq, a) == splitting_number(deq, tuple((x * 1) % 2 for x in a))
    # kernel lattice contains n Z^k and is permutation equivariant
    lat = relation_lattice(deq)
    assert (2, 0) in set(lat.generators) and (0, 2) in set(lat.generators)
    swapped = Decomposition(deq.d, [deq.parts[1], deq.parts[0]], name="sw")
    assert relation_lattice(swapped).hnf == permuted_lattice_hnf(lat, (1, 0))
    # certify symmetry
    a, b = artal_pair
    assert certify(a, b).verdict == certify(b, a).verdict == "ZariskiPair"
    # parser round trip on every equation in play
    for curve in (quartic, sextic, artal_pair[0].d):
        assert parse_poly(curve.equation.text()) == curve.equation
    _pass("criterion 8: Bezout, shear independence, lattices, symmetry, round trips", t0)
