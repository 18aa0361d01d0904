import pytest

from curvetorsion.combinatorics import (
    CombinatoricsError,
    admissible,
    certify,
    comb_type,
    equiv_maps,
)
from curvetorsion.covers import CoverError, Decomposition, Part
from curvetorsion.curves import PlaneCurve
from curvetorsion.homopoly import HomogeneousPoly


def form(terms):
    return HomogeneousPoly.from_terms(terms)


def line(a, b, c, name=""):
    return PlaneCurve(form({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}), name)


def test_comb_type_artal(fermat, artal_pair):
    dec1, dec2 = artal_pair
    t1 = comb_type(dec1.arrangement_components())
    t2 = comb_type(dec2.arrangement_components())
    # 3 tangency points of type (cubic, line; 3) and 3 line-line nodes
    keys1 = [p.key() for p in t1.points]
    assert len(keys1) == 6
    tangency = [k for k in keys1 if any(m == 3 for _, m in k[1])]
    nodes = [k for k in keys1 if all(m == 1 for _, m in k[1])]
    assert len(tangency) == 3 and len(nodes) == 3
    assert t1.point_multiset() == t2.point_multiset()


def test_comb_type_two_conics():
    c1 = PlaneCurve(form({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -5}), "C1")
    c2 = PlaneCurve(form({(2, 0, 0): 1, (0, 2, 0): 2, (0, 0, 2): -4}), "C2")
    t = comb_type([c1, c2])
    assert len(t.points) == 4
    assert all(p.pair_mult == (((0, 1), 1),) for p in t.points)


def test_comb_type_typed_pair(chain_4661):
    _, pair = chain_4661
    t = comb_type([pair.d, pair.c])
    assert len(t.points) == 4
    assert all(p.pair_mult == (((0, 1), 6),) for p in t.points)


def test_singular_component_rejected():
    nodal = PlaneCurve(form({(0, 2, 1): 1, (3, 0, 0): -1, (2, 0, 1): -1}))
    with pytest.raises(CombinatoricsError):
        comb_type([nodal, line(1, 1, 1)])


def test_equiv_maps_contains_identity(fermat, artal_pair):
    dec1, _ = artal_pair
    t1 = comb_type(dec1.arrangement_components())
    maps = equiv_maps(t1, t1)
    assert any(m.component_map == tuple(range(len(t1.components))) for m in maps)
    # closure under composition at the component level
    comp_maps = {m.component_map for m in maps}
    for m1 in comp_maps:
        for m2 in comp_maps:
            composed = tuple(m2[i] for i in m1)
            assert composed in comp_maps


def test_equiv_maps_empty_on_degree_mismatch():
    c1 = PlaneCurve(form({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -5}), "C1")
    c2 = PlaneCurve(form({(2, 0, 0): 1, (0, 2, 0): 2, (0, 0, 2): -4}), "C2")
    t_conics = comb_type([c1, c2])
    t_lines = comb_type([line(1, 0, 0), line(0, 1, 0)])
    assert equiv_maps(t_conics, t_lines) == []


def test_identity_not_admissible_for_crossed_pairing(tangent_pair):
    # all four tangent lines through one base point, pairings (12)(34) vs (13)(24)
    from fractions import Fraction

    from curvetorsion.construct import tangent_lines_through
    from curvetorsion.elliptic import EllipticChart

    deq, _ = tangent_pair
    e = deq.d
    chart = EllipticChart(e, (0, 1, 0))
    p1 = chart.neg(chart.mul(2, (Fraction(-3), Fraction(9), Fraction(1))))
    tls = tangent_lines_through(e, p1)
    lines = [PlaneCurve(t.line.normalized(), f"l{i}") for i, t in enumerate(tls)]
    dec_a = Decomposition(e, [Part((lines[0], lines[1])), Part((lines[2], lines[3]))])
    dec_b = Decomposition(e, [Part((lines[0], lines[2])), Part((lines[1], lines[3]))])
    t_a = comb_type(dec_a.arrangement_components())
    t_b = comb_type(dec_b.arrangement_components())
    maps = equiv_maps(t_a, t_b)
    # the geometric identity in dec_b's component numbering: l0,l2,l1,l3
    identity_as_map = (0, 1, 3, 2, 4)
    assert identity_as_map in {m.component_map for m in maps}
    adm = admissible(dec_a, dec_b, maps)
    assert not adm.all_maps_admissible
    id_only = admissible(dec_a, dec_b, [m for m in maps if m.component_map == identity_as_map])
    assert id_only.admissible_maps == 0
    # but some other equivalence map is admissible, so the set is nonempty
    assert adm.permutations


def test_every_map_admissible_for_two_base_points(tangent_pair):
    deq, ddf = tangent_pair
    t1 = comb_type(deq.arrangement_components())
    t2 = comb_type(ddf.arrangement_components())
    maps = equiv_maps(t1, t2)
    adm = admissible(deq, ddf, maps)
    assert maps and adm.all_maps_admissible


def test_k1_distinct_degrees_all_admissible(chain_4661, chain_4662):
    _, p1 = chain_4661
    _, _, p2 = chain_4662
    d1 = Decomposition(p1.d, [Part((p1.c,))], name="t1")
    d2 = Decomposition(p2.d, [Part((p2.c,))], name="t2")
    t1 = comb_type(d1.arrangement_components())
    t2 = comb_type(d2.arrangement_components())
    maps = equiv_maps(t1, t2)
    adm = admissible(d1, d2, maps)
    assert maps and adm.all_maps_admissible and adm.permutations == ((0,),)


def test_certify_artal(artal_pair):
    dec1, dec2 = artal_pair
    rep = certify(dec1, dec2)
    assert rep.verdict == "ZariskiPair"
    assert rep.rule == "Cor (i)"
    assert rep.orders == ((1,), (3,))


def test_certify_symmetry(artal_pair):
    dec1, dec2 = artal_pair
    assert certify(dec1, dec2).verdict == certify(dec2, dec1).verdict


def test_certify_identical_is_inconclusive(artal_pair):
    dec1, _ = artal_pair
    rep = certify(dec1, dec1)
    assert rep.verdict == "Inconclusive"
    assert "kernels agree" in rep.reason


def test_certify_tangent_pair_via_groups(tangent_pair):
    deq, ddf = tangent_pair
    rep = certify(deq, ddf)
    assert rep.verdict == "ZariskiPair"
    assert rep.rule == "Cor (iii)"
    assert rep.invariant_factors == ((1, 2), (2, 2))


def test_certify_requires_equal_n(fermat, artal_pair):
    dec1, _ = artal_pair
    lined = Decomposition(fermat, [Part((line(1, 2, 5, "l"),))], name="transversal")
    with pytest.raises(CoverError):
        certify(dec1, lined)


def test_certify_different_combinatorics_inconclusive(fermat, artal_pair):
    dec1, dec2 = artal_pair
    # tangents at the three collinear inflections on z = 0 are concurrent at
    # (0 : 0 : 1): same degrees and n, but a triple point replaces the nodes
    conjugate_lines = dec2.parts[0].components[1:]
    concurrent = Decomposition(
        fermat,
        [Part((line(1, 1, 0, "T"),) + tuple(conjugate_lines), "concurrent")],
        name="concurrent",
    )
    assert concurrent.n == dec1.n
    rep = certify(dec1, concurrent)
    assert rep.verdict == "Inconclusive"
    assert rep.reason == "different combinatorics"
