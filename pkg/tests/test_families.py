from math import comb

import pytest

from hamindex.errors import ParameterOutOfRangeError, UnsupportedFamilyError
from hamindex.families import (FamilySpec, G1_ITEMS, G2_ITEMS, build,
                               build_bipartite, edge_count, g1_members,
                               g2_members, g2_short_members, parse_spec)
from hamindex.graphs import basic_stats, is_connected
from hamindex.isoenum import canonical_form, is_isomorphic
from hamindex.metrics import all_pairs_distances


def test_edge_count_paper_values():
    assert edge_count(FamilySpec("N", 9, 2)) == comb(7, 2) + 4 == 25
    assert edge_count(FamilySpec("Nbar", 10, 1)) == comb(8, 2) + 2 == 30
    assert edge_count(FamilySpec("Lbar", 10, 1)) == 1 + 28 == 29
    assert edge_count(FamilySpec("B", 3, 1)) == 3 * 2 + 1 == 7
    assert edge_count(FamilySpec("L", 9, 1)) == comb(8, 2) + 1


def test_build_matches_closed_edge_count():
    for tag in ("L", "N"):
        for n in range(3, 16):
            for k in range(1, (n - 1) // 2 + 1):
                spec = FamilySpec(tag, n, k)
                assert build(spec).edge_count() == edge_count(spec)
    for tag in ("Lbar", "Nbar"):
        for n in range(2, 16):
            for k in range(0, n // 2):
                spec = FamilySpec(tag, n, k)
                assert build(spec).edge_count() == edge_count(spec)
    for n in range(2, 9):
        for k in range(1, n // 2 + 1):
            spec = FamilySpec("B", n, k)
            assert build(spec).edge_count() == edge_count(spec)


def test_build_n92_structure():
    g = build(FamilySpec("N", 9, 2))
    assert g.edge_count() == 25
    assert g.min_degree() == 2
    assert is_connected(g)


def test_l1_equals_n1():
    assert is_isomorphic(build(FamilySpec("L", 9, 1)),
                         build(FamilySpec("N", 9, 1)))
    assert (canonical_form(build(FamilySpec("L", 9, 1))).code
            == canonical_form(build(FamilySpec("N", 9, 1))).code)


def test_min_degree_invariants():
    for n in range(5, 13):
        for k in range(1, (n - 1) // 2 + 1):
            assert build(FamilySpec("N", n, k)).min_degree() == k
    for n in range(3, 8):
        for k in range(1, n // 2 + 1):
            assert build(FamilySpec("B", n, k)).min_degree() == k


def test_diameter_two_for_closed_form_families():
    for tag, ks in (("N", (1, 2, 3)), ("Nbar", (1, 2, 3)), ("L", (1, 2, 3))):
        for n in range(8, 12):
            for k in ks:
                dm = all_pairs_distances(build(FamilySpec(tag, n, k)))
                assert dm.diameter() == 2


def test_bipartite_member_shape():
    g, parts = build_bipartite(FamilySpec("B", 4, 1))
    assert g.n == 8
    assert g.edge_count() == 4 * 3 + 1
    assert parts.sizes() == (4, 4)
    stats = basic_stats(g)
    assert stats.bipartition is not None


def test_parameter_validation():
    with pytest.raises(ParameterOutOfRangeError):
        build(FamilySpec("N", 9, 5))  # k beyond (n-1)/2
    with pytest.raises(ParameterOutOfRangeError):
        build(FamilySpec("Nbar", 10, 5))
    with pytest.raises(ParameterOutOfRangeError):
        build(FamilySpec("B", 4, 3))
    with pytest.raises(ParameterOutOfRangeError):
        edge_count(FamilySpec("N", 9, 0))
    with pytest.raises(UnsupportedFamilyError):
        edge_count(FamilySpec("G1", 7, item_index=1))


def test_g1_member_orders():
    orders = [order for order, _ in G1_ITEMS]
    assert orders == [None, 7, 7, 7, 8, 9, 9, 9, 11]
    assert len(g1_members(7)) == 4
    assert len(g1_members(8)) == 2
    assert len(g1_members(9)) == 4
    assert len(g1_members(11)) == 2
    assert len(g1_members(20)) == 1
    # the parametric member exists from order five on
    assert len(g1_members(5)) == 1
    assert g1_members(5)[0].edge_count() == 7


def test_g2_member_orders():
    orders = [order for order, _ in G2_ITEMS]
    assert orders == [None, 6, 6, 6, 7, 8, 8, 8, 10]
    assert len(g2_members(6)) == 4
    assert len(g2_members(7)) == 2
    assert len(g2_members(8)) == 4
    assert len(g2_members(10)) == 2
    assert len(g2_members(12)) == 1
    assert len(g2_members(4)) == 1


def test_g2_contains_k24_and_k2v4k1_at_six():
    from hamindex.graphs import complete_bipartite, complete, empty, join
    members = g2_members(6)
    k24 = complete_bipartite(2, 4)[0]
    k2v = join(complete(2), empty(4))
    assert any(is_isomorphic(m, k24) for m in members)
    assert any(is_isomorphic(m, k2v) for m in members)


def test_parametric_g1_is_the_k2_family_member():
    assert is_isomorphic(build(FamilySpec("G1", 9, item_index=0)),
                         build(FamilySpec("N", 9, 2)))
    assert is_isomorphic(build(FamilySpec("G2", 9, item_index=0)),
                         build(FamilySpec("Nbar", 9, 1)))


def test_g2_short_members():
    assert len(g2_short_members(6)) == 1
    assert len(g2_short_members(7)) == 2
    assert len(g2_short_members(10)) == 2
    assert len(g2_short_members(12)) == 1


def test_member_degree_floors():
    for n in (5, 6, 7, 8, 9, 10, 11, 12):
        if n >= 5:
            for m in g1_members(n):
                assert m.min_degree() >= 2
                assert is_connected(m)
        for m in g2_members(max(n, 4)):
            assert m.min_degree() >= 1
            assert is_connected(m)


def test_fixed_order_mismatch_rejected():
    with pytest.raises(ParameterOutOfRangeError):
        build(FamilySpec("G1", 8, item_index=1))  # that member has order 7
    with pytest.raises(ParameterOutOfRangeError):
        build(FamilySpec("G2", 4, item_index=9))


def test_parse_spec_roundtrip():
    for text in ("N:n=9,k=2", "B:n=3,k=1", "G1:n=7,i=1", "Lbar:n=10,k=1"):
        spec = parse_spec(text)
        assert str(spec) == text
    assert parse_spec("G1:n=7,i=1").item_index == 1
    with pytest.raises(ParameterOutOfRangeError):
        parse_spec("Q:n=4")
    with pytest.raises(ParameterOutOfRangeError):
        parse_spec("N:k=2")
    with pytest.raises(ParameterOutOfRangeError):
        parse_spec("N")
