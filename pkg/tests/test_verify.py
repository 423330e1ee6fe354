import json
import os
from fractions import Fraction
from math import comb

import pytest

from hamindex.errors import (InfeasibleScopeError,
                             ParameterOutOfStatedRangeError)
from hamindex.families import FamilySpec, build
from hamindex.graphs import complete, empty, graph6_decode, join
from hamindex.isoenum import canonical_form, is_isomorphic
from hamindex.verify import (CLASSES, PROBLEMS, TheoremId,
                             audit_exceptional_sets, edge_threshold,
                             extremal_search, verify_edge_lemma, verify_fact,
                             verify_index_theorem)


def codes(graphs):
    return {canonical_form(g).code.decode("ascii") for g in graphs}


def test_theorem_id_parse():
    assert TheoremId.parse("Lem2.3") is TheoremId.LEM_2_3
    assert TheoremId.parse("thm5.1bip") is TheoremId.THM_5_1_BIP
    with pytest.raises(ValueError):
        TheoremId.parse("Thm9.9")


def test_edge_threshold_values():
    t = edge_threshold(TheoremId.LEM_2_3, 7, 2)
    assert (t.value, t.strict) == (14, False)
    t = edge_threshold(TheoremId.LEM_4_1, 11, 1)
    assert (t.value, t.strict) == (comb(9, 2) + 4, True)
    assert t.value == 40
    t = edge_threshold(TheoremId.LEM_5_1, 5, 1)
    assert (t.value, t.strict) == (19, True)
    t = edge_threshold(TheoremId.LEM_2_4, 6, 1)
    assert (t.value, t.strict) == (comb(4, 2) + 2, False)
    t = edge_threshold(TheoremId.THM_2_2, 7, 1)
    assert (t.value, t.strict) == (16, True)
    t = edge_threshold(TheoremId.THM_2_1, 9, 3)
    assert t.value == max(comb(6, 2) + 9, comb(5, 2) + 16) == 26


def test_edge_threshold_range_enforcement():
    with pytest.raises(ParameterOutOfStatedRangeError):
        edge_threshold(TheoremId.LEM_4_1, 9, 1)
    relaxed = edge_threshold(TheoremId.LEM_4_1, 9, 1, enforce_range=False)
    assert not relaxed.in_range
    with pytest.raises(ParameterOutOfStatedRangeError):
        edge_threshold(TheoremId.LEM_2_3, 7, 3)  # statement fixes k


def test_lem_2_3_at_seven():
    rep = verify_edge_lemma(TheoremId.LEM_2_3, 7)
    assert rep.violations == []
    assert not rep.exploratory
    assert rep.bookkeeping_ok()
    expected = codes(build(FamilySpec("G1", 7, item_index=i))
                     for i in (0, 1, 2, 3))
    assert set(rep.exceptional_matches) == expected


def test_lem_2_4_at_six():
    rep = verify_edge_lemma(TheoremId.LEM_2_4, 6)
    assert rep.violations == []
    expected = codes(build(FamilySpec("G2", 6, item_index=i))
                     for i in (0, 1, 2, 3))
    assert set(rep.exceptional_matches) == expected


def test_lem_2_3_at_five_needs_parametric_member():
    rep = verify_edge_lemma(TheoremId.LEM_2_3, 5)
    assert rep.violations == []
    assert len(rep.exceptional_matches) == 1


def test_erdos_style_thresholds_have_no_exceptions():
    for theorem, n, k in ((TheoremId.THM_2_2, 7, 1), (TheoremId.THM_2_2, 8, 1),
                          (TheoremId.THM_2_1, 7, 2), (TheoremId.THM_2_1, 8, 3)):
        rep = verify_edge_lemma(theorem, n, k)
        assert rep.violations == []
        assert rep.exceptional_matches == []
        assert rep.hypothesis_hits == rep.conclusion_holds
        assert rep.hypothesis_hits > 0


def test_lem_4_1_out_of_range_finds_counterexample():
    # at orders below the stated floor the containment conclusion fails,
    # which is exactly what the exploratory label is for
    rep = verify_edge_lemma(TheoremId.LEM_4_1, 9, 1)
    assert rep.exploratory
    assert rep.violations
    k4v5 = join(complete(4), empty(5))
    assert any(is_isomorphic(graph6_decode(v), k4v5)
               for v in rep.violations)


def test_edge_lemma_complement_strategy_cheap():
    # the concise high-threshold bound at n=10 keeps the complement budget
    # tiny while exercising the dense-side strategy end to end
    rep = verify_edge_lemma(TheoremId.THM_2_2, 10, 1)
    assert rep.strategy.startswith("complement")
    assert rep.violations == []
    assert rep.exceptional_matches == []
    assert rep.hypothesis_hits > 0


@pytest.mark.skipif(not os.environ.get("HAMINDEX_RUN_EXTENDED"),
                    reason="several-minute sweep; set HAMINDEX_RUN_EXTENDED=1")
def test_lem_4_1_in_feasible_range_via_complement():
    # order 11 is the smallest in-range order for k=1
    rep = verify_edge_lemma(TheoremId.LEM_4_1, 11, 1, max_classes=2_500_000)
    assert not rep.exploratory
    assert rep.violations == []
    assert rep.strategy.startswith("complement")


def test_lem_5_1_bipartite():
    rep = verify_edge_lemma(TheoremId.LEM_5_1, 4, 1)
    assert rep.violations == []
    assert rep.exceptional_matches  # the bipartite family member shows up
    assert rep.strategy.startswith("bipartite")


def test_thm_3_2_at_seven():
    rep = verify_index_theorem(TheoremId.THM_3_2, 7)
    assert rep.branch == "both"
    assert rep.violations == []
    assert len(rep.sub_reports) == 2
    for sub in rep.sub_reports:
        assert sub.violations == []
        assert len(sub.exceptional_matches) == 4
        assert sub.bookkeeping_ok()
    assert rep.extras["branch_scopes_agree"]


def test_thm_3_5_at_six():
    rep = verify_index_theorem(TheoremId.THM_3_5, 6)
    assert rep.violations == []
    for sub in rep.sub_reports:
        assert len(sub.exceptional_matches) == 4


def test_thm_3_3_and_3_4_incomplete_lists_at_six():
    # the three-member list misses three order-6 exceptions; the harness
    # reports them as violations and flags the nine-member list coverage
    for theorem in (TheoremId.THM_3_3, TheoremId.THM_3_4):
        rep = verify_index_theorem(theorem, 6)
        assert rep.branch == ("H" if theorem is TheoremId.THM_3_3 else "W")
        assert len(rep.violations) == 3
        assert rep.extras["short_list_sufficient"] is False
        assert rep.extras["violations_covered_by_nine_member_list"] is True
        assert len(rep.exceptional_matches) == 1


def test_thm_3_3_and_3_4_clean_at_five():
    for theorem in (TheoremId.THM_3_3, TheoremId.THM_3_4):
        rep = verify_index_theorem(theorem, 5)
        assert rep.violations == []
        assert rep.extras["short_list_sufficient"] is True


def test_thm_4_3_small_in_range():
    rep = verify_index_theorem(TheoremId.THM_4_3, 11, 1)
    assert rep.violations == []
    target = canonical_form(build(FamilySpec("N", 11, 1))).code.decode()
    for sub in rep.sub_reports:
        assert sub.exceptional_matches == [target]


def test_thm_4_4_exploratory_guard():
    with pytest.raises(InfeasibleScopeError):
        verify_index_theorem(TheoremId.THM_4_4, 16, 1)
    with pytest.raises(InfeasibleScopeError):
        verify_index_theorem(TheoremId.THM_4_4, 12, 1)


def test_thm_5_1_bip_at_four():
    rep = verify_index_theorem(TheoremId.THM_5_1_BIP, 4, 1)
    assert rep.violations == []
    for sub in rep.sub_reports:
        assert len(sub.exceptional_matches) == 1
        assert sub.exceptional_matches[0].startswith("bip:")


def test_fact_3_1_small():
    for n in (4, 5, 6):
        rep = verify_fact(TheoremId.FACT_3_1, n)
        assert rep.violations == []
        assert rep.hypothesis_hits == rep.conclusion_holds
        assert rep.hypothesis_hits > 0


def test_fact_5_1_small():
    rep = verify_fact(TheoremId.FACT_5_1, 3)
    assert rep.violations == []
    assert rep.hypothesis_hits == rep.conclusion_holds


def test_fixed_k_mismatch_rejected():
    with pytest.raises(ParameterOutOfStatedRangeError):
        verify_index_theorem(TheoremId.THM_3_2, 7, k=3)


def test_report_serialization_roundtrip():
    rep = verify_index_theorem(TheoremId.THM_3_2, 6)
    data = rep.to_dict()
    text = json.dumps(data, sort_keys=True)
    parsed = json.loads(text)
    assert parsed["theorem"] == "Thm3.2"
    assert parsed["hypothesis_hits"] == (
        parsed["conclusion_holds"] + len(parsed["exceptional_matches"])
        + len(parsed["violations"]))


def test_extremal_search_examples():
    res = extremal_search("1.1-minW", 7, 2, graph_class="nonHamiltonian")
    assert res.value == 27
    assert res.value <= 28  # family value at this order
    assert res.family_value == 28
    assert len(res.argext) == 1
    winner = graph6_decode(res.argext[0])
    assert is_isomorphic(winner, join(complete(3), empty(4)))

    res = extremal_search("1.1-maxH", 7, 2, graph_class="nonHamiltonian")
    assert res.value == Fraction(18)

    # value derived by an independent permutation-oracle sweep of the 21
    # connected order-5 classes: the unique minimizer is the deleted-vertex
    # family member with W = 15
    res = extremal_search("1.1-minW", 5, 1, graph_class="nonTraceable")
    assert res.value == 15
    assert res.examined == 34
    assert is_isomorphic(graph6_decode(res.argext[0]),
                         build(FamilySpec("Nbar", 5, 1)))


def test_extremal_search_bipartite():
    res = extremal_search("1.2-minW", 3, 1)
    assert res.graph_class == "bipartiteNonHamiltonian"
    assert res.value == 25
    assert res.family_value == 25
    winner = graph6_decode(res.argext[0])
    assert is_isomorphic(winner, build(FamilySpec("B", 3, 1)))


def test_extremal_search_monotone_in_k():
    prev = None
    for k in (1, 2):
        res = extremal_search("1.1-minW", 7, k, graph_class="nonHamiltonian")
        if prev is not None:
            assert res.value >= prev
        prev = res.value
    prev = None
    for k in (1, 2):
        res = extremal_search("1.1-maxH", 7, k, graph_class="nonHamiltonian")
        if prev is not None:
            assert res.value <= prev
        prev = res.value


def test_extremal_search_validation():
    with pytest.raises(ValueError):
        extremal_search("1.3-minW", 5, 1)
    with pytest.raises(ValueError):
        extremal_search("1.1-minW", 5, 1, graph_class="weird")
    with pytest.raises(InfeasibleScopeError):
        extremal_search("1.1-minW", 10, 1, graph_class="nonHamiltonian")


def test_audit_report_shape():
    audit = audit_exceptional_sets()
    assert len(audit["g1"]) == 9
    assert len(audit["g2"]) == 9
    for entry in audit["g1"]:
        assert entry["min_degree"] >= 2
        assert entry["has_conclusion_property"] is False
        assert entry["satisfies_W_hypothesis"]
        assert entry["satisfies_H_hypothesis"]
        assert entry["diam"] == 2
    for entry in audit["g2"]:
        assert entry["min_degree"] >= 1
        assert entry["has_conclusion_property"] is False
    # the documented per-member edge-count findings
    g1_mismatch = [e["description"] for e in audit["g1"]
                   if not e["edge_equality_with_target"]]
    assert g1_mismatch == ["K3 v 4K1", "K4 v 5K1"]
    g2_mismatch = [e["description"] for e in audit["g2"]
                   if not e["edge_equality_with_target"]]
    assert g2_mismatch == ["K2 v 4K1", "K3 v 5K1"]
    assert audit["bound_formulas"]["wiener_formula_matches"]
    assert audit["bound_formulas"]["harary_formula_matches"]
    assert audit["bipartite_harary_identity"]["all_third"]
    assert not audit["bipartite_harary_identity"]["any_triple"]


def test_problem_and_class_vocabulary():
    assert PROBLEMS == ("1.1-minW", "1.1-maxH", "1.2-minW", "1.2-maxH")
    assert set(CLASSES) == {"nonHamiltonian", "nonTraceable",
                            "bipartiteNonHamiltonian"}
