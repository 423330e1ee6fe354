from itertools import permutations

import pytest

from hamindex.errors import BudgetExceededError
from hamindex.families import FamilySpec, build
from hamindex.graphs import (Graph, complete, complete_bipartite,
                             disjoint_union, empty, join)
from hamindex.hamilton import (CYCLE, PATH, certificate_is_valid,
                               count_components, find_cut_witness,
                               is_hamiltonian, is_traceable)
from hamindex.isoenum import EnumFilter, enumerate_graphs


def oracle_hamiltonian(g: Graph) -> bool:
    """Try every cycle through vertex 0."""
    n = g.n
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        seq = (0,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n)):
            return True
    return False


def oracle_traceable(g: Graph) -> bool:
    n = g.n
    if n <= 1:
        return True
    for perm in permutations(range(n)):
        if perm[0] > perm[-1]:
            continue
        if all(g.has_edge(perm[i], perm[i + 1]) for i in range(n - 1)):
            return True
    return False


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_cycle_graph_is_hamiltonian():
    res = is_hamiltonian(cycle_graph(5))
    assert res.answer and res.certificate.kind == CYCLE
    assert certificate_is_valid(cycle_graph(5), CYCLE, True, res.certificate)


def test_family_member_has_join_core_witness():
    g = build(FamilySpec("N", 9, 2))
    res = is_hamiltonian(g)
    assert not res.answer
    cert = res.certificate
    assert cert.kind == "cut_witness"
    assert cert.component_count > len(cert.cut_set)
    assert len(cert.cut_set) == 2


def test_petersen(petersen):
    assert not is_hamiltonian(petersen).answer
    res = is_traceable(petersen)
    assert res.answer and res.certificate.kind == PATH
    assert oracle_hamiltonian(petersen) is False


def test_nbar_non_traceable():
    g = build(FamilySpec("Nbar", 10, 1))
    res = is_traceable(g)
    assert not res.answer
    cert = res.certificate
    assert cert.kind == "cut_witness"
    assert len(cert.cut_set) == 1
    assert cert.component_count == 3


def test_lbar_disconnected_non_traceable():
    g = build(FamilySpec("Lbar", 10, 1))
    res = is_traceable(g)
    assert not res.answer
    assert res.certificate.kind == "cut_witness"
    assert res.certificate.cut_set == ()


def test_path_graph_traceable():
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    res = is_traceable(p4)
    assert res.answer
    assert list(res.certificate.sequence) in ([0, 1, 2, 3], [3, 2, 1, 0])


def test_small_orders():
    assert not is_hamiltonian(complete(1)).answer
    assert not is_hamiltonian(complete(2)).answer
    assert is_hamiltonian(complete(3)).answer
    assert is_traceable(complete(1)).answer
    assert is_traceable(empty(0)).answer
    assert not is_traceable(empty(2)).answer


def test_cut_witness_examples():
    assert find_cut_witness(complete(7), CYCLE) is None
    g = build(FamilySpec("N", 13, 3))
    witness = find_cut_witness(g, CYCLE)
    assert witness is not None and len(witness) == 3
    mask = sum(1 << v for v in witness)
    assert count_components(g, mask) == 4

    b = build(FamilySpec("B", 4, 1))
    witness = find_cut_witness(b, CYCLE)
    assert witness is not None
    mask = sum(1 << v for v in witness)
    assert count_components(b, mask) > len(witness)


def test_every_family_member_is_negative():
    for n, k in ((7, 1), (9, 2), (11, 3), (13, 2)):
        assert not is_hamiltonian(build(FamilySpec("N", n, k))).answer
    for n, k in ((8, 1), (10, 1), (12, 2)):
        assert not is_traceable(build(FamilySpec("Nbar", n, k))).answer
        assert not is_traceable(build(FamilySpec("Lbar", n, k))).answer
    for n, k in ((3, 1), (4, 1), (5, 2), (6, 3)):
        assert not is_hamiltonian(build(FamilySpec("B", n, k))).answer


def test_large_family_members_fast():
    # capacity-scale members still certify instantly via structure
    assert not is_hamiltonian(build(FamilySpec("N", 30, 5))).answer
    assert not is_hamiltonian(build(FamilySpec("B", 30, 4))).answer
    assert not is_traceable(build(FamilySpec("Nbar", 30, 5))).answer


def test_agreement_with_oracle_small():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            ham = is_hamiltonian(g)
            trace = is_traceable(g)
            assert ham.answer == oracle_hamiltonian(g)
            assert trace.answer == oracle_traceable(g)
            assert certificate_is_valid(g, CYCLE, ham.answer, ham.certificate)
            assert certificate_is_valid(g, PATH, trace.answer,
                                        trace.certificate)
            if ham.answer:
                assert trace.answer


def test_budget_exhaustion_raises():
    with pytest.raises(BudgetExceededError):
        is_hamiltonian(cycle_graph(12), node_budget=3)


def test_unbalanced_bipartite_rejected_quickly():
    g, _ = complete_bipartite(3, 5)
    res = is_hamiltonian(g, node_budget=10)
    assert not res.answer
    assert res.certificate.kind == "cut_witness"
    res = is_traceable(g, node_budget=100)
    assert not res.answer


def test_certificate_serialization():
    res = is_hamiltonian(cycle_graph(4))
    d = res.certificate.to_dict()
    assert d["kind"] == "cycle" and len(d["sequence"]) == 4
    res = is_traceable(build(FamilySpec("Nbar", 8, 1)))
    d = res.certificate.to_dict()
    assert d["kind"] == "cut_witness"
    assert d["component_count"] > len(d["cut_set"]) + 1
