"""Pattern expansion, induced-subgraph search, and the three classifiers."""

import random

import pytest

from bchromatic.graphs import Graph
from bchromatic.patterns import (CoComponentKind, PatternError, Verdict,
                                 classify_b, classify_fall, classify_tight,
                                 cocomponent_kind, contains_induced,
                                 is_complete_multipartite, is_free,
                                 is_induced_subgraph_of, is_linear_forest,
                                 pattern_graph)

from helpers import all_graphs, naive_contains_induced, random_graph


def test_pattern_expansion():
    assert pattern_graph("P4").n == 4 and pattern_graph("P4").edge_count() == 3
    assert pattern_graph("2P2") == pattern_graph("P2+P2")
    assert pattern_graph("claw") == pattern_graph("K1,3")
    assert pattern_graph("3P1").edge_count() == 0
    assert pattern_graph("2P2+P1").n == 5
    assert pattern_graph("C5").degrees() == [2] * 5
    with pytest.raises(PatternError):
        pattern_graph("Q7")


def test_contains_induced_examples():
    assert contains_induced(pattern_graph("C4"), pattern_graph("2P2")) is None
    assert contains_induced(pattern_graph("paw"), pattern_graph("P3+P1")) is None
    w = contains_induced(pattern_graph("paw").complement(), pattern_graph("P3+P1"))
    assert w is not None
    assert contains_induced(pattern_graph("P5"), pattern_graph("2P2")) == (0, 1, 3, 4)


def test_contains_induced_witness_is_valid():
    rng = random.Random(10)
    patterns = [pattern_graph(p) for p in
                ("P3", "P4", "2P2", "P3+P1", "claw", "paw", "C4", "C5", "3P1", "2P2+P1")]
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        for h in patterns:
            w = contains_induced(g, h)
            if w is not None:
                assert len(set(w)) == h.n
                for a in range(h.n):
                    for b in range(a + 1, h.n):
                        assert g.has_edge(w[a], w[b]) == h.has_edge(a, b)


def test_contains_induced_agrees_with_naive():
    rng = random.Random(11)
    patterns = [pattern_graph(p) for p in
                ("P2", "P3", "P4", "P5", "2P2", "3P1", "P3+P1", "claw", "paw",
                 "C4", "C5", "2P2+P1", "K3", "2P3", "3P2", "4P1")]
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        for h in patterns:
            assert (contains_induced(g, h) is not None) == naive_contains_induced(g, h)


def test_is_induced_subgraph_of():
    assert is_induced_subgraph_of(pattern_graph("2P1"), "P4")
    assert not is_induced_subgraph_of(pattern_graph("P3+P1"), "P4")
    assert is_induced_subgraph_of(pattern_graph("3P1"), "P3+P1")


def test_cocomponent_kind():
    from bchromatic.graphs import disjoint_union
    # two triangles still have independence number 2, so the 3P1-free branch
    # takes precedence; three triangles genuinely need the clique-union branch
    k3k3 = disjoint_union(pattern_graph("K3"), pattern_graph("K3"))
    assert cocomponent_kind(k3k3) is CoComponentKind.THREE_P1_FREE
    assert cocomponent_kind(pattern_graph("3K3")) is CoComponentKind.CLIQUE_UNION
    assert cocomponent_kind(pattern_graph("3P2")) is CoComponentKind.CLIQUE_UNION
    assert cocomponent_kind(pattern_graph("K2+K4")) is CoComponentKind.THREE_P1_FREE
    # C5 and P4 both have independence number 2, hence no induced 3P1
    assert cocomponent_kind(pattern_graph("C5")) is CoComponentKind.THREE_P1_FREE
    assert cocomponent_kind(pattern_graph("P4")) is CoComponentKind.THREE_P1_FREE
    assert cocomponent_kind(pattern_graph("C6")) is CoComponentKind.NEITHER


def test_paw_free_decomposition_cross_check():
    # paw-free iff every component is triangle-free or complete multipartite
    rng = random.Random(12)
    for _ in range(400):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        paw_free = is_free(g, "paw")
        decomposed = all(
            is_free(g.subgraph(comp), "C3") or is_complete_multipartite(g.subgraph(comp))
            for comp in g.components())
        assert paw_free == decomposed


def test_linear_forest():
    assert is_linear_forest(pattern_graph("P5"))
    assert is_linear_forest(pattern_graph("2P2+P1"))
    assert not is_linear_forest(pattern_graph("claw"))
    assert not is_linear_forest(pattern_graph("C4"))


def test_classifier_known_cases():
    two_p2 = pattern_graph("2P2")
    assert classify_b(two_p2).verdict is Verdict.NP_HARD
    assert classify_tight(two_p2).verdict is Verdict.POLY
    assert classify_fall(two_p2).verdict is Verdict.NP_HARD

    p4p1 = pattern_graph("P4+P1")
    v = classify_tight(p4p1)
    assert v.verdict is Verdict.OPEN and v.family == "P4+sP1 (s=1)"

    claw = pattern_graph("claw")
    assert classify_b(claw).verdict is Verdict.NP_HARD
    assert classify_tight(claw).verdict is Verdict.NP_COMPLETE
    assert classify_fall(claw).verdict is Verdict.NP_HARD


def test_classify_tight_open_families_exactly():
    """The open verdict appears exactly on the seven linear-forest families."""
    def lf(*sizes):
        name = "+".join(f"P{s}" for s in sizes)
        return pattern_graph(name)

    for s in range(0, 4):
        cases = {
            "P4+P2+sP1": lf(4, 2, *([1] * s)),
            "P3+P2+sP1": lf(3, 2, *([1] * s)),
        }
        if s >= 1:
            cases["P4+sP1"] = lf(4, *([1] * s))
        if s >= 2:
            cases["P3+sP1"] = lf(3, *([1] * s))
            cases["2P2+sP1"] = lf(2, 2, *([1] * s))
        if s >= 3:
            cases["P2+sP1"] = lf(2, *([1] * s))
        if s >= 4:
            cases["sP1"] = lf(*([1] * s))
        for family, h in cases.items():
            v = classify_tight(h)
            assert v.verdict is Verdict.OPEN, (family, s)
            assert v.family == f"{family} (s={s})"
    # sP1 family starts at s = 4
    v = classify_tight(pattern_graph("4P1"))
    assert v.verdict is Verdict.OPEN and v.family == "sP1 (s=4)"


def test_classify_exhaustive_consistency_small():
    """On every graph H with up to 5 vertices the classifiers match the
    bare containment statements of the three dichotomies."""
    for n in range(1, 6):
        for h in all_graphs(n):
            b = classify_b(h)
            assert (b.verdict is Verdict.POLY) == is_induced_subgraph_of(h, "P4")
            f = classify_fall(h)
            assert (f.verdict is Verdict.POLY) == (
                is_induced_subgraph_of(h, "P4") or is_induced_subgraph_of(h, "P3+P1"))
            t = classify_tight(h)
            poly = (is_induced_subgraph_of(h, "P4")
                    or is_induced_subgraph_of(h, "P3+P1")
                    or is_induced_subgraph_of(h, "2P2+P1"))
            hard = (not is_linear_forest(h) or not is_free(h, "P5")
                    or not is_free(h, "3P2") or not is_free(h, "2P3"))
            if poly:
                assert t.verdict is Verdict.POLY
            elif hard:
                assert t.verdict is Verdict.NP_COMPLETE
            else:
                assert t.verdict is Verdict.OPEN
