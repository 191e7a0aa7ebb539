import json
from itertools import combinations

import networkx as nx
import pytest

from oird.graph import Graph, complete, find_claw, is_claw_free, is_connected
from oird.harness import (Budget, Failure, TheoremReport, check_instance, connected_claw_free,
                          decomposition_pairs, enumerate_labeled, replay, run_theorem)
from oird.rainbow import OrderTooLarge


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_labeled(3)) == 8
    for n in range(0, 6):
        graphs = list(enumerate_labeled(n))
        assert len(graphs) == 2 ** (n * (n - 1) // 2)
        assert len({g.adj for g in graphs}) == len(graphs)


def test_connected_count_n4():
    assert sum(1 for _ in enumerate_labeled(4, is_connected)) == 38


def test_connected_claw_free_double_pass_n5():
    fast = [g.to_graph6() for g in enumerate_labeled(5, connected_claw_free)]
    # second pass: build every edge set directly and filter with networkx
    slow = []
    pairs = list(combinations(range(5), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        G = nx.Graph()
        G.add_nodes_from(range(5))
        G.add_edges_from(edges)
        if not nx.is_connected(G):
            continue
        claw = any(
            not (G.has_edge(a, b) or G.has_edge(a, c) or G.has_edge(b, c))
            for v in G for a, b, c in combinations(G[v], 3)
        )
        if not claw:
            slow.append(Graph.from_edges(5, edges).to_graph6())
    assert fast == slow
    assert len(fast) == 493


def test_enumeration_is_in_edge_mask_order():
    graphs = list(enumerate_labeled(3))
    assert [g.size for g in graphs] == [0, 1, 1, 2, 1, 2, 2, 3]


def test_enumeration_refuses_n8():
    with pytest.raises(OrderTooLarge):
        next(enumerate_labeled(8))


def test_report_invariants():
    r = TheoremReport("cycles")
    assert r.passed
    r.failures.append(Failure(["cycles", 5], 3, 4))
    assert not r.passed
    data = json.loads(r.to_json())
    assert data["failures"][0]["inputs"] == ["cycles", 5]
    assert "FAIL" in r.table()


@pytest.mark.parametrize("theorem", ["cycles", "corona", "rooted", "family"])
def test_quick_sweeps_pass(theorem):
    report = run_theorem(theorem)
    assert report.passed and report.instances > 0


def test_rooted_histogram_covers_all_cases():
    cases = run_theorem("rooted").info["cases"]
    assert all(cases[c] > 0 for c in ("low", "mid", "high"))


def test_sweeps_are_deterministic():
    a = run_theorem("clawfree", Budget(max_n=5))
    b = run_theorem("clawfree", Budget(max_n=5))
    assert (a.instances, a.failures, a.info) == (b.instances, b.failures, b.info)
    assert decomposition_pairs(5, seed=3) == decomposition_pairs(5, seed=3)


def test_parallel_matches_serial():
    serial = run_theorem("k1r", Budget(max_n=5))
    parallel = run_theorem("k1r", Budget(max_n=5, workers=2))
    assert serial.instances == parallel.instances
    assert serial.failures == parallel.failures and serial.info == parallel.info


def test_budget_marks_report_incomplete():
    report = run_theorem("clawfree", Budget(max_n=6, max_instances=50))
    assert not report.complete and not report.passed
    assert report.instances == 50


def test_corpus_ingestion():
    corpus = [complete(3), complete(4)]
    report = run_theorem("oracle", Budget(corpus=corpus))
    assert report.instances == 2 and report.passed


def test_failures_are_replayable():
    assert check_instance("cycles", [7])[0]
    # K_2 x K_3 misses the closed form, so this instance is a genuine discrepancy
    failure = Failure(["direct-complete", 2, 3], None, None)
    ok, expected, got = replay(failure)
    assert not ok and (expected, got) == (3, 4)
    assert replay(failure) == (ok, expected, got)


def test_claw_free_filter_consistent():
    for g in enumerate_labeled(5, connected_claw_free):
        assert is_claw_free(g) and find_claw(g) is None and is_connected(g)
