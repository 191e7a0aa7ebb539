import json
import random
from itertools import combinations, product

import jsonschema
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oird.graph import Graph, complete, cycle, path, star
from oird.harness import enumerate_labeled, random_graph
from oird.rainbow import (CERTIFICATE_SCHEMA, Certificate, OrderTooLarge, RainbowAssignment,
                          SOLVER_METHODS, brute_force, component_decompose_solve,
                          enumerate_optimal, frontier_order, solve_exact, verify)


def plain_valid(g: Graph, labels, outer=True) -> bool:
    """Definition-level check written independently of the library."""
    for v in range(g.n):
        if labels[v]:
            continue
        seen = set()
        for u in range(g.n):
            if g.has_edge(u, v):
                seen |= labels[u]
                if outer and not labels[u]:
                    return False
        if seen != {1, 2}:
            return False
    return True


SUBSETS = [frozenset(), frozenset({1}), frozenset({2}), frozenset({1, 2})]


def naive_optima(g: Graph, outer=True):
    best, found = None, []
    for combo in product(SUBSETS, repeat=g.n):
        if not plain_valid(g, combo, outer):
            continue
        w = sum(len(s) for s in combo)
        if best is None or w < best:
            best, found = w, [combo]
        elif w == best:
            found.append(combo)
    return best, found


def cycle_formula(p):
    return p // 2 + -(-p // 4) - p // 4


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


# -- verify ---------------------------------------------------------------------------


def test_verify_examples():
    assert verify(cycle(4), RainbowAssignment.from_sets([[1], [], [2], []])).valid
    f = RainbowAssignment.from_sets([[], [1, 2], []])
    assert verify(path(3), f).valid and f.weight == 2
    bad = verify(complete(2), [0, 0])
    assert not bad.valid
    assert any(v.kind == "adjacent-empty" and v.vertices == (0, 1) for v in bad.violations)
    lone = verify(Graph.empty(1), [0])
    assert not lone.valid and lone.violations[0].kind == "rainbow-deficit"
    assert lone.violations[0].missing == (1, 2)


def test_verify_rejects_size_mismatch_and_bad_k():
    with pytest.raises(ValueError):
        verify(path(3), [1, 1])
    with pytest.raises(ValueError):
        verify(path(2), RainbowAssignment((1, 1), k=4))


def test_assignment_string_and_parts():
    f = RainbowAssignment.from_sets([[], [1, 2], [1]])
    assert str(f) == "(∅, {1,2}, {1})"
    assert f.weight == 3
    assert f.empty_set() == (0,)


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=6), st.data())
def test_verify_agrees_with_definition(g, data):
    labels = data.draw(st.lists(st.integers(0, 3), min_size=g.n, max_size=g.n))
    sets = [frozenset(c + 1 for c in range(2) if lab >> c & 1) for lab in labels]
    assert verify(g, labels).valid == plain_valid(g, sets)


# -- exact values ---------------------------------------------------------------------


@pytest.mark.parametrize("p", range(3, 13))
def test_cycles(p):
    assert solve_exact(cycle(p))[0] == cycle_formula(p)


def test_small_examples():
    assert solve_exact(Graph.empty(1))[0] == 1
    assert solve_exact(path(4))[0] == 3
    assert solve_exact(cycle(4))[0] == 2
    for n in range(3, 9):
        assert solve_exact(complete(n))[0] == n - 1
    for n in range(3, 7):
        assert naive_optima(complete(n))[0] == n - 1


def test_brute_force_examples():
    assert brute_force(cycle(6)) == 4
    assert brute_force(complete(2)) == 2
    assert brute_force(path(3)) == 2
    with pytest.raises(OrderTooLarge):
        brute_force(cycle(13))


def test_additivity_examples():
    assert component_decompose_solve(complete(2).union(complete(2))) == 4
    assert component_decompose_solve(cycle(4).union(Graph.empty(1))) == 3
    assert solve_exact(cycle(4).union(Graph.empty(1)))[0] == 3
    assert component_decompose_solve(cycle(7)) == solve_exact(cycle(7))[0]


def test_solver_matches_naive_oracle_through_n5():
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            assert solve_exact(g)[0] == naive_optima(g)[0], g.to_graph6()


def test_numpy_oracle_matches_naive_oracle():
    rng = random.Random(5)
    for _ in range(40):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        assert brute_force(g) == naive_optima(g)[0]
        assert brute_force(g, outer_independent=False) == naive_optima(g, outer=False)[0]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=9))
def test_certificate_sound(g):
    value, cert = solve_exact(g)
    assert cert.valid and cert.weight == value
    assert verify(g, cert.assignment).valid
    assert value == brute_force(g)


@pytest.mark.parametrize("method", SOLVER_METHODS)
def test_every_method_matches_naive_oracle_through_n5(method):
    for n in range(1, 6):
        for g in enumerate_labeled(n):
            value, cert = solve_exact(g, method)
            assert value == naive_optima(g)[0], (method, g.to_graph6())
            assert cert.valid and cert.weight == value


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10))
def test_frontier_certificate_sound(g):
    value, cert = solve_exact(g, "frontier")
    assert plain_valid(g, [set(lab) for lab in cert.assignment.as_lists()])
    assert cert.weight == value == brute_force(g)


def frontier_width(g: Graph, order) -> int:
    placed, width = set(), 0
    for v in order:
        placed.add(v)
        open_ = [u for u in placed if any(g.has_edge(u, x) for x in range(g.n) if x not in placed)]
        width = max(width, len(open_))
    return width


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=10))
def test_frontier_order_is_a_permutation_of_stated_width(g):
    width, order = frontier_order(g)
    assert sorted(order) == list(range(g.n))
    assert width == frontier_width(g, order)


def test_frontier_order_widths():
    assert frontier_order(path(9))[0] == 1
    assert frontier_order(cycle(12))[0] == 2
    assert frontier_order(complete(6))[0] == 5


def test_methods_agree_on_sparse_twenty_vertex_graphs():
    rng = random.Random(11)
    for _ in range(6):
        g = random_graph(20, 0.13, rng)
        values = {m: solve_exact(g, m) for m in SOLVER_METHODS}
        assert len({v for v, _ in values.values()}) == 1, g.to_graph6()
        assert all(c.valid for _, c in values.values())
    for p in (16, 23, 30):
        assert solve_exact(cycle(p), "frontier")[0] == cycle_formula(p)


def test_unknown_method_is_rejected():
    with pytest.raises(ValueError):
        solve_exact(path(3), "guess")


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7), graphs(max_n=7))
def test_disjoint_union_is_additive(g, h):
    assert solve_exact(g.union(h))[0] == solve_exact(g)[0] + solve_exact(h)[0]


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8))
def test_bounds_sandwich(g):
    value = solve_exact(g)[0]
    plain = brute_force(g, outer_independent=False)
    assert plain <= value <= 2 * g.n
    # labelling every vertex {1} is always feasible
    assert value <= g.n


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert solve_exact(g.relabel(perm))[0] == solve_exact(g)[0]


# -- enumeration of optima ------------------------------------------------------------


def sets_of(f: RainbowAssignment):
    return tuple(frozenset(s) for s in f.as_lists())


def test_optimal_function_counts():
    p3 = {sets_of(f) for f in enumerate_optimal(path(3))}
    assert p3 == {
        (frozenset(), frozenset({1, 2}), frozenset()),
        (frozenset({1}), frozenset(), frozenset({2})),
        (frozenset({2}), frozenset(), frozenset({1})),
    }
    k13 = list(enumerate_optimal(star(3)))
    assert len(k13) == 1 and k13[0].as_lists() == [[1, 2], [], [], []]
    assert len(list(enumerate_optimal(complete(2)))) == 6


def test_enumeration_matches_naive_count():
    rng = random.Random(11)
    for _ in range(25):
        g = random_graph(rng.randint(1, 6), rng.random(), rng)
        gamma, naive = naive_optima(g)
        ours = [sets_of(f) for f in enumerate_optimal(g)]
        assert len(ours) == len(set(ours))
        assert set(ours) == set(naive)
        assert all(sum(len(s) for s in f) == gamma for f in ours)


def test_enumeration_refuses_large_graphs():
    with pytest.raises(OrderTooLarge):
        next(enumerate_optimal(cycle(13)))


# -- certificates ---------------------------------------------------------------------


def test_certificate_round_trip_and_schema():
    value, cert = solve_exact(cycle(7))
    data = json.loads(cert.to_json())
    jsonschema.validate(data, CERTIFICATE_SCHEMA)
    assert set(data) == {"graph6", "k", "labels", "weight"}
    assert data["weight"] == value
    again = Certificate.from_json(cert.to_json())
    assert again.valid and again.assignment == cert.assignment and again.graph == cycle(7)


def test_certificate_rejects_wrong_weight():
    _, cert = solve_exact(cycle(5))
    data = cert.to_dict()
    data["weight"] += 1
    with pytest.raises(ValueError):
        Certificate.from_dict(data)


def test_tampered_certificate_is_invalid():
    _, cert = solve_exact(cycle(6))
    labels = list(cert.assignment.labels)
    v = next(i for i, lab in enumerate(labels) if lab)
    labels[v] = 0
    bad = Certificate.build(cycle(6), labels)
    assert not bad.valid
