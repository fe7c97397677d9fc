import pytest
from hypothesis import given, settings, strategies as st

from conftest import graph
from golomb_fpt.corpus import consecutive_rulers
from golomb_fpt.hypergraph import CharacteristicHypergraph, build_improved
from golomb_fpt.oracle import brute_force_min_deletions
from golomb_fpt.ruler import Ruler, is_golomb
from golomb_fpt.search import (
    DeletionInstance, NodeLimitExceeded, SearchOptions, SearchStats, cement_and_propagate,
    choose_branching_edge, find_dominating_vertex, solve_parameterized,
)

ALL_OPTIONS = [
    SearchOptions(),
    SearchOptions(cement=False),
    SearchOptions(domination=False),
    SearchOptions(inner_kernel=False),
    SearchOptions(cement=False, domination=False, inner_kernel=False),
]


def H(n):
    return build_improved(Ruler.range(n))


def solve(h, k, opts=SearchOptions()):
    return solve_parameterized(DeletionInstance(h, k), opts)


def test_examples():
    sol, stats = solve(H(4), 1)
    assert sol is not None and len(sol) == 1
    assert is_golomb(Ruler.range(4).without(sol))
    assert stats.nodes_visited >= 1
    assert solve(H(4), 0)[0] is None
    assert solve(H(6), 2)[0] is None
    assert solve(H(6), 3)[0] is not None


def test_edge_free_and_negative_budget():
    sol, stats = solve(build_improved(Ruler([0, 1, 3])), 0)
    assert sol == frozenset() and stats.nodes_visited == 1
    assert solve(H(3), -1)[0] is None


def test_choose_branching_edge():
    mixed = graph([(0, 1, 2, 3), (4, 5, 6)])
    assert choose_branching_edge(DeletionInstance(mixed, 2)) == (4, 5, 6)
    cem = DeletionInstance(graph([(0, 1, 2, 3), (4, 5, 6)]), 2, cemented=frozenset({0, 1}))
    assert choose_branching_edge(cem) == (0, 1, 2, 3)
    fours = graph([(2, 3, 4, 5), (0, 1, 2, 3), (1, 2, 3, 4)])
    assert choose_branching_edge(DeletionInstance(fours, 2)) == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        choose_branching_edge(DeletionInstance(CharacteristicHypergraph([1, 2], []), 1))


def test_cement_and_propagate():
    h = H(5)
    inst = DeletionInstance(h, 3, cemented=frozenset({0, 1}))
    out = cement_and_propagate(inst, 3)
    assert out is not None
    assert out.cemented == {0, 1, 3}
    assert out.solution == {2, 4} and out.budget == 1
    assert out.graph.edges == ()

    assert cement_and_propagate(DeletionInstance(h, 3, cemented=frozenset({0, 1})), 2) is None

    # budget too small for the forced deletions
    assert cement_and_propagate(DeletionInstance(h, 1, cemented=frozenset({0, 1})), 3) is None

    fixture = graph([(0, 1, 2)], extra=[7])
    assert cement_and_propagate(DeletionInstance(fixture, 1, cemented=frozenset({0, 1})), 2) is None
    out = cement_and_propagate(DeletionInstance(fixture, 1, cemented=frozenset({0})), 1)
    assert out is not None and out.solution == {2} and out.budget == 0


def test_cemented_marks_survive():
    h = H(8)
    for c in [(0,), (0, 1), (3, 4), (0, 1, 4)]:
        sol, _ = solve_parameterized(DeletionInstance(h, 6, cemented=frozenset(c)))
        assert sol is not None and not sol & set(c)
        assert is_golomb(Ruler.range(8).without(sol))


def test_find_dominating_vertex():
    assert find_dominating_vertex(graph([(1, 2, 3)])) is not None
    assert find_dominating_vertex(H(4)) == (1, 0)
    assert find_dominating_vertex(CharacteristicHypergraph([0, 1], [])) is None
    assert find_dominating_vertex(H(9)) is None


def test_dominating_vertex_postcondition(small_corpus):
    found = 0
    for r in small_corpus:
        h = build_improved(r)
        pair = find_dominating_vertex(h)
        if pair is None:
            assert not any(
                any(all(v in e for e in h.incidence[u]) for v in h.vertices if v != u)
                for u in h.vertices if h.incidence[u]
            )
            continue
        v, u = pair
        found += 1
        assert v != u and h.incidence[u] and all(v in e for e in h.incidence[u])
    assert found > 0


def _check_solution(r, k, sol):
    assert len(sol) <= k
    assert is_golomb(r.without(sol))
    assert not build_improved(r).delete(sol).edges


@pytest.mark.parametrize("opts", ALL_OPTIONS, ids=str)
def test_complete_on_consecutive(opts):
    for r in consecutive_rulers(12):
        h = build_improved(r)
        opt = brute_force_min_deletions(r.marks)
        for k in range(len(r) + 1):
            sol, stats = solve(h, k, opts)
            assert (sol is not None) == (opt <= k), (r.marks, k)
            if sol is not None:
                _check_solution(r, k, sol)
            assert stats.nodes_visited <= (4 ** (k + 2) - 1) // 3


def test_complete_on_random(small_corpus):
    for r in small_corpus:
        h = build_improved(r)
        opt = brute_force_min_deletions(r.marks)
        for k in {max(opt - 1, 0), opt, opt + 1}:
            sol, stats = solve(h, k)
            assert (sol is not None) == (opt <= k), (r.marks, k)
            if sol is not None:
                _check_solution(r, k, sol)
            assert stats.nodes_visited <= max(4 ** k, 1)


def test_option_variants_agree(small_corpus):
    for r in small_corpus[::4]:
        h = build_improved(r)
        for k in range(len(r) + 1):
            answers = {solve(h, k, o)[0] is not None for o in ALL_OPTIONS}
            assert len(answers) == 1, (r.marks, k)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(0, 24), max_size=11), st.integers(0, 6))
def test_soundness_property(marks, k):
    r = Ruler(marks)
    sol, _ = solve(build_improved(r), k)
    if sol is not None:
        _check_solution(r, k, sol)


def test_deterministic():
    a = solve(H(14), 9)
    b = solve(H(14), 9)
    assert a == b


def test_node_limit():
    with pytest.raises(NodeLimitExceeded):
        solve(H(14), 8, SearchOptions(node_limit=3))


def test_cementation_reduces_nodes():
    h = H(16)
    _, on = solve(h, 11)
    _, off = solve(h, 11, SearchOptions(cement=False))
    assert on.nodes_visited < off.nodes_visited
    assert off.cement_deletions == 0


def test_stats_add():
    a = SearchStats(1, 2, 3, 4)
    a.add(SearchStats(1, 1, 1, 1))
    assert a.as_dict() == {"nodes_visited": 2, "cement_deletions": 3,
                           "rule_deletions": 4, "branches_aborted": 5}
