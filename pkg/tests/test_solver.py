import pytest

from golomb_fpt.corpus import consecutive_rulers
from golomb_fpt.hypergraph import CharacteristicHypergraph, build_improved
from golomb_fpt.oracle import brute_force_max_subruler, brute_force_min_deletions
from golomb_fpt.ruler import Ruler, is_golomb
from golomb_fpt.search import SearchOptions
from golomb_fpt.solver import (
    find_max_golomb_subruler, greedy_edge_deletion, greedy_vertex_deletion, max_marks_for_length,
)

EMPTY = CharacteristicHypergraph([0, 5, 9], [])


def H(n):
    return build_improved(Ruler.range(n))


def test_greedy_examples():
    assert len(greedy_vertex_deletion(H(3))) == 1
    assert greedy_vertex_deletion(EMPTY) == frozenset()
    assert greedy_vertex_deletion(H(4)) == {1}
    assert greedy_edge_deletion(H(3)) == {0, 1, 2}
    assert greedy_edge_deletion(EMPTY) == frozenset()
    assert len(greedy_edge_deletion(H(4))) <= 4


def test_greedy_results_clear_all_edges(small_corpus):
    for r in small_corpus:
        h = build_improved(r)
        opt = brute_force_min_deletions(r.marks)
        for g in (greedy_vertex_deletion(h), greedy_edge_deletion(h)):
            assert not h.delete(g).edges
            assert len(g) >= opt
        assert len(greedy_edge_deletion(h)) <= 4 * opt


@pytest.mark.parametrize("marks, size, dels", [
    ([0, 1, 3], 3, 0),
    ([0, 1, 2, 3], 3, 1),
    (range(6), 3, 3),
    ([0, 1, 4, 9, 11], 5, 0),
    ([], 0, 0),
])
def test_solver_examples(marks, size, dels):
    out = find_max_golomb_subruler(marks)
    assert len(out.best_subruler) == size and len(out.deletions) == dels
    assert out.best_subruler == Ruler(marks).without(out.deletions)
    assert is_golomb(out.best_subruler)
    if not dels:
        assert out.best_subruler == Ruler(marks)


def test_optimal_against_oracle(small_corpus):
    for r in small_corpus:
        out = find_max_golomb_subruler(r)
        assert len(out.best_subruler) == brute_force_max_subruler(r.marks).max_size, r
        assert is_golomb(out.best_subruler)
        assert out.greedy_bound >= len(out.deletions)


@pytest.mark.parametrize("opts", [SearchOptions(cement=False), SearchOptions(inner_kernel=False),
                                  SearchOptions(domination=False)], ids=str)
def test_ablations_stay_optimal(opts):
    for r in consecutive_rulers(12):
        assert len(find_max_golomb_subruler(r, opts).best_subruler) == \
            brute_force_max_subruler(r.marks).max_size


def test_driver_is_monotone(small_corpus):
    for r in small_corpus:
        out = find_max_golomb_subruler(r)
        ks = [s.k for s in out.steps]
        assert ks == sorted(ks, reverse=True) and len(set(ks)) == len(ks)
        assert ks[0] == out.greedy_bound
        assert len(out.steps) <= out.greedy_bound + 1
        assert all(s.found for s in out.steps[:-1])
        hits = [s for s in out.steps if s.found]
        assert hits and hits[-1].solution_size == len(out.deletions)
        for a, b in zip(out.steps, out.steps[1:]):
            assert b.k == a.solution_size - 1


def test_stats_are_summed():
    out = find_max_golomb_subruler(Ruler.range(12))
    assert out.stats.nodes_visited == sum(s.stats.nodes_visited for s in out.steps)


def _oracle_G(n):
    """Shortest D such that {0..D} holds n Golomb marks, by brute force."""
    D = 0
    while brute_force_max_subruler(range(D + 1)).max_size < n:
        D += 1
    return D


def test_max_marks_examples():
    assert max_marks_for_length(0).best_subruler == Ruler([0])
    three = max_marks_for_length(3).best_subruler
    assert three in (Ruler([0, 1, 3]), Ruler([0, 2, 3]))
    six = max_marks_for_length(6).best_subruler
    assert len(six) == 4 and is_golomb(six)
    assert len(max_marks_for_length(11).best_subruler) == 5
    with pytest.raises(ValueError):
        max_marks_for_length(-1)


def test_known_small_g_values():
    table = {2: 1, 3: 3, 4: 6, 5: 11}
    for n, g in table.items():
        assert _oracle_G(n) == g
        assert len(max_marks_for_length(g).best_subruler) >= n
        assert len(max_marks_for_length(g - 1).best_subruler) < n


def test_max_marks_nondecreasing():
    counts = [len(max_marks_for_length(D).best_subruler) for D in range(16)]
    assert counts == sorted(counts)
    assert counts[:12] == [brute_force_max_subruler(range(D + 1)).max_size for D in range(12)]
