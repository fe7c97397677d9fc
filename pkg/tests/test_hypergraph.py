import pytest
from hypothesis import given, settings, strategies as st

from golomb_fpt.corpus import random_rulers
from golomb_fpt.hypergraph import (
    CharacteristicHypergraph, build_improved, build_naive, consecutive_edge_lower_bound,
    generating_distances, is_conflict, is_golomb_via_graph,
)
from golomb_fpt.ruler import Ruler, is_golomb


def brute_edges(marks):
    """Independent restatement: a 3- or 4-set is an edge iff two distinct mark
    pairs inside it measure the same distance and together cover the set."""
    from itertools import combinations
    out = set()
    for size in (3, 4):
        for s in combinations(sorted(marks), size):
            pairs = list(combinations(s, 2))
            for p, q in combinations(pairs, 2):
                if p[1] - p[0] == q[1] - q[0] and set(p) | set(q) == set(s):
                    out.add(s)
                    break
    return out


def test_small_examples():
    assert build_naive(Ruler([0, 1, 3])).edges == ()
    assert build_naive(Ruler([0, 1, 2])).edges == ((0, 1, 2),)
    assert set(build_naive(Ruler.range(4)).edges) == {(0, 1, 2), (1, 2, 3), (0, 1, 2, 3)}
    assert build_improved(Ruler.range(4)) == build_naive(Ruler.range(4))
    assert build_improved(Ruler([0, 1, 4, 9, 11])).edges == ()
    assert build_improved(Ruler([8, 9, 64, 65])).edges == ((8, 9, 64, 65),)


def test_brute_edges_agrees_on_range():
    for n in range(9):
        assert set(build_naive(Ruler.range(n)).edges) == brute_edges(range(n))


@pytest.mark.parametrize("n", range(0, 41, 4))
def test_constructors_agree_on_consecutive(n):
    r = Ruler(range(n + 1))
    assert build_naive(r).edge_set() == build_improved(r).edge_set()


def test_constructors_agree_on_random():
    for r in random_rulers(120, 16, 60, seed=7):
        assert build_naive(r).edge_set() == build_improved(r).edge_set()


@given(st.sets(st.integers(0, 80), max_size=13))
@settings(max_examples=150, deadline=None)
def test_graph_characterises_golomb(marks):
    r = Ruler(marks)
    h = build_improved(r)
    assert (h.num_edges == 0) == is_golomb(r) == is_golomb_via_graph(r)
    assert set(h.edges) == brute_edges(marks)
    assert h.audit()


@given(st.sets(st.integers(0, 80), min_size=3, max_size=13))
@settings(max_examples=150, deadline=None)
def test_every_edge_has_short_nonoverlapping_witness(marks):
    r = Ruler(marks)
    half = (r.marks[-1] - r.marks[0]) // 2
    for e in build_improved(r).edges:
        assert is_conflict(e)
        ds = generating_distances(e)
        assert ds, e
        assert min(ds) <= half


def test_is_golomb_via_graph():
    assert is_golomb_via_graph(Ruler([0, 1, 3]))
    assert not is_golomb_via_graph(Ruler([0, 1, 2]))
    assert not is_golomb_via_graph(Ruler([8, 9, 64, 65]))


def test_consecutive_lower_bound_values():
    # n=4: delta=1 gives 3+2+1 placements, delta=2 gives 1
    assert consecutive_edge_lower_bound(2) == 1
    assert consecutive_edge_lower_bound(4) == 7
    assert consecutive_edge_lower_bound(6) == 22
    for bad in (0, 3, -2):
        with pytest.raises(ValueError):
            consecutive_edge_lower_bound(bad)


@pytest.mark.parametrize("n", range(2, 31, 2))
def test_consecutive_lower_bound_below_edge_count(n):
    assert consecutive_edge_lower_bound(n) <= build_improved(Ruler(range(n + 1))).num_edges


def test_incidence_and_views():
    h = build_improved(Ruler.range(4))
    assert h.degree(0) == 2 and h.degree(1) == 3
    assert set(h.incidence[3]) == {(1, 2, 3), (0, 1, 2, 3)}
    g = h.delete([1])
    assert g.vertices == (0, 2, 3) and g.edges == ()
    assert h.num_edges == 3  # the original is untouched
    assert h.induced([0, 1, 2]).edges == ((0, 1, 2),)


def test_dump_format():
    text = build_improved(Ruler.range(4)).dump()
    assert text == "vertices: 4 edges: 3\n0 1 2\n0 1 2 3\n1 2 3\n"


def test_audit_detects_bad_index():
    h = build_improved(Ruler.range(4))
    assert h.audit()
    object.__setattr__(h, "incidence", {**h.incidence, 0: ()})
    assert not h.audit()


def test_rejects_bad_edges():
    from golomb_fpt.errors import GolombError
    with pytest.raises(GolombError):
        CharacteristicHypergraph([1, 2], [(1, 2)])
    with pytest.raises(GolombError):
        CharacteristicHypergraph([1, 2, 3], [(1, 2, 3, 4)])
