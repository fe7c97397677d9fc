"""Maximum-cardinality Golomb subrulers via repeated parameterized search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._working import WorkingGraph
from .hypergraph import CharacteristicHypergraph, build_improved
from .ruler import Ruler, as_ruler
from .search import DeletionInstance, SearchOptions, SearchStats, solve_parameterized


def greedy_vertex_deletion(h: CharacteristicHypergraph) -> frozenset[int]:
    """Delete a maximum-degree mark (smallest on ties) until no edge is left."""
    wg = WorkingGraph(h)
    out = set()
    while wg.live:
        v = min(wg.present, key=lambda v: (-wg.degree(v), v))
        wg.delete(v)
        out.add(v)
    return frozenset(out)


def greedy_edge_deletion(h: CharacteristicHypergraph) -> frozenset[int]:
    """Delete every mark of the lexicographically first edge until no edge is left.

    The chosen edges are pairwise disjoint and each needs its own deletion,
    so the result is at most four times the optimum.
    """
    wg = WorkingGraph(h)
    out = set()
    while wg.live:
        e = min(wg.edges[i] for i in wg.live)
        for v in e:
            wg.delete(v)
            out.add(v)
    return frozenset(out)


@dataclass
class KStep:
    k: int
    found: bool
    solution_size: int | None
    stats: SearchStats


@dataclass
class SolveOutcome:
    best_subruler: Ruler
    deletions: frozenset[int]
    greedy_bound: int
    steps: list[KStep] = field(default_factory=list)

    @property
    def stats(self) -> SearchStats:
        total = SearchStats()
        for s in self.steps:
            total.add(s.stats)
        return total


def find_max_golomb_subruler(
    r: Ruler | Iterable[int], opts: SearchOptions = SearchOptions()
) -> SolveOutcome:
    """Seed the budget with the better greedy solution, then shrink it.

    After every successful search the budget drops to one less than the size
    of the solution just found; the last success is a minimum deletion set.
    """
    r = as_ruler(r)
    h = build_improved(r)
    greedy = min(greedy_vertex_deletion(h), greedy_edge_deletion(h), key=lambda s: (len(s), sorted(s)))
    best = greedy
    k = len(greedy)
    steps = []
    while k >= 0:
        sol, stats = solve_parameterized(DeletionInstance(h, k), opts)
        steps.append(KStep(k, sol is not None, None if sol is None else len(sol), stats))
        if sol is None:
            break
        best = sol
        k = len(sol) - 1
    return SolveOutcome(r.without(best), best, len(greedy), steps)


def max_marks_for_length(max_length: int, opts: SearchOptions = SearchOptions()) -> SolveOutcome:
    """Most marks a Golomb ruler of length at most ``max_length`` can carry."""
    if max_length < 0:
        raise ValueError("length must be nonnegative")
    return find_max_golomb_subruler(Ruler.range(max_length + 1), opts)
