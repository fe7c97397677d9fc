"""Reduction rules for mark deletion and the cubic kernel driver.

Rules, in the order the driver tries them:

1. lone edge     an edge meeting no other edge: delete one of its marks.
3. leaf edge     an edge meeting the rest of the graph only in one mark v:
                 delete v.
4. high degree 3 a mark in more than 3k 3-edges must be deleted.
5. high degree 4 a mark in more than 3k^2 4-edges must be deleted.
2. lone vertex   a mark in no edge is kept and leaves the graph.

On a yes-instance where rules 4 and 5 no longer apply there are at most
3k^2 3-edges and 3k^3 4-edges left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from ._working import WorkingGraph
from .hypergraph import CharacteristicHypergraph


def kernel_mark_bound(k: int) -> int:
    """Marks-in-edges bound 9k^3 + 2k^2 + k on a reduced yes-instance."""
    return 9 * k**3 + 2 * k**2 + k


def _safe_mark_bound(k: int) -> int:
    # each of <= 3k^2 3-edges has <= 2 marks outside a size-k solution
    return 9 * k**3 + 6 * k**2 + k


def within_kernel_bounds(num3: int, num4: int, marks: int, k: int) -> bool:
    if k < 0:
        return num3 == num4 == 0
    return num3 <= 3 * k**2 and num4 <= 3 * k**3 and marks <= kernel_mark_bound(k)


def exceeds_safe_bounds(num3: int, num4: int, marks: int, k: int) -> bool:
    """Size test used to reject a reduced instance as a no-instance."""
    return num3 > 3 * k**2 or num4 > 3 * k**3 or marks > _safe_mark_bound(k)


@dataclass
class KernelResult:
    graph: CharacteristicHypergraph
    budget: int
    forced_deletions: frozenset[int]
    kept_marks: frozenset[int] = frozenset()
    infeasible: bool = False
    rule_counts: dict[str, int] = field(default_factory=dict)

    @property
    def within_bounds(self) -> bool:
        g = self.graph
        return within_kernel_bounds(
            len(g.edges_of_size(3)), len(g.edges_of_size(4)), len(g.marks_in_edges()), self.budget
        )


class Reducer:
    """Applies the reduction rules to a working graph in place.

    ``cemented`` marks may never be deleted; a rule that would have to delete
    one proves the instance infeasible. Deleted marks go to ``forced``, marks
    dropped by rules 1 and 2 without being deleted go to ``kept``.
    """

    def __init__(self, wg: WorkingGraph, k: int, cemented: Iterable[int] = ()):
        self.wg = wg
        self.k = k
        self.cemented = cemented if isinstance(cemented, (set, frozenset)) else set(cemented)
        self.forced: list[int] = []
        self.kept: list[int] = []
        self.infeasible = k < 0
        self.counts = {"lone_edges": 0, "leaf_edges": 0, "high_degree_3": 0,
                       "high_degree_4": 0, "lone_vertices": 0}

    def _delete(self, v: int, rule: str) -> bool:
        if v in self.cemented:
            self.infeasible = True
            return False
        self.wg.delete(v)
        self.forced.append(v)
        self.k -= 1
        self.counts[rule] += 1
        if self.k < 0:
            self.infeasible = True
            return False
        return True

    def _deletable(self, e, exclude=None):
        return [u for u in e if u not in self.cemented and u != exclude]

    def lone_edges(self, drop_vertices: bool = True) -> int:
        wg, n = self.wg, 0
        for i in sorted(wg.live, key=wg.edges.__getitem__):
            if self.infeasible:
                break
            if i not in wg.live:
                continue
            e = wg.edges[i]
            if any(wg.degree(v) != 1 for v in e):
                continue
            free = self._deletable(e)
            if not free:
                self.infeasible = True
                break
            if not self._delete(free[0], "lone_edges"):
                break
            n += 1
            if drop_vertices:
                for v in e:
                    if v != free[0]:
                        wg.delete(v)
                        self.kept.append(v)
        return n

    def leaf_edges(self) -> int:
        wg, n = self.wg, 0
        for i in sorted(wg.live, key=wg.edges.__getitem__):
            if self.infeasible:
                break
            if i not in wg.live:
                continue
            e = wg.edges[i]
            shared = [v for v in e if wg.degree(v) > 1]
            if len(shared) != 1:
                continue
            v = shared[0]
            if v in self.cemented:
                # v is off limits; the other marks of e lie in e only
                free = self._deletable(e, exclude=v)
                if not free:
                    self.infeasible = True
                    break
                v = free[0]
            if not self._delete(v, "leaf_edges"):
                break
            n += 1
        return n

    def _high_degree(self, index: dict[int, set[int]], threshold, rule: str) -> int:
        wg, n = self.wg, 0
        while not self.infeasible:
            limit = threshold(self.k)
            over = [v for v in wg.present if len(index[v]) > limit]
            if not over:
                break
            if not self._delete(min(over), rule):
                break
            n += 1
        return n

    def high_degree_3(self) -> int:
        return self._high_degree(self.wg.inc3, lambda k: 3 * k, "high_degree_3")

    def high_degree_4(self) -> int:
        return self._high_degree(self.wg.inc4, lambda k: 3 * k * k, "high_degree_4")

    def lone_vertices(self) -> int:
        wg = self.wg
        lone = sorted(v for v in wg.present if wg.degree(v) == 0)
        for v in lone:
            wg.delete(v)
            self.kept.append(v)
        self.counts["lone_vertices"] += len(lone)
        return len(lone)

    def run(self, extra_rules: bool = True, drop_vertices: bool = True) -> bool:
        """Reduce to a fixpoint; returns False iff the instance is proven infeasible."""
        changed = True
        while changed and not self.infeasible:
            changed = False
            if extra_rules:
                changed |= self.lone_edges(drop_vertices) > 0
                changed |= self.leaf_edges() > 0
            changed |= self.high_degree_3() > 0
            changed |= self.high_degree_4() > 0
        if self.infeasible:
            return False
        if drop_vertices:
            self.lone_vertices()
        return True

    def result(self) -> KernelResult:
        return KernelResult(
            graph=self.wg.freeze(),
            budget=self.k,
            forced_deletions=frozenset(self.forced),
            kept_marks=frozenset(self.kept),
            infeasible=self.infeasible,
            rule_counts={k: v for k, v in self.counts.items() if v},
        )


def _apply(h: CharacteristicHypergraph, k: int, step: str) -> KernelResult:
    red = Reducer(WorkingGraph(h), k)
    if not red.infeasible:
        getattr(red, step)()
    return red.result()


def rule_lone_edges(h: CharacteristicHypergraph, k: int) -> KernelResult:
    return _apply(h, k, "lone_edges")


def rule_lone_vertices(h: CharacteristicHypergraph, k: int) -> KernelResult:
    return _apply(h, k, "lone_vertices")


def rule_leaf_edges(h: CharacteristicHypergraph, k: int) -> KernelResult:
    return _apply(h, k, "leaf_edges")


def rule_high_degree_3(h: CharacteristicHypergraph, k: int) -> KernelResult:
    return _apply(h, k, "high_degree_3")


def rule_high_degree_4(h: CharacteristicHypergraph, k: int) -> KernelResult:
    return _apply(h, k, "high_degree_4")


def kernelize(h: CharacteristicHypergraph, k: int, extra_rules: bool = True) -> KernelResult:
    """Reduce ``(h, k)`` to a problem kernel.

    With ``extra_rules=False`` only the high-degree rules and the lone-vertex
    rule run, which is the minimal set the size bounds rely on. A reduced
    instance that is too large for any yes-instance is reported infeasible.
    """
    red = Reducer(WorkingGraph(h), k)
    red.run(extra_rules=extra_rules)
    res = red.result()
    if not res.infeasible:
        g = res.graph
        if exceeds_safe_bounds(len(g.edges_of_size(3)), len(g.edges_of_size(4)),
                               len(g.marks_in_edges()), res.budget):
            res.infeasible = True
    return res
