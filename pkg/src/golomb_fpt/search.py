"""Bounded search tree for Golomb subruler mark deletion.

Each node picks an edge with the fewest non-cemented marks and branches on
deleting one of them. When the branch deleting a mark fails, that mark is
cemented: no solution below this node may delete it. Cemented marks have to
stay a Golomb ruler, so every mark that would complete a conflict with
cemented marks only is deleted right away. Optionally each node also runs
the kernel rules and a dominating-vertex branching rule.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from ._working import WorkingGraph
from .hypergraph import CharacteristicHypergraph, Edge
from .kernel import Reducer, exceeds_safe_bounds


@dataclass
class SearchStats:
    nodes_visited: int = 0
    cement_deletions: int = 0
    rule_deletions: int = 0
    branches_aborted: int = 0

    def add(self, other: "SearchStats") -> None:
        for k, v in asdict(other).items():
            setattr(self, k, getattr(self, k) + v)

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class DeletionInstance:
    graph: CharacteristicHypergraph
    budget: int
    cemented: frozenset[int] = frozenset()
    solution: frozenset[int] = frozenset()


@dataclass(frozen=True)
class SearchOptions:
    cement: bool = True
    domination: bool = True
    inner_kernel: bool = True
    node_limit: Optional[int] = None


class NodeLimitExceeded(Exception):
    pass


class _Search:
    def __init__(self, inst: DeletionInstance, opts: SearchOptions):
        self.wg = WorkingGraph(inst.graph)
        self.opts = opts
        self.stats = SearchStats()
        self.cemented: set[int] = set()
        self._c_trail: list[int] = []
        self.deleted: list[int] = []
        self.k = inst.budget
        for v in sorted(inst.solution):
            if v in self.wg.present:
                self.wg.delete(v)
        self.base_solution = set(inst.solution)

    # -- state bookkeeping -------------------------------------------------

    def checkpoint(self) -> tuple[int, int, int, int]:
        return self.wg.checkpoint(), len(self.deleted), len(self._c_trail), self.k

    def rollback(self, cp: tuple[int, int, int, int]) -> None:
        g, s, c, k = cp
        self.wg.rollback(g)
        del self.deleted[s:]
        while len(self._c_trail) > c:
            self.cemented.discard(self._c_trail.pop())
        self.k = k

    def delete(self, v: int) -> None:
        self.wg.delete(v)
        self.deleted.append(v)
        self.k -= 1

    # -- cementation ---------------------------------------------------------

    def _propagate(self, ids: Iterable[int]) -> bool:
        wg = self.wg
        forced = set()
        for i in ids:
            if i not in wg.live:
                continue
            free = [u for u in wg.edges[i] if u not in self.cemented]
            if not free:
                return False  # cemented marks are no longer Golomb
            if len(free) == 1:
                forced.add(free[0])
        for u in sorted(forced):
            self.delete(u)
            self.stats.cement_deletions += 1
        return self.k >= 0

    def cement(self, v: int) -> bool:
        """Cement ``v`` and delete every mark it forces; False aborts the branch.

        Only edges through ``v`` can change state, so only those are scanned.
        """
        self.cemented.add(v)
        self._c_trail.append(v)
        return self._propagate(self.wg.incident(v))

    def cement_all(self, marks: Iterable[int]) -> bool:
        for v in sorted(set(marks) - self.cemented):
            self.cemented.add(v)
            self._c_trail.append(v)
        return self._propagate(list(self.wg.live))

    # -- branching -----------------------------------------------------------

    def choose_edge(self) -> Edge:
        wg, cem = self.wg, self.cemented
        best = None
        for i in wg.live:
            e = wg.edges[i]
            key = (sum(1 for v in e if v not in cem), len(e), e)
            if best is None or key < best:
                best = key
        return best[2]

    def _dominates(self, v: int, w: int) -> bool:
        wg = self.wg
        return wg.inc3[w] <= wg.inc3[v] and wg.inc4[w] <= wg.inc4[v]

    def domination_branches(self, limit: int) -> Optional[list[int]]:
        """Smallest dominating-vertex branch set with fewer than ``limit`` branches."""
        wg, cem = self.wg, self.cemented
        best = None
        for u in sorted(wg.present):
            if u in cem:
                continue
            ids = wg.incident(u)
            if not ids:
                continue
            common = set(wg.edges[ids[0]])
            for i in ids[1:]:
                common.intersection_update(wg.edges[i])
                if len(common) == 1:
                    break
            common.discard(u)
            doms = sorted(common - cem)
            if not doms:
                continue
            e = min((wg.edges[i] for i in ids),
                    key=lambda e: (sum(1 for x in e if x not in cem), len(e), e))
            for v in doms:
                rest = [w for w in e if w != v and w not in cem and not self._dominates(v, w)]
                branches = [v, *rest]
                if len(branches) < limit and (best is None or len(branches) < len(best)):
                    best = branches
                    if len(best) == 1:
                        return best
        return best

    # -- recursion -----------------------------------------------------------

    def node(self) -> bool:
        st, wg, opts = self.stats, self.wg, self.opts
        st.nodes_visited += 1
        if opts.node_limit is not None and st.nodes_visited > opts.node_limit:
            raise NodeLimitExceeded
        if self.k < 0:
            st.branches_aborted += 1
            return False
        if not wg.live:
            return True
        entry = self.checkpoint()
        if opts.inner_kernel:
            red = Reducer(wg, self.k, self.cemented)
            ok = red.run(extra_rules=True, drop_vertices=False)
            for v in red.forced:
                self.deleted.append(v)
            self.k = red.k
            st.rule_deletions += len(red.forced)
            if ok and wg.live:
                ok = not exceeds_safe_bounds(wg.num3, wg.num4, len(wg.marks_in_edges()), self.k)
            if not ok:
                st.branches_aborted += 1
                self.rollback(entry)
                return False
            if not wg.live:
                return True
        e = self.choose_edge()
        branches = [v for v in e if v not in self.cemented]
        if opts.domination and len(branches) > 1:
            alt = self.domination_branches(len(branches))
            if alt is not None:
                branches = alt
        for n, v in enumerate(branches, 1):
            cp = self.checkpoint()
            self.delete(v)
            if self.node():
                return True
            self.rollback(cp)
            if not opts.cement or n == len(branches):
                continue
            deleted_before = len(self.deleted)
            if not self.cement(v):
                st.branches_aborted += 1
                self.rollback(entry)
                return False
            if len(self.deleted) > deleted_before:
                # forced deletions reshaped the graph: re-enter on the new state
                if self.node():
                    return True
                self.rollback(entry)
                return False
        self.rollback(entry)
        return False


def solve_parameterized(
    inst: DeletionInstance, opts: SearchOptions = SearchOptions()
) -> tuple[Optional[frozenset[int]], SearchStats]:
    """Find at most ``inst.budget`` further marks whose deletion leaves no edge.

    Returns the full deletion set (including ``inst.solution``) or None.
    """
    s = _Search(inst, opts)
    if inst.cemented & inst.solution:
        return None, s.stats
    if inst.cemented and not s.cement_all(inst.cemented):
        s.stats.nodes_visited += 1
        s.stats.branches_aborted += 1
        return None, s.stats
    if s.node():
        return frozenset(s.base_solution | set(s.deleted)), s.stats
    return None, s.stats


def choose_branching_edge(inst: DeletionInstance) -> Edge:
    """Edge with fewest non-cemented marks; 3-edges, then lexicographic order, win ties."""
    if not inst.graph.edges:
        raise ValueError("graph has no edges to branch on")
    cem = inst.cemented
    return min(inst.graph.edges, key=lambda e: (sum(1 for v in e if v not in cem), len(e), e))


def cement_and_propagate(inst: DeletionInstance, v: int) -> Optional[DeletionInstance]:
    """Cement ``v`` on top of ``inst.cemented``; None if the branch must be abandoned.

    Every mark that would complete a conflict using only cemented marks is
    moved into the solution and charged to the budget.
    """
    s = _Search(inst, SearchOptions())
    if v in inst.solution or not s.cement_all(set(inst.cemented) | {v}):
        return None
    return DeletionInstance(
        graph=s.wg.freeze(),
        budget=s.k,
        cemented=frozenset(s.cemented),
        solution=frozenset(s.base_solution | set(s.deleted)),
    )


def find_dominating_vertex(h: CharacteristicHypergraph) -> Optional[tuple[int, int]]:
    """First pair (v, u), by ascending u then v, with v in every edge containing u."""
    for u in h.vertices:
        inc = h.incidence[u]
        if not inc:
            continue
        common = set(inc[0])
        for e in inc[1:]:
            common.intersection_update(e)
        common.discard(u)
        if common:
            return min(common), u
    return None
