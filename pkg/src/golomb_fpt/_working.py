"""Undo-logged mutable view of a characteristic hypergraph.

Kernelization, greedy heuristics and the search tree all delete vertices
from a private copy of the graph; the trail lets a search branch restore
exactly the state it started from.
"""

from __future__ import annotations

from .hypergraph import CharacteristicHypergraph, Edge


class WorkingGraph:
    def __init__(self, h: CharacteristicHypergraph):
        self.edges: list[Edge] = list(h.edges)
        self.present: set[int] = set(h.vertices)
        self.live: set[int] = set(range(len(self.edges)))
        # per-vertex live incident edge ids, split by edge size
        self.inc3: dict[int, set[int]] = {v: set() for v in h.vertices}
        self.inc4: dict[int, set[int]] = {v: set() for v in h.vertices}
        self.num3 = 0
        for i, e in enumerate(self.edges):
            idx = self.inc3 if len(e) == 3 else self.inc4
            if len(e) == 3:
                self.num3 += 1
            for v in e:
                idx[v].add(i)
        self._trail: list[tuple[int, list[int]]] = []

    @property
    def num_edges(self) -> int:
        return len(self.live)

    @property
    def num4(self) -> int:
        return len(self.live) - self.num3

    def degree(self, v: int) -> int:
        return len(self.inc3[v]) + len(self.inc4[v])

    def incident(self, v: int) -> list[int]:
        return [*self.inc3[v], *self.inc4[v]]

    def marks_in_edges(self) -> set[int]:
        return {v for v in self.present if self.inc3[v] or self.inc4[v]}

    def live_edges(self) -> list[Edge]:
        return sorted(self.edges[i] for i in self.live)

    def delete(self, v: int) -> None:
        removed = self.incident(v)
        for i in removed:
            e = self.edges[i]
            self.live.discard(i)
            idx = self.inc3 if len(e) == 3 else self.inc4
            if len(e) == 3:
                self.num3 -= 1
            for u in e:
                idx[u].discard(i)
        self.present.discard(v)
        self._trail.append((v, removed))

    def checkpoint(self) -> int:
        return len(self._trail)

    def rollback(self, mark: int) -> None:
        while len(self._trail) > mark:
            v, removed = self._trail.pop()
            self.present.add(v)
            for i in removed:
                e = self.edges[i]
                self.live.add(i)
                idx = self.inc3 if len(e) == 3 else self.inc4
                if len(e) == 3:
                    self.num3 += 1
                for u in e:
                    idx[u].add(i)

    def freeze(self) -> CharacteristicHypergraph:
        return CharacteristicHypergraph(self.present, (self.edges[i] for i in self.live))
