"""The characteristic hypergraph of a ruler.

Vertices are marks. Every pair of mark pairs measuring the same distance
becomes an edge on the union of the marks involved: four vertices in
general, three when the pairs share a mark (the shared mark is then the
midpoint of the other two). A ruler is Golomb exactly when its graph has
no edges.
"""

from __future__ import annotations

from collections import defaultdict
from itertools import combinations, permutations
from typing import Iterable, Mapping

from .errors import GolombError
from .ruler import Ruler, as_ruler

Edge = tuple[int, ...]  # sorted, 3 or 4 distinct marks


def make_edge(vertices: Iterable[int]) -> Edge:
    e = tuple(sorted(set(vertices)))
    if len(e) not in (3, 4):
        raise GolombError(f"edge must have 3 or 4 distinct vertices, got {e}")
    return e


class CharacteristicHypergraph:
    """Immutable simple 3,4-hypergraph with an eagerly built incidence index.

    Also usable for arbitrary 3,4-hypergraphs (e.g. test fixtures), which is
    why construction does not check that edges are real ruler conflicts.
    """

    __slots__ = ("vertices", "edges", "incidence")

    def __init__(self, vertices: Iterable[int], edges: Iterable[Iterable[int]]):
        es = sorted({make_edge(e) for e in edges})
        vs = set(vertices)
        for e in es:
            if not vs.issuperset(e):
                raise GolombError(f"edge {e} uses vertices outside the vertex set")
        self.vertices: tuple[int, ...] = tuple(sorted(vs))
        self.edges: tuple[Edge, ...] = tuple(es)
        inc: dict[int, list[Edge]] = {v: [] for v in self.vertices}
        for e in es:
            for v in e:
                inc[v].append(e)
        self.incidence: Mapping[int, tuple[Edge, ...]] = {
            v: tuple(lst) for v, lst in inc.items()
        }

    def __repr__(self) -> str:
        return f"<CharacteristicHypergraph vertices={len(self.vertices)} edges={len(self.edges)}>"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CharacteristicHypergraph):
            return self.vertices == other.vertices and self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def edges_of_size(self, size: int) -> list[Edge]:
        return [e for e in self.edges if len(e) == size]

    def degree(self, v: int) -> int:
        return len(self.incidence.get(v, ()))

    def marks_in_edges(self) -> set[int]:
        return {v for e in self.edges for v in e}

    def delete(self, marks: Iterable[int]) -> "CharacteristicHypergraph":
        """The induced subgraph on the remaining vertices."""
        drop = set(marks)
        return CharacteristicHypergraph(
            (v for v in self.vertices if v not in drop),
            (e for e in self.edges if drop.isdisjoint(e)),
        )

    def induced(self, keep: Iterable[int]) -> "CharacteristicHypergraph":
        keep = set(keep) & set(self.vertices)
        return CharacteristicHypergraph(keep, (e for e in self.edges if keep.issuperset(e)))

    def audit(self) -> bool:
        """Check that the incidence index matches the edge set."""
        expected: dict[int, set[Edge]] = {v: set() for v in self.vertices}
        for e in self.edges:
            for v in e:
                if v not in expected:
                    return False
                expected[v].add(e)
        if set(self.incidence) != set(expected):
            return False
        return all(
            set(self.incidence[v]) == expected[v] and len(self.incidence[v]) == len(expected[v])
            for v in self.vertices
        )

    def dump(self) -> str:
        lines = [f"vertices: {self.num_vertices} edges: {self.num_edges}"]
        lines += [" ".join(str(v) for v in e) for e in self.edges]
        return "\n".join(lines) + "\n"


def build_naive(r: Ruler | Iterable[int]) -> CharacteristicHypergraph:
    """Scan every ordered 4- and 3-tuple of distinct marks; O(|R|^4)."""
    marks = as_ruler(r).marks
    edges: set[Edge] = set()
    for a, b, c, d in permutations(marks, 4):
        if abs(a - b) == abs(c - d):
            edges.add(tuple(sorted((a, b, c, d))))
    for a, b, c in permutations(marks, 3):
        if abs(a - b) == abs(b - c):
            edges.add(tuple(sorted((a, b, c))))
    return CharacteristicHypergraph(marks, edges)


def build_improved(r: Ruler | Iterable[int]) -> CharacteristicHypergraph:
    """Distance-indexed construction in O(|R|^3).

    Only distances up to half the ruler length can generate edges, since any
    conflict on a longer distance overlaps and is also witnessed by a shorter,
    non-overlapping one.
    """
    marks = as_ruler(r).marks
    if len(marks) < 3:
        return CharacteristicHypergraph(marks, ())
    half = (marks[-1] - marks[0]) // 2
    by_distance: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for x, i in enumerate(marks):
        for j in marks[x + 1:]:
            if j - i > half:
                break
            by_distance[j - i].append((i, j))
    edges: set[Edge] = set()
    for x, i in enumerate(marks):
        for j in marks[x + 1:]:
            if j - i > half:
                break
            for k, l in by_distance[j - i]:
                if j <= k:
                    # k == j collapses to the midpoint triple {i, j, l}
                    edges.add(tuple(sorted({i, j, k, l})))
    return CharacteristicHypergraph(marks, edges)


def is_golomb_via_graph(r: Ruler | Iterable[int]) -> bool:
    return build_improved(r).num_edges == 0


def is_conflict(edge: Iterable[int]) -> bool:
    """Whether the marks of ``edge`` really form a repeated-distance conflict."""
    e = sorted(edge)
    if len(e) == 3:
        return e[1] - e[0] == e[2] - e[1]
    if len(e) == 4:
        # the only pairing of sorted a<b<c<d that can match is (a,b)/(c,d)
        return e[1] - e[0] == e[3] - e[2]
    return False


def generating_distances(edge: Iterable[int]) -> set[int]:
    """Distances measured twice inside ``edge`` by two non-overlapping mark pairs."""
    e = sorted(edge)
    out = set()
    for (p, q), (s, t) in combinations(combinations(e, 2), 2):
        if q - p == t - s and len({p, q, s, t}) == len(e) and (q <= s or t <= p):
            out.add(q - p)
    return out


def consecutive_edge_lower_bound(n: int) -> int:
    """Count non-overlapping placements of two equal-distance pairs on {0..n}.

    Each placement is a distinct edge of the graph of {0, ..., n}, so this is a
    lower bound on its edge count and grows like n^3.
    """
    if n < 2 or n % 2:
        raise ValueError(f"n must be even and >= 2, got {n}")
    total = 0
    for delta in range(1, n // 2 + 1):
        for j in range(0, n - 2 * delta + 1):
            for k in range(j + delta, n - delta + 1):
                total += 1
    return total
