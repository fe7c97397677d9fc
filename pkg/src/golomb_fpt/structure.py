"""Validators for substructures that never occur in characteristic hypergraphs.

small hand      more than three 3-edges through one pair of marks
large hand      more than three 4-edges through one triple of marks
rotor           three 3-edges on the same four marks
scissors        4-edges {a,b,c,d}, {a,b,c,e} without a 3-edge {d,e,m}, m in {a,b,c}
bird of prey    three 4-edges through a pair {a,b} with no further edge among
                their other marks

Counting comes first; pattern matching only runs on the few candidates the
counts single out.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .hypergraph import CharacteristicHypergraph

Witness = tuple[int, ...]


@dataclass
class StructureReport:
    max_3edges_per_pair: int
    max_4edges_per_triple: int
    violations: list[tuple[str, Witness]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_text(self) -> str:
        lines = [
            f"max-3edges-per-pair: {self.max_3edges_per_pair}",
            f"max-4edges-per-triple: {self.max_4edges_per_triple}",
        ]
        for name in PATTERNS:
            hits = [w for n, w in self.violations if n == name]
            lines.append(f"{name}: {'fail' if hits else 'pass'}")
            lines += [f"  witness: {' '.join(map(str, w))}" for w in hits[:10]]
        lines.append(f"violations: {len(self.violations)}")
        return "\n".join(lines) + "\n"


def _by_subset(edges, size, r):
    groups = defaultdict(list)
    for e in edges:
        if len(e) == size:
            for s in combinations(e, r):
                groups[s].append(e)
    return groups


def small_hand_violations(h: CharacteristicHypergraph) -> list[Witness]:
    return [p for p, es in _by_subset(h.edges, 3, 2).items() if len(es) > 3]


def large_hand_violations(h: CharacteristicHypergraph) -> list[Witness]:
    return [t for t, es in _by_subset(h.edges, 4, 3).items() if len(es) > 3]


def rotor_violations(h: CharacteristicHypergraph) -> list[Witness]:
    edges = h.edge_set()
    found = set()
    for es in _by_subset(h.edges, 3, 2).values():
        for e, f in combinations(es, 2):
            quad = tuple(sorted(set(e) | set(f)))
            if quad in found:
                continue
            if sum(1 for t in combinations(quad, 3) if t in edges) >= 3:
                found.add(quad)
    return sorted(found)


def scissors_violations(h: CharacteristicHypergraph) -> list[Witness]:
    edges = h.edge_set()
    out = []
    for t, es in _by_subset(h.edges, 4, 3).items():
        for e, f in combinations(es, 2):
            (d,) = set(e) - set(t)
            (x,) = set(f) - set(t)
            if not any(tuple(sorted((d, x, m))) in edges for m in t):
                out.append(tuple(sorted(set(e) | set(f))))
    return out


def _has_edge_within(marks, edges) -> bool:
    ms = sorted(marks)
    return any(s in edges for r in (3, 4) for s in combinations(ms, r))


def bird_of_prey_violations(h: CharacteristicHypergraph) -> list[Witness]:
    edges = h.edge_set()
    out = []
    for pair, es in _by_subset(h.edges, 4, 2).items():
        if len(es) < 3:
            continue
        rest = [set(e) - set(pair) for e in es]
        # unlinked[i]: bitmask of j whose leftover marks do not form an edge with i's
        unlinked = [0] * len(rest)
        for i, j in combinations(range(len(rest)), 2):
            if tuple(sorted(rest[i] | rest[j])) not in edges:
                unlinked[i] |= 1 << j
                unlinked[j] |= 1 << i
        for i, j in combinations(range(len(rest)), 2):
            if not unlinked[i] >> j & 1:
                continue
            common = unlinked[i] & unlinked[j] & ~((1 << (j + 1)) - 1)
            while common:
                l = (common & -common).bit_length() - 1
                common &= common - 1
                union = rest[i] | rest[j] | rest[l]
                if not _has_edge_within(union, edges):
                    out.append(tuple(sorted(union | set(pair))))
    return out


PATTERNS = {
    "small-hand": small_hand_violations,
    "large-hand": large_hand_violations,
    "rotor": rotor_violations,
    "scissors": scissors_violations,
    "bird-of-prey": bird_of_prey_violations,
}


def check_small_hand(h: CharacteristicHypergraph) -> bool:
    return not small_hand_violations(h)


def check_large_hand(h: CharacteristicHypergraph) -> bool:
    return not large_hand_violations(h)


def check_rotor(h: CharacteristicHypergraph) -> bool:
    return not rotor_violations(h)


def check_scissors(h: CharacteristicHypergraph) -> bool:
    return not scissors_violations(h)


def check_bird_of_prey(h: CharacteristicHypergraph) -> bool:
    return not bird_of_prey_violations(h)


def structure_report(h: CharacteristicHypergraph) -> StructureReport:
    pairs = _by_subset(h.edges, 3, 2)
    triples = _by_subset(h.edges, 4, 3)
    violations = [(name, w) for name, fn in PATTERNS.items() for w in fn(h)]
    return StructureReport(
        max_3edges_per_pair=max((len(v) for v in pairs.values()), default=0),
        max_4edges_per_triple=max((len(v) for v in triples.values()), default=0),
        violations=violations,
    )
