"""Brute-force ground truth for maximum Golomb subrulers.

Works from the definition alone (all pairwise differences distinct) and
shares no code with the hypergraph or search modules, so it can act as an
independent check on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import OracleSizeError

MAX_ORACLE_MARKS = 20


@dataclass(frozen=True)
class OracleResult:
    max_size: int
    witness: tuple[int, ...]
    instances_explored: int


def brute_force_max_subruler(r: Iterable[int]) -> OracleResult:
    """Largest subset with pairwise-distinct differences.

    Tries target sizes from |r| downwards; for each size, subsets are grown in
    lexicographic order and a partial subset is dropped the moment one of its
    differences repeats.
    """
    marks = sorted(set(int(m) for m in r))
    n = len(marks)
    if n > MAX_ORACLE_MARKS:
        raise OracleSizeError(f"oracle limited to {MAX_ORACLE_MARKS} marks, got {n}")
    explored = 0

    def grow(start: int, chosen: list[int], diffs: set[int], target: int):
        nonlocal explored
        explored += 1
        if len(chosen) == target:
            return list(chosen)
        for idx in range(start, n - (target - len(chosen)) + 1):
            m = marks[idx]
            new = [m - c for c in chosen]
            if len(set(new)) < len(new) or not diffs.isdisjoint(new):
                continue
            chosen.append(m)
            diffs.update(new)
            found = grow(idx + 1, chosen, diffs, target)
            chosen.pop()
            diffs.difference_update(new)
            if found is not None:
                return found
        return None

    for target in range(n, -1, -1):
        found = grow(0, [], set(), target)
        if found is not None:
            return OracleResult(target, tuple(found), explored)
    raise AssertionError("unreachable: the empty subset is always Golomb")


def brute_force_min_deletions(r: Iterable[int]) -> int:
    marks = set(r)
    return len(marks) - brute_force_max_subruler(marks).max_size
