"""Instance generators shared by the benchmark harness and the tests."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .ruler import Ruler
from .satreduce import AntimonotoneFormula


def consecutive_rulers(max_n: int, min_n: int = 0) -> list[Ruler]:
    """{0..n} for min_n <= n <= max_n."""
    return [Ruler(range(n + 1)) for n in range(min_n, max_n + 1)]


def random_rulers(count: int, max_marks: int, span: int, seed: int = 0,
                  min_marks: int = 1) -> list[Ruler]:
    """``count`` rulers with min_marks..max_marks marks drawn from {0..span}."""
    rng = random.Random(seed)
    max_marks = min(max_marks, span + 1)
    return [Ruler(rng.sample(range(span + 1), rng.randint(min_marks, max_marks)))
            for _ in range(count)]


def all_formulas(max_vars: int, max_clauses: int) -> Iterator[AntimonotoneFormula]:
    """Every antimonotone 2-CNF on 1..n variables (n <= max_vars) with at most
    ``max_clauses`` distinct clauses, clauses in lexicographic order."""
    for n in range(1, max_vars + 1):
        possible = list(combinations(range(1, n + 1), 2))
        for m in range(0, min(max_clauses, len(possible)) + 1):
            for cl in combinations(possible, m):
                yield AntimonotoneFormula(n, cl)
