"""Hard instances from antimonotone 2-CNF formulas.

An independent-set instance becomes a formula with one clause (not u or not v)
per graph edge. A formula with n variables and m clauses becomes a ruler with
one mark 2^((m+2)i) per variable x_i and one mark 2^((m+2)i) + 2^j - 1 per
occurrence of x_i in clause j. The ruler has a Golomb subruler with k + 2m
marks exactly when the formula has a satisfying assignment with k true
variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .errors import FormulaError, MagnitudeError
from .hypergraph import build_improved
from .ruler import Ruler

MARK_LIMIT_BITS = 63


@dataclass(frozen=True)
class AntimonotoneFormula:
    """Conjunction of clauses (not x_i or not x_j); variables numbered from 1."""

    num_vars: int
    clauses: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.num_vars < 0:
            raise FormulaError("negative variable count")
        seen = set()
        norm = []
        for c in self.clauses:
            i, j = c
            if i == j:
                raise FormulaError(f"clause repeats variable {i}")
            if not (1 <= i <= self.num_vars and 1 <= j <= self.num_vars):
                raise FormulaError(f"clause {c} uses a variable outside 1..{self.num_vars}")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise FormulaError(f"duplicate clause on variables {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "clauses", tuple(norm))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, true_vars: Iterable[int]) -> bool:
        t = set(true_vars)
        return all(not (i in t and j in t) for i, j in self.clauses)

    def max_true(self) -> int:
        """Most variables a satisfying assignment can set true (exhaustive)."""
        vs = range(1, self.num_vars + 1)
        for size in range(self.num_vars, -1, -1):
            if any(self.satisfied_by(s) for s in combinations(vs, size)):
                return size
        return 0

    def satisfiable_with(self, k: int) -> bool:
        return self.max_true() >= k


def formula_from_graph(edges: Iterable[tuple[int, int]], num_vertices: int) -> AntimonotoneFormula:
    """phi(G): one clause per edge of a simple graph on vertices 1..num_vertices."""
    es = []
    seen = set()
    for u, v in edges:
        if u == v:
            raise FormulaError(f"self-loop at {u}")
        key = frozenset((u, v))
        if key in seen:
            raise FormulaError(f"parallel edge {u}-{v}")
        seen.add(key)
        es.append((u, v))
    return AntimonotoneFormula(num_vertices, tuple(es))


def parse_formula(text: str) -> AntimonotoneFormula:
    header = None
    clauses = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("#", "c ")) or line == "c":
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "wcnf2":
                raise FormulaError(f"bad header: {line!r}")
            header = (int(parts[2]), int(parts[3]))
            continue
        if header is None:
            raise FormulaError("clause before 'p wcnf2' header")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise FormulaError(f"bad clause line: {line!r}")
        clauses.append((int(parts[0]), int(parts[1])))
    if header is None:
        raise FormulaError("missing 'p wcnf2 <n> <m>' header")
    if len(clauses) != header[1]:
        raise FormulaError(f"header announces {header[1]} clauses, found {len(clauses)}")
    return AntimonotoneFormula(header[0], tuple(clauses))


def format_formula(f: AntimonotoneFormula) -> str:
    lines = [f"p wcnf2 {f.num_vars} {f.m}"] + [f"{i} {j}" for i, j in f.clauses]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReducedInstance:
    ruler: Ruler
    target_size: int
    v_marks: tuple[int, ...]
    clause_marks: dict[int, tuple[int, ...]] = field(hash=False)
    formula: AntimonotoneFormula = field(default=None, hash=False)
    k: int = 0

    def to_text(self) -> str:
        """Ruler file with the reduction metadata as comment lines."""
        lines = [
            f"# target-size: {self.target_size}",
            f"# k: {self.k}",
            f"# variable-marks: {' '.join(map(str, self.v_marks))}",
        ]
        for i, cs in sorted(self.clause_marks.items()):
            lines.append(f"# clause-marks x{i}: {' '.join(map(str, cs))}")
        lines.append(self.ruler.to_text())
        return "\n".join(lines) + "\n"


def reduce_to_ruler(f: AntimonotoneFormula, k: int) -> ReducedInstance:
    m, n = f.m, f.num_vars
    if (m + 2) * n > MARK_LIMIT_BITS - 1:
        raise MagnitudeError(
            f"(m+2)*n = {(m + 2) * n} > {MARK_LIMIT_BITS - 1}: marks would not fit below 2^63"
        )
    base = {i: 1 << ((m + 2) * i) for i in range(1, n + 1)}
    clause_marks: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
    for j, (a, b) in enumerate(f.clauses, start=1):
        for i in (a, b):
            clause_marks[i].append(base[i] + (1 << j) - 1)
    v_marks = tuple(base[i] for i in range(1, n + 1))
    marks = list(v_marks) + [c for cs in clause_marks.values() for c in cs]
    return ReducedInstance(
        ruler=Ruler(marks),
        target_size=k + 2 * m,
        v_marks=v_marks,
        clause_marks={i: tuple(sorted(cs)) for i, cs in clause_marks.items()},
        formula=f,
        k=k,
    )


def verify_reduction_structure(inst: ReducedInstance) -> bool:
    """Every conflict is a clause: a 4-edge {v_i, v_j, c_i, c_j} for a clause
    on x_i, x_j, and two conflicts meet only in variable marks."""
    owner_v = {v: i for i, v in enumerate(inst.v_marks, start=1)}
    owner_c = {c: i for i, cs in inst.clause_marks.items() for c in cs}
    clause_pairs = set(inst.formula.clauses) if inst.formula is not None else None
    h = build_improved(inst.ruler)
    for e in h.edges:
        if len(e) != 4:
            return False
        vs = sorted(owner_v[x] for x in e if x in owner_v)
        cs = sorted(owner_c[x] for x in e if x in owner_c)
        if len(vs) != 2 or cs != vs:
            return False
        if clause_pairs is not None and tuple(vs) not in clause_pairs:
            return False
    vset = set(inst.v_marks)
    for e, g in combinations(h.edges, 2):
        if not (set(e) & set(g)) <= vset:
            return False
    if clause_pairs is not None and h.num_edges != len(clause_pairs):
        return False
    return True


def generate_beta_ruler(count: int, start: int = 1) -> Ruler:
    """Powers of two {2^i : start <= i < start + count}."""
    if start + count - 1 >= MARK_LIMIT_BITS:
        raise MagnitudeError("powers of two beyond 2^62 requested")
    return Ruler(1 << i for i in range(start, start + count))


def generate_beta_approx(d: int, f: Callable[[int], int], count: int) -> Ruler:
    """Perturbed powers {2^(d*i) + f(i) : 1 <= i <= count}, 0 <= f(i) <= 2^d."""
    if d < 2:
        raise ValueError("d must be at least 2")
    if d * count >= MARK_LIMIT_BITS:
        raise MagnitudeError(f"2^(d*count) = 2^{d * count} exceeds the 2^63 guard")
    marks = []
    for i in range(1, count + 1):
        off = f(i)
        if not 0 <= off <= 1 << d:
            raise ValueError(f"f({i}) = {off} outside [0, 2^{d}]")
        marks.append((1 << (d * i)) + off)
    return Ruler(marks)
