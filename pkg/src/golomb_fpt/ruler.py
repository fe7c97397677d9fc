"""Rulers and the Golomb predicate."""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DegenerateRulerError, MagnitudeError, RulerFormatError

U64_MAX = (1 << 64) - 1


class Ruler:
    """An immutable, strictly increasing set of nonnegative integer marks.

    Input order does not matter; marks are sorted on construction. Repeated
    marks are rejected rather than merged.
    """

    __slots__ = ("_marks",)

    def __init__(self, marks: Iterable[int] = ()):
        ms = sorted(int(m) for m in marks)
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise RulerFormatError(f"duplicate mark {a}")
        if ms and ms[0] < 0:
            raise RulerFormatError(f"negative mark {ms[0]}")
        if ms and ms[-1] > U64_MAX:
            raise MagnitudeError(f"mark {ms[-1]} does not fit in 64 bits")
        self._marks = tuple(ms)

    @classmethod
    def range(cls, n: int) -> "Ruler":
        """The consecutive ruler {0, ..., n-1}."""
        return cls(range(n))

    @property
    def marks(self) -> tuple[int, ...]:
        return self._marks

    def __iter__(self) -> Iterator[int]:
        return iter(self._marks)

    def __len__(self) -> int:
        return len(self._marks)

    def __contains__(self, m: object) -> bool:
        return m in set(self._marks)

    def __getitem__(self, i):
        return self._marks[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Ruler):
            return self._marks == other._marks
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._marks)

    def __repr__(self) -> str:
        return f"Ruler({list(self._marks)})"

    def without(self, marks: Iterable[int]) -> "Ruler":
        drop = set(marks)
        return Ruler(m for m in self._marks if m not in drop)

    def to_text(self) -> str:
        return " ".join(str(m) for m in self._marks)


def as_ruler(r: Ruler | Iterable[int]) -> Ruler:
    return r if isinstance(r, Ruler) else Ruler(r)


def differences(r: Ruler | Iterable[int]) -> list[int]:
    """All pairwise differences m_j - m_i, i < j (with repetitions)."""
    return [b - a for a, b in combinations(as_ruler(r).marks, 2)]


def is_golomb(r: Ruler | Iterable[int]) -> bool:
    seen: set[int] = set()
    for d in differences(r):
        if d in seen:
            return False
        seen.add(d)
    return True


def canonical_form(r: Ruler | Iterable[int]) -> Ruler:
    r = as_ruler(r)
    if not r.marks:
        raise DegenerateRulerError("canonical form of an empty ruler")
    lo = r.marks[0]
    return Ruler(m - lo for m in r.marks)


def length(r: Ruler | Iterable[int]) -> int:
    r = as_ruler(r)
    if not r.marks:
        raise DegenerateRulerError("length of an empty ruler")
    return r.marks[-1] - r.marks[0]


def is_perfect(r: Ruler | Iterable[int]) -> bool:
    """True iff every distance 1..length(r) is measured by some pair."""
    r = as_ruler(r)
    if len(r) < 2:
        raise DegenerateRulerError("perfect ruler needs at least two marks")
    measured = set(differences(r))
    return all(d in measured for d in range(1, length(r) + 1))


_RANGE = re.compile(r"^range:(\d+)$")


def parse_ruler(text: str) -> Ruler:
    """Parse whitespace-separated decimal marks; lines starting with '#' are comments."""
    marks = []
    for line in text.splitlines():
        if line.lstrip().startswith("#"):
            continue
        for tok in line.split():
            if not tok.isdigit():
                raise RulerFormatError(f"not a nonnegative integer: {tok!r}")
            marks.append(int(tok))
    return Ruler(marks)


def load_ruler(source: str) -> Ruler:
    """Load a ruler from a file path, or expand the ``range:N`` shorthand."""
    m = _RANGE.match(source)
    if m:
        return Ruler.range(int(m.group(1)))
    with open(source) as fh:
        return parse_ruler(fh.read())


def format_ruler(r: Ruler) -> str:
    return r.to_text() + "\n"
