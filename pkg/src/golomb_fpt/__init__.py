"""Exact fixed-parameter tools for maximum Golomb subrulers."""

from .hypergraph import CharacteristicHypergraph, build_improved, build_naive
from .kernel import KernelResult, kernelize
from .oracle import brute_force_max_subruler, brute_force_min_deletions
from .ruler import Ruler, canonical_form, is_golomb, is_perfect, length
from .search import DeletionInstance, SearchOptions, SearchStats, solve_parameterized
from .solver import SolveOutcome, find_max_golomb_subruler, max_marks_for_length

__all__ = [
    "CharacteristicHypergraph",
    "DeletionInstance",
    "KernelResult",
    "Ruler",
    "SearchOptions",
    "SearchStats",
    "SolveOutcome",
    "brute_force_max_subruler",
    "brute_force_min_deletions",
    "build_improved",
    "build_naive",
    "canonical_form",
    "find_max_golomb_subruler",
    "is_golomb",
    "is_perfect",
    "kernelize",
    "length",
    "max_marks_for_length",
    "solve_parameterized",
]
