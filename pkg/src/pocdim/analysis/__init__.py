"""Dimension classification, lemma checkers and the tail-biting extraction pipeline."""

from .classify import R555_UPPER, DimBound, classify_dimension
from .extraction import (
    EdgeColoring,
    crossing_color,
    extract_tail_biting_clique,
    mono_clique,
    random_tournament,
    tournament_ham_path,
)
from .lemmas import (
    HarnessReport,
    Verdict,
    check_diamond_lemma,
    check_hbar_lemma,
    diamond_corner_status,
    harness_corner,
    harness_diamond,
    harness_hbar,
    harness_paths,
    harness_transitivity,
)
from .search import search_representation

__all__ = [
    "R555_UPPER",
    "DimBound",
    "EdgeColoring",
    "HarnessReport",
    "Verdict",
    "check_diamond_lemma",
    "check_hbar_lemma",
    "classify_dimension",
    "crossing_color",
    "diamond_corner_status",
    "extract_tail_biting_clique",
    "harness_corner",
    "harness_diamond",
    "harness_hbar",
    "harness_paths",
    "harness_transitivity",
    "mono_clique",
    "random_tournament",
    "search_representation",
    "tournament_ham_path",
]
