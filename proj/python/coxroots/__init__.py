"""Reduced words, small roots and the roots-and-chips game for Coxeter graphs."""

from ._coxroots import (
    CoxeterGraph,
    GamePosition,
    Verdict,
    bicoloured_word,
    catalog,
    check_speyer,
    explore,
    find_affine_witness,
    fire,
    has_intervening_neighbours,
    initial_position,
    is_reduced,
    legal_moves,
    parse_graph,
    reduce_fully,
    small_roots,
)

__all__ = [
    "CoxeterGraph",
    "GamePosition",
    "Verdict",
    "bicoloured_word",
    "catalog",
    "check_speyer",
    "explore",
    "find_affine_witness",
    "fire",
    "has_intervening_neighbours",
    "initial_position",
    "is_reduced",
    "legal_moves",
    "parse_graph",
    "reduce_fully",
    "small_roots",
]
