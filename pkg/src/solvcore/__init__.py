"""Word, power and conjugacy problems in wreath products and free solvable groups."""
from .groups import (FiniteCyclic, FreeAbelian, FreeSolvable, Wreath, cp, cross_checking, csp,
                     order, parse_group, pp, wp)
from .words import Word, parse_word

__version__ = "0.1.0"

__all__ = [
    "FiniteCyclic", "FreeAbelian", "FreeSolvable", "Wreath", "Word",
    "wp", "cp", "csp", "pp", "order", "parse_group", "parse_word", "cross_checking",
]
