"""Catalan functions, k-Schur functions and their positive expansions over Z[t]."""

from .algebra import SymFun, TPoly, mul, partition, perp, pieri_h, specialize_t, straighten_schur
from .catalan import catalan_function, downpath_expand
from .kschur import catalan_kostka, kschur, to_kschur_basis
from .rootideal import RootIdeal, delta_k, make_root_ideal, uplus

__all__ = [
    "RootIdeal",
    "SymFun",
    "TPoly",
    "catalan_function",
    "catalan_kostka",
    "delta_k",
    "downpath_expand",
    "kschur",
    "make_root_ideal",
    "mul",
    "partition",
    "perp",
    "pieri_h",
    "specialize_t",
    "straighten_schur",
    "to_kschur_basis",
    "uplus",
]
