"""Exact enumeration of rook placements in Young diagrams and related objects."""

from .polyring import ONE, P, Q, Y, ZERO, LaurentPoly, NonDivisible, exact_div
from .rookmodel import RookPlacement, YoungShape, crosses, t_brute, t_full, t_rec

__all__ = [
    "ONE",
    "P",
    "Q",
    "Y",
    "ZERO",
    "LaurentPoly",
    "NonDivisible",
    "RookPlacement",
    "YoungShape",
    "crosses",
    "exact_div",
    "t_brute",
    "t_full",
    "t_rec",
]

__version__ = "0.1.0"
