"""Exact construction and verification of degree-6 Del Pezzo surface data.

Thin wrapper over the C++ core. All values cross the boundary as exact
rational strings ("p/q") or JSON text; no floating point is involved.
"""

from ._dp6 import (
    Dp6Error,
    collinear,
    construct,
    cremona,
    decompose3,
    fixture,
    frame_map,
    picard_report,
    selftest,
    verify,
    w_basis,
)

__all__ = [
    "Dp6Error",
    "collinear",
    "construct",
    "cremona",
    "decompose3",
    "fixture",
    "frame_map",
    "picard_report",
    "selftest",
    "verify",
    "w_basis",
]

__version__ = "1.0.0"
