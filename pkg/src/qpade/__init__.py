"""Exact Padé-method construction of q-Painlevé VI and q-Painlevé E6 data.

Everything in the exact core is a :class:`fractions.Fraction`; identities are
checked by exact equality, never by tolerance.
"""
from __future__ import annotations

from .exact import Poly, det_exact, frac_str, nullspace
from .qkernel import ParamSet, qpoch, sample_params
from .pade import PadePair, pade_approx_series, pade_interpolate, solve_e6
from .verify import CheckReport

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "PadePair",
    "ParamSet",
    "Poly",
    "det_exact",
    "frac_str",
    "nullspace",
    "pade_approx_series",
    "pade_interpolate",
    "qpoch",
    "sample_params",
    "solve_e6",
]
