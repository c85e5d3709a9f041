"""Quaternary linear codes with one-dimensional Hermitian hull.

Core objects: GF(4) linear algebra (gf4), the LinearCode abstraction (code),
Hermitian hull reports (hull), explicit constructions and the fixture corpus
(construct), classical and closed-form distance bounds (bounds), exhaustive
and randomized searches (search), and EAQECC parameter derivation (eaqecc).
"""

from .code import LinearCode, WeightDistribution
from .construct import MultiplicityVector, fixture, simplex
from .hull import HullReport, hull_dim, hull_report

__all__ = [
    "LinearCode",
    "WeightDistribution",
    "MultiplicityVector",
    "HullReport",
    "fixture",
    "simplex",
    "hull_dim",
    "hull_report",
]

__version__ = "0.1.0"
