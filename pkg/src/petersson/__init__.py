"""Exact arithmetic for Jacobi and Siegel Eisenstein series of degree two,
representation numbers of even unimodular lattices, and numeric checks of
invariant differential operators.
"""

from .errors import InvariantError, LatticeError, PrecisionError, ResourceCapError
from .jacexp import JacExp
from .lattice import BinQF, LatticeGram
from .qexp import QExp

__version__ = "0.1.0"

__all__ = [
    "BinQF",
    "InvariantError",
    "JacExp",
    "LatticeError",
    "LatticeGram",
    "PrecisionError",
    "QExp",
    "ResourceCapError",
]
