"""Exact-arithmetic Hilbert series, embeddings and defining quadrics of
weighted homogeneous F4 varieties, with polarized 3-fold constructions."""

__version__ = "0.1.0"

from . import equations, hilbert, lattice, laurent, reps, variety, weyl  # noqa: F401
