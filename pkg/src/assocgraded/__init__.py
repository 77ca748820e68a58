"""Hilbert functions and associated graded invariants for semigroup rings,
monomial ideals and Artinian hypersurface modules."""

__version__ = "0.1.0"
