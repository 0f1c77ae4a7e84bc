"""Exact computations tying the E8 lattice to degree-1 del Pezzo surfaces
and uniquely trigonal genus-4 curves with a marked ramification point."""

__version__ = "0.1.0"
