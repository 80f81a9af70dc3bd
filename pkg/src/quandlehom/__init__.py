"""Quandle and rack homology over the integers, with knot diagram colorings."""

from .chains import Chain, basis, boundary, boundary_in, project
from .homology import class_of, induced_map, is_boundary, is_cycle, les_boundary_map, les_check
from .quandle import FiniteQuandle, QuandleHom, alexander, dihedral, qs5, qs6, trivial, verify_axioms

__version__ = "0.1.0"
