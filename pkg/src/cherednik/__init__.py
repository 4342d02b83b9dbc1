"""Exact computations for infinitesimal Cherednik algebras of gl_n and sp_2n."""

__version__ = "0.1.0"

from .poly import MultiPoly
from .pbw import DeformationGl, PBWAlgebra, PBWElement, algebra
from .poisson_sp import DeformationSp

__all__ = ["MultiPoly", "DeformationGl", "DeformationSp", "PBWAlgebra", "PBWElement", "algebra", "__version__"]
