"""symdirac: exact Weyl-algebra engine for symplectic Dirac operators.

Builds every named operator over Q(i), verifies the Lie-algebraic relations
among them (sl(2) triples, the two sp(2n,R) realisations, the u(n)
invariance algebra, the su(1,2) span), and computes exact kernel dimensions
on truncated polynomial-spinor spaces.
"""

from ._core import BACKEND
from .rational import GaussianRational
from .weyl import WeylOperator, commutator
from .operators import catalog

__version__ = "0.1.0"

__all__ = ["BACKEND", "GaussianRational", "WeylOperator", "commutator", "catalog"]
