"""Exact-arithmetic toolkit for g-vectors and G-matrices.

Builds finite-dimensional algebras from bound quivers (hereditary algebras,
Auslander algebras of truncated polynomial rings, generalized preprojective
algebras), computes g-vectors and G-matrices of tilting and support
tau-tilting objects and of 2-term silting complexes, and mechanically checks
the exact integer matrix identities relating them to Grothendieck-group
transfers, Cartan congruences, Coxeter conjugacy, matrix mutation, and
reflection-group representations.

All arithmetic is exact (arbitrary-precision integers and rationals); there
is no floating point anywhere in the library.
"""

__version__ = "0.1.0"

from .kernel import IMPLEMENTATION as KERNEL_IMPLEMENTATION  # noqa: F401
