"""Cartan and Coxeter matrices, G/C/D-matrices, and tilting predicates."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    IntMatrix,
    RatMatrix,
    SingularMatrixError,
    is_row_sign_coherent,
)
from .modules import (
    ModuleError,
    ar_translate,
    dim_vector,
    ext1_dim,
    g_vector,
    hom_dim,
    minimal_presentation,
    projective_dimension_at_most_one,
    regular_module,
)


def cartan_matrix(algebra) -> IntMatrix:
    """Columns are the dimension vectors of the indecomposable projectives."""
    cols = [dim_vector(regular_module(algebra, v)) for v in range(algebra.n)]
    return IntMatrix.from_columns(cols)


@dataclass(frozen=True)
class CoxeterData:
    """The Coxeter matrix -C^t C^{-1} and the Euler-form matrix (C^{-1})^t."""

    phi: RatMatrix
    euler: RatMatrix

    @property
    def phi_int(self) -> IntMatrix:
        return self.phi.to_int()


def coxeter_matrix(algebra) -> CoxeterData:
    c = cartan_matrix(algebra)
    if c.det() == 0:
        raise SingularMatrixError(
            "Cartan matrix is singular; no Coxeter matrix exists"
        )
    c_inv = c.inverse()
    phi = -(c.transpose().to_rat() @ c_inv)
    return CoxeterData(phi=phi, euler=c_inv.transpose())


def euler_form(coxeter: CoxeterData, dim_m, dim_n):
    """Euler characteristic pairing <dim M, dim N> via (C^{-1})^t."""
    row = coxeter.euler.matvec(dim_n)
    return sum(a * b for a, b in zip(dim_m, row))


@dataclass(frozen=True)
class GMatrixData:
    """G-matrix of a tau-tilting pair plus its companion D-matrix."""

    matrix: IntMatrix
    d_matrix: IntMatrix

    def det(self):
        return self.matrix.det()

    def c_matrix(self) -> IntMatrix:
        gt = self.matrix.transpose()
        if gt.det() == 0:
            raise SingularMatrixError("G^t is singular; no C-matrix exists")
        return gt.unimodular_inverse()

    def row_sign_coherent(self):
        return is_row_sign_coherent(self.matrix)


def g_matrix(summands, coprojective_vertices=(), algebra=None) -> GMatrixData:
    """G-matrix with columns g^{M_k} followed by -e_v per coprojective vertex."""
    if summands:
        algebra = summands[0].algebra
    if algebra is None:
        raise ModuleError("need at least one summand or an explicit algebra")
    n = algebra.n
    if len(summands) + len(coprojective_vertices) != n:
        raise ModuleError(
            f"need {n} columns, got {len(summands)} + {len(coprojective_vertices)}"
        )
    g_cols = [g_vector(m) for m in summands]
    d_cols = [dim_vector(m) for m in summands]
    for v in coprojective_vertices:
        g_cols.append(tuple(-1 if i == v else 0 for i in range(n)))
        d_cols.append(tuple(-x for x in dim_vector(regular_module(algebra, v))))
    return GMatrixData(
        matrix=IntMatrix.from_columns(g_cols),
        d_matrix=IntMatrix.from_columns(d_cols),
    )


def endomorphism_cartan(summands) -> IntMatrix:
    """Hom-dimension matrix: entry (j, i) is dim Hom(T_j, T_i).

    This is the Cartan matrix of End(T) without ever presenting End(T) by a
    quiver: column i lists the dimension vector of the projective Hom(T, T_i).
    """
    t = len(summands)
    return IntMatrix(
        [[hom_dim(summands[j], summands[i]) for i in range(t)] for j in range(t)]
    )


def is_tau_rigid(summands) -> bool:
    """Hom(M, tau M) = 0 over all ordered summand pairs."""
    taus = [ar_translate(m) for m in summands]
    return all(
        hom_dim(m, tau) == 0 for m in summands for tau in taus
    )


def pair_is_tau_rigid(summands, coprojective_vertices) -> bool:
    """tau-rigid pair: M tau-rigid and Hom(P, M) = 0."""
    if not is_tau_rigid(summands):
        return False
    if summands:
        algebra = summands[0].algebra
        for v in coprojective_vertices:
            p = regular_module(algebra, v)
            if any(hom_dim(p, m) != 0 for m in summands):
                return False
    return True


def is_partial_tilting(summands) -> bool:
    """Projective dimension <= 1 and no self-extensions.

    The dimension condition is evaluated through the dimension-vector
    criterion dim M = C g^M and cross-checked against the vanishing of the
    second syzygy; a disagreement would mean a bug, not a property of the
    input, hence the hard error.
    """
    if not summands:
        return True
    algebra = summands[0].algebra
    c = cartan_matrix(algebra)
    for m in summands:
        by_syzygy = projective_dimension_at_most_one(m)
        by_dims = c.matvec(g_vector(m)) == dim_vector(m)
        if by_syzygy != by_dims:
            raise ModuleError(
                "internal inconsistency: syzygy and dimension-vector criteria disagree"
            )
        if not by_syzygy:
            return False
    return all(
        ext1_dim(x, y) == 0 for x in summands for y in summands
    )


def is_tilting(summands) -> bool:
    """Partial tilting with as many designated summands as simples.

    Summands are trusted to be pairwise non-isomorphic indecomposables (they
    are constructed that way everywhere in this package); a partial tilting
    module with n of them is tilting.
    """
    if not summands:
        return False
    if len(summands) != summands[0].algebra.n:
        return False
    return is_partial_tilting(summands)


def is_tau_tilting(summands) -> bool:
    if not summands:
        return False
    if len(summands) != summands[0].algebra.n:
        return False
    return is_tau_rigid(summands)


def hom_ext_vectors(summands, module):
    """Per-summand (dim Hom(T_j, N), dim Ext^1(T_j, N)) columns."""
    homs = tuple(hom_dim(t, module) for t in summands)
    exts = tuple(ext1_dim(t, module) for t in summands)
    return homs, exts


def presentation_dims(module):
    """Dimension vectors of P0 and P1 in the minimal presentation."""
    pres = minimal_presentation(module)
    return dim_vector(pres.p0), dim_vector(pres.p1)
