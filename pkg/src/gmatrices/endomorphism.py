"""Endomorphism algebras of module sums, as structure-constant algebras.

``End(T_1 + ... + T_t)`` is materialized with the summand identities as the
designated idempotents and a graded radical basis, so the whole module
machinery applies to it.  The product convention makes ``Hom(T, X)`` a right
module by precomposition: a basis map m: T_i -> T_j is graded (src=j, tgt=i)
and acts on the Hom(T_j, X) component by f -> f o m.

The summands must be pairwise non-isomorphic and absolutely indecomposable
(true for everything built in this package); the construction checks that
each local endomorphism ring splits as scalars plus nilpotents and fails
loudly otherwise.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Algebra, AlgebraError
from .linalg import RatMatrix
from .modules import (
    Module,
    ModuleError,
    hom_space,
    minimal_presentation,
)


def _mat_trace(m):
    return sum(m[i][i] for i in range(len(m)))


def _matmul(a, b):
    rows = len(a)
    mid = len(b)
    cols = len(b[0]) if mid else 0
    return [
        [sum(a[r][k] * b[k][c] for k in range(mid)) for c in range(cols)]
        for r in range(rows)
    ]


def _vec(m):
    return [x for row in m for x in row]


class EndomorphismData:
    """End(T) together with the chosen bases of every Hom block."""

    def __init__(self, summands):
        self.summands = tuple(summands)
        t = len(self.summands)
        if t == 0:
            raise ModuleError("need at least one summand")
        base_algebra = self.summands[0].algebra

        # block_maps[(i, j)]: chosen basis of Hom(T_i, T_j) as matrices;
        # at i == j the first element is the identity and the rest span the
        # nilpotent part of the local endomorphism ring.
        self.block_maps = {}
        for i in range(t):
            for j in range(t):
                homs = hom_space(self.summands[i], self.summands[j])
                mats = [list(map(list, h.matrix)) for h in homs]
                if i == j:
                    d = self.summands[i].dim
                    ident = [[1 if r == c else 0 for c in range(d)] for r in range(d)]
                    nil = _local_nilpotent_basis(mats, d)
                    if len(nil) != len(mats) - 1:
                        raise AlgebraError(
                            "summand is not absolutely indecomposable over the rationals"
                        )
                    self.block_maps[(i, j)] = [ident] + nil
                else:
                    self.block_maps[(i, j)] = mats

        # global basis: identities first, then radical blocks by (i, j)
        self.basis = []  # (i, j, matrix) with grading (src=j, tgt=i)
        labels = []
        grading = []
        for i in range(t):
            self.basis.append((i, i, self.block_maps[(i, i)][0]))
            labels.append(f"id{i + 1}")
            grading.append((i, i))
        for i in range(t):
            for j in range(t):
                block = self.block_maps[(i, j)]
                start = 1 if i == j else 0
                for k in range(start, len(block)):
                    self.basis.append((i, j, block[k]))
                    labels.append(f"h{i + 1}_{j + 1}_{k - start + 1}")
                    grading.append((j, i))
        dim = len(self.basis)

        # coordinate solvers per block (vectorized bases)
        self._block_coords = {}
        for (i, j), block in self.block_maps.items():
            if block:
                cols = [_vec(m) for m in block]
                mat = RatMatrix([[c[r] for c in cols] for r in range(len(cols[0]))])
                self._block_coords[(i, j)] = mat

        self._index_of = {}
        for pos, (i, j, _) in enumerate(self.basis):
            self._index_of.setdefault((i, j), []).append(pos)

        mult = [[() for _ in range(dim)] for _ in range(dim)]
        for p, (pi, pj, pm) in enumerate(self.basis):
            for q, (qi, qj, qm) in enumerate(self.basis):
                # product x*y = x o y (apply y first): needs domain(x) = codomain(y)
                if pi != qj:
                    continue
                prod = _matmul(pm, qm)
                coords = self.block_coordinates(qi, pj, prod)
                pairs = []
                for k, c in zip(self._index_of.get((qi, pj), []), coords):
                    if c:
                        pairs.append((k, c))
                mult[p][q] = tuple(pairs)

        algebra = Algebra(
            labels,
            mult,
            tuple(range(t)),
            grading,
            tuple(range(t, dim)),
        )
        algebra.name = f"End[{base_algebra.name}]"
        self.algebra = algebra

    def block_coordinates(self, i, j, matrix):
        """Coordinates of a map T_i -> T_j in the chosen block basis."""
        block = self.block_maps[(i, j)]
        if not block:
            if any(any(row) for row in matrix):
                raise ModuleError("map does not lie in the Hom block")
            return []
        sol = self._block_coords[(i, j)].solve(_vec(matrix))
        if sol is None:
            raise ModuleError("map does not lie in the Hom block")
        return [s.numerator if s.denominator == 1 else s for s in sol]

    # -- transported modules ------------------------------------------------

    def hom_module(self, target):
        """Hom(T, X) as a right module over End(T), acting by precomposition."""
        t = len(self.summands)
        hom_bases = [hom_space(self.summands[j], target) for j in range(t)]
        offsets = []
        total = 0
        for j in range(t):
            offsets.append(total)
            total += len(hom_bases[j])
        coord_mats = []
        for j in range(t):
            cols = [_vec(h.matrix) for h in hom_bases[j]]
            if cols:
                coord_mats.append(
                    RatMatrix([[c[r] for c in cols] for r in range(len(cols[0]))])
                )
            else:
                coord_mats.append(None)
        actions = []
        for (i, j, m) in self.basis:
            # action f -> f o m maps the Hom(T_j, X) block to Hom(T_i, X)
            big = [[0] * total for _ in range(total)]
            for k, h in enumerate(hom_bases[j]):
                comp = _matmul(list(map(list, h.matrix)), m)
                if coord_mats[i] is None:
                    if any(any(row) for row in comp):
                        raise ModuleError("precomposition left the Hom block")
                    continue
                sol = coord_mats[i].solve(_vec(comp))
                if sol is None:
                    raise ModuleError("precomposition left the Hom block")
                for r, c in enumerate(sol):
                    if c:
                        big[offsets[i] + r][offsets[j] + k] = (
                            c.numerator if c.denominator == 1 else c
                        )
            actions.append(big)
        grading = tuple(j for j in range(t) for _ in hom_bases[j])
        return Module(
            self.algebra, actions, grading, name=f"Hom(T,{target.name})"
        )

    def ext_module(self, target):
        """Ext^1(T, X) as a right End(T)-module, via lifted presentations."""
        t = len(self.summands)
        pres = [minimal_presentation(s) for s in self.summands]
        hom_p1 = [hom_space(pres[j].p1, target) for j in range(t)]
        # image of precomposition Hom(P0_j, X) -> Hom(P1_j, X), in coordinates
        coord_mats = []
        for j in range(t):
            cols = [_vec(h.matrix) for h in hom_p1[j]]
            if cols:
                coord_mats.append(
                    RatMatrix([[c[r] for c in cols] for r in range(len(cols[0]))])
                )
            else:
                coord_mats.append(None)

        def p1_coords(j, mat):
            if coord_mats[j] is None:
                if any(any(row) for row in mat):
                    raise ModuleError("map left the Hom block")
                return []
            sol = coord_mats[j].solve(_vec(mat))
            if sol is None:
                raise ModuleError("map left the Hom block")
            return list(sol)

        from .linalg import EchelonSet

        images = []
        for j in range(t):
            es = EchelonSet(len(hom_p1[j]))
            for h0 in hom_space(pres[j].p0, target):
                comp = _matmul(list(map(list, h0.matrix)), list(map(list, pres[j].differential.matrix)))
                es.insert(p1_coords(j, comp))
            images.append(es)

        # quotient coordinates: non-pivot positions of each image echelon
        comp_positions = []
        for j in range(t):
            pivots = set(images[j].pivots)
            comp_positions.append(
                [k for k in range(len(hom_p1[j])) if k not in pivots]
            )

        def project(j, coords):
            res = [Fraction(x) if not isinstance(x, Fraction) else x for x in coords]
            for row, p in zip(images[j].rows, images[j].pivots):
                c = Fraction(res[p], row[p])
                if c:
                    res = [x - c * y for x, y in zip(res, row)]
            out = [res[k] for k in comp_positions[j]]
            return [x.numerator if x.denominator == 1 else x for x in out]

        offsets = []
        total = 0
        for j in range(t):
            offsets.append(total)
            total += len(comp_positions[j])

        lifts = self._presentation_lifts(pres)

        actions = []
        for pos, (i, j, _) in enumerate(self.basis):
            big = [[0] * total for _ in range(total)]
            m1 = lifts[pos]
            for k_pos, k in enumerate(comp_positions[j]):
                h = hom_p1[j][k]
                comp = _matmul(list(map(list, h.matrix)), m1)
                col = project(i, p1_coords(i, comp))
                for r, c in enumerate(col):
                    if c:
                        big[offsets[i] + r][offsets[j] + k_pos] = c
            actions.append(big)
        grading = tuple(j for j in range(t) for _ in comp_positions[j])
        return Module(self.algebra, actions, grading, name=f"Ext1(T,{target.name})")

    def _presentation_lifts(self, pres):
        """Lift every basis map m: T_i -> T_j to m1: P1_i -> P1_j."""
        lifts = []
        for (i, j, m) in self.basis:
            m0 = _lift_through(
                hom_space(pres[i].p0, pres[j].p0),
                pres[j].cover.matrix,
                _matmul(m, list(map(list, pres[i].cover.matrix))),
            )
            if pres[i].p1.dim == 0:
                lifts.append([[0] * 0 for _ in range(pres[j].p1.dim)])
                continue
            m1 = _lift_through(
                hom_space(pres[i].p1, pres[j].p1),
                pres[j].differential.matrix,
                _matmul(m0, list(map(list, pres[i].differential.matrix))),
            )
            lifts.append(m1)
        return lifts


def _lift_through(candidate_basis, through, target_matrix):
    """Find a map f in the span of candidates with through o f = target."""
    if not candidate_basis:
        if any(any(row) for row in target_matrix):
            raise ModuleError("projective lift does not exist")
        return [[0] * 0]
    through = list(map(list, through))
    cols = []
    for h in candidate_basis:
        cols.append(_vec(_matmul(through, list(map(list, h.matrix)))))
    mat = RatMatrix([[c[r] for c in cols] for r in range(len(cols[0]))])
    sol = mat.solve(_vec(target_matrix))
    if sol is None:
        raise ModuleError("projective lift does not exist")
    rows = len(candidate_basis[0].matrix)
    colsn = len(candidate_basis[0].matrix[0]) if rows else 0
    out = [[0] * colsn for _ in range(rows)]
    for coeff, h in zip(sol, candidate_basis):
        if coeff:
            for r in range(rows):
                for c in range(colsn):
                    out[r][c] += coeff * h.matrix[r][c]
    return out


def _local_nilpotent_basis(mats, d):
    """Basis of the nilpotent part of a local matrix algebra over Q.

    For an absolutely indecomposable module the endomorphism ring splits as
    scalars plus nilpotents; the nilpotent part is the radical of the natural
    trace form.
    """
    k = len(mats)
    gram = [
        [_mat_trace(_matmul(mats[p], mats[q])) for q in range(k)] for p in range(k)
    ]
    kernel = RatMatrix(gram).kernel_basis()
    out = []
    for vec in kernel:
        m = [[0] * d for _ in range(d)]
        for coeff, mat in zip(vec, mats):
            if coeff:
                for r in range(d):
                    for c in range(d):
                        m[r][c] += coeff * mat[r][c]
        out.append(m)
    return out
