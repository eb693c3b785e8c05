"""Finite-dimensional associative algebras presented by structure constants.

An :class:`Algebra` stores a basis, a sparse multiplication table, a complete
set of orthogonal idempotents (one per vertex), a vertex grading of the basis
and a designated radical basis.  Every algebra in this package satisfies
``basis = idempotents + radical basis``; :func:`verify_algebra` checks all of
the structural axioms and is run over every builder output in the tests.

Values are immutable after construction; all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import EchelonSet, RatMatrix, echelonize


class AlgebraError(ValueError):
    """Structural axiom violated or unsupported input."""


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Algebra:
    """Associative unital algebra over the rationals.

    Parameters
    ----------
    labels:
        one name per basis element.
    mult:
        ``mult[i][j]`` is the product ``b_i * b_j`` as a sparse tuple of
        ``(basis_index, coefficient)`` pairs.
    idempotents:
        basis indices of the orthogonal idempotents ``e_0, ..., e_{n-1}``
        (vertex order).
    grading:
        ``(source, target)`` vertex pair of each basis element, so that
        ``b == e_src * b * e_tgt``.
    radical_basis:
        basis indices spanning the Jacobson radical.
    """

    def __init__(self, labels, mult, idempotents, grading, radical_basis):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.mult = tuple(
            tuple(
                tuple((k, _norm_coeff(c)) for k, c in entry if c != 0)
                for entry in row
            )
            for row in mult
        )
        self.idempotents = tuple(idempotents)
        self.n = len(self.idempotents)
        self.grading = tuple((int(s), int(t)) for s, t in grading)
        self.radical_basis = tuple(radical_basis)
        if len(self.mult) != self.dim or any(len(r) != self.dim for r in self.mult):
            raise AlgebraError("multiplication table shape mismatch")
        if len(self.grading) != self.dim:
            raise AlgebraError("grading length mismatch")
        unit = [0] * self.dim
        for e in self.idempotents:
            unit[e] += 1
        self.unit = tuple(unit)
        self.name = ""
        self._opposite = None
        self._radical_generators = None

    # -- basics -----------------------------------------------------------

    def basis_vector(self, i):
        v = [0] * self.dim
        v[i] = 1
        return tuple(v)

    def source(self, i):
        return self.grading[i][0]

    def target(self, i):
        return self.grading[i][1]

    def vertex_of_idempotent(self, basis_index):
        return self.idempotents.index(basis_index)

    def multiply(self, x, y):
        """Bilinear extension of the structure constants to vectors."""
        acc = [0] * self.dim
        mult = self.mult
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = mult[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coeff = xi * yj
                for k, c in row[j]:
                    acc[k] += coeff * c
        return tuple(_norm_coeff(a) for a in acc)

    def left_mult_matrix(self, i):
        """Matrix of ``x -> b_i * x`` on columns (entry rows indexed by basis)."""
        cols = []
        for j in range(self.dim):
            col = [0] * self.dim
            for k, c in self.mult[i][j]:
                col[k] += c
            cols.append(col)
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def opposite(self):
        """Opposite algebra: transposed structure constants, swapped grading."""
        if self._opposite is None:
            op = Algebra(
                self.labels,
                tuple(
                    tuple(self.mult[j][i] for j in range(self.dim))
                    for i in range(self.dim)
                ),
                self.idempotents,
                tuple((t, s) for s, t in self.grading),
                self.radical_basis,
            )
            op.name = f"{self.name}^op" if self.name else "op"
            op._opposite = self
            self._opposite = op
        return self._opposite

    def radical_generators(self):
        """Radical basis indices spanning rad modulo rad^2 (algebra generators)."""
        if self._radical_generators is None:
            rad2 = EchelonSet(self.dim)
            for i in self.radical_basis:
                for j in self.radical_basis:
                    entry = self.mult[i][j]
                    if entry:
                        v = [0] * self.dim
                        for k, c in entry:
                            v[k] += c
                        rad2.insert(v)
            gens = []
            probe = rad2.copy()
            for i in self.radical_basis:
                if probe.insert(self.basis_vector(i)):
                    gens.append(i)
            self._radical_generators = tuple(gens)
        return self._radical_generators

    def radical(self):
        """Span of the designated radical basis, as a :class:`Subspace`."""
        return Subspace(self, [self.basis_vector(i) for i in self.radical_basis])

    def __repr__(self):
        return f"Algebra(dim={self.dim}, vertices={self.n})"


class Subspace:
    """Subspace of an algebra, held as a canonical echelon basis."""

    __slots__ = ("algebra", "basis")

    def __init__(self, algebra, vectors):
        es = echelonize(vectors, algebra.dim)
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "basis", tuple(es.basis()))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self):
        return len(self.basis)

    def contains(self, vec):
        es = EchelonSet(self.algebra.dim)
        for row in self.basis:
            es.insert(list(row))
        return es.contains(vec)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.algebra is other.algebra
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subspace(dim={self.dim} of {self.algebra.dim})"


def trace_form_radical(algebra):
    """Jacobson radical over a characteristic-zero field via the trace form.

    Returns echelon basis vectors of ``{x : tr(L_{x y}) = 0 for all y}`` and
    errors out if the result fails the nilpotency self-check.
    """
    dim = algebra.dim
    traces = []
    for k in range(dim):
        t = 0
        for j in range(dim):
            for idx, c in algebra.mult[k][j]:
                if idx == j:
                    t += c
        traces.append(t)
    gram = [
        [
            sum(c * traces[k] for k, c in algebra.mult[i][j])
            for j in range(dim)
        ]
        for i in range(dim)
    ]
    vectors = RatMatrix(gram).kernel_basis()
    # nilpotency self-check
    span = echelonize(vectors, dim)
    power = [list(v) for v in span.basis()]
    for _ in range(dim + 1):
        if not power:
            return [tuple(v) for v in span.basis()]
        nxt = EchelonSet(dim)
        for u in power:
            for v in span.basis():
                nxt.insert(algebra.multiply(u, v))
        if nxt.dim == 0:
            return [tuple(v) for v in span.basis()]
        power = nxt.basis()
    raise AlgebraError("trace-form radical failed the nilpotency self-check")


def two_sided_ideal(algebra, generators):
    """Smallest two-sided ideal containing ``generators``.

    Iterated closure under left/right multiplication by the algebra's
    idempotents and radical generators (which generate the whole algebra),
    echelonized until stable.
    """
    gens = [algebra.basis_vector(i) for i in algebra.idempotents]
    gens += [algebra.basis_vector(i) for i in algebra.radical_generators()]
    es = EchelonSet(algebra.dim)
    frontier = []
    for v in generators:
        if es.insert(list(v)):
            frontier.append(tuple(v))
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                for w in (algebra.multiply(g, v), algebra.multiply(v, g)):
                    if any(w) and es.insert(list(w)):
                        new.append(w)
        frontier = new
    return Subspace(algebra, es.basis())


def ideal_product(algebra, left, right):
    """Product of two two-sided ideals: span of pairwise basis products."""
    vectors = []
    for u in left.basis:
        for v in right.basis:
            w = algebra.multiply(u, v)
            if any(w):
                vectors.append(w)
    return Subspace(algebra, vectors)


def verify_algebra(algebra, check_associativity=True):
    """Check every structural axiom; raises :class:`AlgebraError` on failure."""
    dim = algebra.dim
    # idempotent axioms
    for a, ia in enumerate(algebra.idempotents):
        for b, ib in enumerate(algebra.idempotents):
            prod = algebra.multiply(algebra.basis_vector(ia), algebra.basis_vector(ib))
            want = algebra.basis_vector(ia) if a == b else (0,) * dim
            if prod != want:
                raise AlgebraError(f"idempotent axiom fails at ({a}, {b})")
        if algebra.grading[ia] != (a, a):
            raise AlgebraError(f"idempotent {a} is not graded ({a}, {a})")
    # unit
    for i in range(dim):
        b = algebra.basis_vector(i)
        if algebra.multiply(algebra.unit, b) != b or algebra.multiply(b, algebra.unit) != b:
            raise AlgebraError(f"unit fails on basis element {i}")
    # grading consistency of the table
    for i in range(dim):
        si, ti = algebra.grading[i]
        for j in range(dim):
            sj, tj = algebra.grading[j]
            entry = algebra.mult[i][j]
            if ti != sj:
                if entry:
                    raise AlgebraError(f"non-composable product ({i}, {j}) nonzero")
                continue
            for k, _ in entry:
                if algebra.grading[k] != (si, tj):
                    raise AlgebraError(f"product ({i}, {j}) not graded ({si}, {tj})")
    # basis split
    if sorted(algebra.idempotents + algebra.radical_basis) != list(range(dim)):
        raise AlgebraError("basis is not idempotents plus radical basis")
    # radical: two-sided ideal, nilpotent
    rad = [algebra.basis_vector(i) for i in algebra.radical_basis]
    span = echelonize(rad, dim)
    for v in rad:
        for i in range(dim):
            b = algebra.basis_vector(i)
            if not span.contains(algebra.multiply(b, v)) or not span.contains(
                algebra.multiply(v, b)
            ):
                raise AlgebraError("radical basis does not span an ideal")
    power = rad
    for _ in range(dim + 1):
        if not power:
            break
        nxt = EchelonSet(dim)
        for u in power:
            for v in rad:
                nxt.insert(list(algebra.multiply(u, v)))
        power = [tuple(r) for r in nxt.basis()]
    if power:
        raise AlgebraError("radical basis is not nilpotent")
    if check_associativity:
        for i in range(dim):
            bi = algebra.basis_vector(i)
            for j in range(dim):
                bj = algebra.basis_vector(j)
                ij = algebra.multiply(bi, bj)
                for k in range(dim):
                    bk = algebra.basis_vector(k)
                    if algebra.multiply(ij, bk) != algebra.multiply(
                        bi, algebra.multiply(bj, bk)
                    ):
                        raise AlgebraError(f"associativity fails at ({i}, {j}, {k})")
    return True
