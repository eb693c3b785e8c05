"""Exact dense linear algebra over arbitrary-precision integers and rationals.

Two immutable matrix types back everything in this package:

* :class:`IntMatrix` -- integer entries; determinants, products, transposes.
* :class:`RatMatrix` -- ``fractions.Fraction`` entries; row reduction, rank,
  null spaces, linear solves, inverses.

Row reduction is delegated to the integer elimination core selected by
:mod:`gmatrices.kernel` (rational rows are scaled row-wise to integers first,
which changes neither the row space nor solution sets).  Pivoting is
deterministic, so every echelon basis produced here is canonical and safe to
compare or hash.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import kernel


class LinAlgError(ValueError):
    """Base error for exact linear algebra failures."""


class ShapeError(LinAlgError):
    """Operands have incompatible dimensions."""


class SingularMatrixError(LinAlgError):
    """A matrix required to be invertible is singular."""


def _as_int(x):
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    raise TypeError(f"expected integer entry, got {x!r}")


def _scaled_int_rows(rows):
    """Scale each rational row by its denominator lcm; returns int row lists."""
    out = []
    for row in rows:
        mult = 1
        for x in row:
            if isinstance(x, Fraction):
                mult = lcm(mult, x.denominator)
        if mult == 1:
            out.append([x.numerator if isinstance(x, Fraction) else x for x in row])
        else:
            out.append([int(x * mult) for x in row])
    return out


def vec_primitive(row):
    """Scale a rational vector to a primitive integer vector, first nonzero > 0."""
    mult = 1
    for x in row:
        if isinstance(x, Fraction):
            mult = lcm(mult, x.denominator)
    ints = [int(x * mult) for x in row] if mult != 1 else [int(x) for x in row]
    g = 0
    lead = 0
    for x in ints:
        if x:
            if lead == 0:
                lead = x
            g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


class IntMatrix:
    """Immutable dense matrix with arbitrary-precision integer entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(tuple(_as_int(x) for x in row) for row in data)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_columns(cls, columns):
        cols = [tuple(c) for c in columns]
        if not cols:
            return cls([])
        return cls([[c[i] for c in cols] for i in range(len(cols[0]))])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return self.data[i]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix([self.column(j) for j in range(self.cols)])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.data]})"

    def __neg__(self):
        return IntMatrix([[-x for x in row] for row in self.data])

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix addition shape mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = [other.column(j) for j in range(other.cols)]
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in bt]
                for row in self.data
            ]
        )

    def matvec(self, vec):
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ShapeError("matvec length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self.data)

    def det(self):
        if self.rows != self.cols:
            raise ShapeError("determinant of non-square matrix")
        return kernel.det_int([list(row) for row in self.data])

    def to_rat(self):
        return RatMatrix(self.data)

    def inverse(self):
        """Exact inverse as a :class:`RatMatrix`."""
        return self.to_rat().inverse()

    def unimodular_inverse(self):
        """Inverse as an :class:`IntMatrix`; requires det in {1, -1}."""
        inv = self.inverse()
        return inv.to_int()

    def is_identity(self):
        return self == IntMatrix.identity(self.rows) if self.rows == self.cols else False

    def is_skew_symmetric(self):
        return self.rows == self.cols and self.transpose() == -self

    def tolist(self):
        return [list(row) for row in self.data]


def is_row_sign_coherent(m: IntMatrix) -> bool:
    """Each row entirely >= 0 or entirely <= 0."""
    for row in m.data:
        if any(x > 0 for x in row) and any(x < 0 for x in row):
            return False
    return True


def is_column_sign_coherent(m) -> bool:
    """Each column entirely >= 0 or entirely <= 0 (works for RatMatrix too)."""
    for j in range(m.cols):
        col = m.column(j)
        if any(x > 0 for x in col) and any(x < 0 for x in col):
            return False
    return True


class RatMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = tuple(
            tuple(x if isinstance(x, Fraction) else Fraction(x) for x in row)
            for row in data
        )
        if data and any(len(row) != len(data[0]) for row in data):
            raise ShapeError("ragged rows")
        object.__setattr__(self, "data", data)
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", len(data[0]) if data else 0)

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j):
        return tuple(row[j] for row in self.data)

    def transpose(self):
        return RatMatrix([self.column(j) for j in range(self.cols)])

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        return f"RatMatrix({[list(r) for r in self.data]})"

    def __neg__(self):
        return RatMatrix([[-x for x in row] for row in self.data])

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError("matrix addition shape mismatch")
        return RatMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        return self + (-other)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            other = other.to_rat()
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        bt = [other.column(j) for j in range(other.cols)]
        return RatMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in bt]
                for row in self.data
            ]
        )

    def matvec(self, vec):
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise ShapeError("matvec length mismatch")
        return tuple(
            sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self.data
        )

    def rref(self):
        """Reduced row echelon form; returns ``(RatMatrix, rank, pivots)``."""
        int_rows, pivots = kernel.rref_int(_scaled_int_rows(self.data))
        reduced = [
            [Fraction(x, row[p]) for x in row] for row, p in zip(int_rows, pivots)
        ]
        reduced.extend([Fraction(0)] * self.cols for _ in range(self.rows - len(reduced)))
        return RatMatrix(reduced), len(pivots), tuple(pivots)

    def rank(self):
        _, pivots = kernel.rref_int(_scaled_int_rows(self.data))
        return len(pivots)

    def kernel_basis(self):
        """Vectors spanning the right null space, as primitive integer tuples."""
        rows, pivots = kernel.rref_int(_scaled_int_rows(self.data))
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec = [Fraction(0)] * self.cols
            vec[free] = Fraction(1)
            for row, p in zip(rows, pivots):
                if row[free]:
                    vec[p] = Fraction(-row[free], row[p])
            basis.append(vec_primitive(vec))
        return basis

    def solve(self, rhs):
        """One exact solution of ``self @ x = rhs``, or ``None`` if inconsistent."""
        rhs = tuple(rhs)
        if len(rhs) != self.rows:
            raise ShapeError("right-hand side length mismatch")
        aug = [list(row) + [b] for row, b in zip(self.data, rhs)]
        rows, pivots = kernel.rref_int(_scaled_int_rows(aug))
        if self.cols in pivots:
            return None
        sol = [Fraction(0)] * self.cols
        for row, p in zip(rows, pivots):
            sol[p] = Fraction(row[-1], row[p])
        return tuple(sol)

    def inverse(self):
        if self.rows != self.cols:
            raise ShapeError("inverse of non-square matrix")
        n = self.rows
        aug = [
            list(row) + [1 if i == j else 0 for j in range(n)]
            for i, row in enumerate(self.data)
        ]
        rows, pivots = kernel.rref_int(_scaled_int_rows(aug))
        if len(pivots) < n or any(p >= n for p in pivots):
            raise SingularMatrixError("matrix is singular")
        inv = [[Fraction(rows[i][n + j], rows[i][i]) for j in range(n)] for i in range(n)]
        return RatMatrix(inv)

    def is_integral(self):
        return all(x.denominator == 1 for row in self.data for x in row)

    def to_int(self):
        if not self.is_integral():
            raise LinAlgError("matrix has non-integer entries")
        return IntMatrix([[x.numerator for x in row] for row in self.data])

    def tolist(self):
        return [list(row) for row in self.data]


class EchelonSet:
    """Incrementally maintained canonical basis of a rational subspace.

    Rows are primitive integer vectors in reduced echelon form with positive
    pivots, kept sorted by pivot column; two EchelonSets describe the same
    subspace iff their ``rows`` lists are equal.
    """

    __slots__ = ("ncols", "rows", "pivots")

    def __init__(self, ncols):
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        """Residue of ``vec`` after elimination; primitive int list (or zeros)."""
        vec = list(vec)
        mult = 1
        for x in vec:
            if isinstance(x, Fraction):
                mult = lcm(mult, x.denominator)
        if mult != 1:
            vec = [int(x * mult) for x in vec]
        else:
            vec = [int(x) for x in vec]
        for row, p in zip(self.rows, self.pivots):
            v = vec[p]
            if v:
                piv = row[p]
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                vec = [a * x - b * y for x, y in zip(vec, row)]
        g = 0
        for x in vec:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            vec = [x // g for x in vec]
        return vec

    def contains(self, vec):
        return not any(self.reduce(vec))

    def insert(self, vec):
        """Add ``vec`` to the span; returns True iff the dimension grew."""
        res = self.reduce(vec)
        p = next((i for i, x in enumerate(res) if x), -1)
        if p < 0:
            return False
        if res[p] < 0:
            res = [-x for x in res]
        # eliminate the new pivot column from existing rows
        for k, row in enumerate(self.rows):
            v = row[p]
            if v:
                piv = res[p]
                g = gcd(piv, v)
                a = piv // g
                b = v // g
                new = [a * x - b * y for x, y in zip(row, res)]
                g2 = 0
                for x in new:
                    if x:
                        g2 = gcd(g2, x)
                        if g2 == 1:
                            break
                if g2 > 1:
                    new = [x // g2 for x in new]
                if new[self.pivots[k]] < 0:
                    new = [-x for x in new]
                self.rows[k] = new
        pos = 0
        while pos < len(self.pivots) and self.pivots[pos] < p:
            pos += 1
        self.rows.insert(pos, res)
        self.pivots.insert(pos, p)
        return True

    def extend(self, vectors):
        grew = False
        for v in vectors:
            grew = self.insert(v) or grew
        return grew

    def basis(self):
        return [tuple(row) for row in self.rows]

    def coordinates(self, vec):
        """Coefficients expressing ``vec`` in ``self.rows``, or None."""
        if not self.rows:
            return () if not any(vec) else None
        m = RatMatrix([[row[i] for row in self.rows] for i in range(self.ncols)])
        return m.solve(vec)

    def copy(self):
        dup = EchelonSet(self.ncols)
        dup.rows = [list(r) for r in self.rows]
        dup.pivots = list(self.pivots)
        return dup

    def __eq__(self, other):
        return (
            isinstance(other, EchelonSet)
            and self.ncols == other.ncols
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ncols, tuple(tuple(r) for r in self.rows)))


def echelonize(vectors, ncols):
    """Canonical echelon basis (primitive int tuples) of the span of vectors."""
    es = EchelonSet(ncols)
    es.extend(vectors)
    return es
