"""Symmetrizable generalized Cartan matrices, reflection matrices, and
reduced-word algorithms for the associated Weyl groups.

Group elements are identified by their matrices in the geometric
representation (which is faithful), never by word normal forms.  Reflections
act on coordinate columns in the simple-root basis: the image of the j-th
simple root under the i-th reflection is column j of the matrix ``R_i``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from .linalg import IntMatrix


class WeylError(ValueError):
    """Invalid Cartan data or unsupported request."""


def _tridiagonal(n):
    return tuple(
        tuple(
            2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)
        )
        for i in range(n)
    )


def _named_rows(name):
    if name and name[0] == "A" and name[1:].isdigit():
        return _tridiagonal(int(name[1:]))
    table = {
        "B2": ((2, -1), (-2, 2)),
        "B3": ((2, -1, 0), (-1, 2, -1), (0, -2, 2)),
        "C3": ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
        "G2": ((2, -1), (-3, 2)),
        "D4": (
            (2, -1, 0, 0),
            (-1, 2, -1, -1),
            (0, -1, 2, 0),
            (0, -1, 0, 2),
        ),
    }
    if name in table:
        return table[name]
    raise WeylError(f"unknown Cartan type {name!r}")


def find_symmetrizer(rows):
    """Minimal positive integer symmetrizer, by ratio propagation.

    Walks each connected component of the Coxeter graph spreading the
    constraint d_i c_ij = d_j c_ji, then clears denominators componentwise.
    Raises :class:`WeylError` when the constraints are inconsistent.
    """
    n = len(rows)
    vals = [None] * n
    for start in range(n):
        if vals[start] is not None:
            continue
        comp = [start]
        vals[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j or rows[i][j] == 0:
                    continue
                want = vals[i] * Fraction(rows[i][j], rows[j][i])
                if vals[j] is None:
                    vals[j] = want
                    comp.append(j)
                    queue.append(j)
                elif vals[j] != want:
                    raise WeylError("Cartan matrix is not symmetrizable")
        mult = 1
        for j in comp:
            mult = lcm(mult, vals[j].denominator)
        nums = [int(vals[j] * mult) for j in comp]
        g = 0
        for x in nums:
            g = __import__("math").gcd(g, x)
        for j, x in zip(comp, nums):
            vals[j] = x // g
    return tuple(int(v) for v in vals)


class SymmetrizableCartan:
    """A symmetrizable generalized Cartan matrix with a fixed symmetrizer."""

    def __init__(self, rows, symmetrizer=None, name=""):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.n = len(self.rows)
        self.name = name
        for i in range(self.n):
            if len(self.rows[i]) != self.n:
                raise WeylError("Cartan matrix must be square")
            if self.rows[i][i] != 2:
                raise WeylError("diagonal entries must equal 2")
            for j in range(self.n):
                if i != j:
                    if self.rows[i][j] > 0:
                        raise WeylError("off-diagonal entries must be <= 0")
                    if (self.rows[i][j] == 0) != (self.rows[j][i] == 0):
                        raise WeylError("zero pattern must be symmetric")
        if symmetrizer is None:
            symmetrizer = find_symmetrizer(self.rows)
        self.symmetrizer = tuple(int(d) for d in symmetrizer)
        if any(d < 1 for d in self.symmetrizer):
            raise WeylError("symmetrizer entries must be positive")
        for i in range(self.n):
            for j in range(self.n):
                if (
                    self.symmetrizer[i] * self.rows[i][j]
                    != self.symmetrizer[j] * self.rows[j][i]
                ):
                    raise WeylError("symmetrizer does not symmetrize the matrix")
        self._reflections = None
        self._sigmas = None

    @classmethod
    def named(cls, name):
        return cls(_named_rows(name), name=name)

    def __repr__(self):
        tag = self.name or "custom"
        return f"SymmetrizableCartan({tag}, n={self.n})"

    # -- reflections -------------------------------------------------------

    def reflection_matrix(self, i) -> IntMatrix:
        """Identity except row i, which is (-c_i1, ..., -1, ..., -c_in)."""
        if self._reflections is None:
            mats = []
            for k in range(self.n):
                rows = [
                    [1 if r == c else 0 for c in range(self.n)]
                    for r in range(self.n)
                ]
                rows[k] = [
                    -1 if c == k else -self.rows[k][c] for c in range(self.n)
                ]
                mats.append(IntMatrix(rows))
            self._reflections = tuple(mats)
        return self._reflections[i]

    def sigma_matrix(self, i) -> IntMatrix:
        """Matrix of the i-th reflection on the dual basis.

        Built independently from the dual-action formula (column i is
        e_i minus the i-th Cartan row spread down the column) and asserted
        equal to the transposed reflection matrix.
        """
        if self._sigmas is None:
            mats = []
            for k in range(self.n):
                rows = [
                    [1 if r == c else 0 for c in range(self.n)]
                    for r in range(self.n)
                ]
                for r in range(self.n):
                    rows[r][k] = -1 if r == k else -self.rows[k][r]
                m = IntMatrix(rows)
                if m != self.reflection_matrix(k).transpose():
                    raise WeylError("dual reflection does not transpose")
                mats.append(m)
            self._sigmas = tuple(mats)
        return self._sigmas[i]

    def word_matrix(self, word) -> IntMatrix:
        """Product R_{i_1} ... R_{i_l} over a word of 0-based indices."""
        m = IntMatrix.identity(self.n)
        for i in word:
            m = m @ self.reflection_matrix(i)
        return m

    def sigma_word(self, word) -> IntMatrix:
        m = IntMatrix.identity(self.n)
        for i in word:
            m = m @ self.sigma_matrix(i)
        return m

    # -- words -------------------------------------------------------------

    def _prefix_images(self, word):
        """Roots s_{i_1}...s_{i_{t-1}}(alpha_{i_t}) for t = 1..len(word)."""
        out = []
        m = IntMatrix.identity(self.n)
        for i in word:
            out.append(m.column(i))
            m = m @ self.reflection_matrix(i)
        return out

    def is_reduced(self, word) -> bool:
        """Root criterion: every prefix must send its next letter's root up."""
        return all(
            any(x > 0 for x in beta) and all(x >= 0 for x in beta)
            for beta in self._prefix_images(word)
        )

    def reduce_word(self, word):
        """Reduced word for the same element, by repeated deletion.

        When a prefix sends the next simple root negative, the two letters
        given by the strong exchange condition are deleted; repeats until the
        root criterion passes.  The result represents the same group element.
        """
        word = list(word)
        while True:
            images = self._prefix_images(word)
            bad = next(
                (
                    t
                    for t, beta in enumerate(images)
                    if any(x < 0 for x in beta)
                ),
                None,
            )
            if bad is None:
                return tuple(word)
            gamma = tuple(
                1 if k == word[bad] else 0 for k in range(self.n)
            )
            found = None
            for u in range(bad - 1, -1, -1):
                unit = tuple(1 if k == word[u] else 0 for k in range(self.n))
                if gamma == unit:
                    found = u
                    break
                gamma = self.reflection_matrix(word[u]).matvec(gamma)
            if found is None:
                raise WeylError("deletion condition failed; invalid Cartan data")
            del word[bad]
            del word[found]

    # -- finiteness --------------------------------------------------------

    def symmetrized(self) -> IntMatrix:
        return IntMatrix(
            [
                [self.symmetrizer[i] * self.rows[i][j] for j in range(self.n)]
                for i in range(self.n)
            ]
        )

    def is_dynkin(self) -> bool:
        """Positive definiteness of the symmetrized matrix (finite Weyl group)."""
        sym = self.symmetrized()
        for k in range(1, self.n + 1):
            minor = IntMatrix([row[:k] for row in sym.data[:k]])
            if minor.det() <= 0:
                return False
        return True

    def longest_word(self):
        """A reduced word for the longest element (greedy ascent)."""
        if not self.is_dynkin():
            raise WeylError("longest element exists only for Dynkin type")
        word = []
        m = IntMatrix.identity(self.n)
        while True:
            nxt = next(
                (
                    i
                    for i in range(self.n)
                    if all(x >= 0 for x in m.column(i)) and any(m.column(i))
                ),
                None,
            )
            if nxt is None:
                return tuple(word)
            word.append(nxt)
            m = m @ self.reflection_matrix(nxt)

    def enumerate_elements(self, generators=None, max_rank=4):
        """All group elements as (matrix, reduced word), breadth first.

        Restricting ``generators`` enumerates the parabolic subgroup they
        generate.  Guarded to Dynkin type of rank <= ``max_rank``.
        """
        if not self.is_dynkin():
            raise WeylError("refusing to enumerate an infinite group")
        if self.n > max_rank:
            raise WeylError(f"rank {self.n} exceeds the enumeration guard")
        if generators is None:
            generators = tuple(range(self.n))
        ident = IntMatrix.identity(self.n)
        seen = {ident: ()}
        order = [(ident, ())]
        frontier = [(ident, ())]
        while frontier:
            new = []
            for m, word in frontier:
                for i in generators:
                    m2 = m @ self.reflection_matrix(i)
                    if m2 not in seen:
                        w2 = word + (i,)
                        seen[m2] = w2
                        order.append((m2, w2))
                        new.append((m2, w2))
            frontier = new
        return order
