"""Tilting / support tau-tilting ideals indexed by Weyl group words, their
G-matrices, and the exhaustive reflection-realization suites.

The ideal attached to a word is the product of the vertex ideals along a
reduced expression; the suites enumerate a whole (sub)group, walk the ideals
along the enumeration tree (one ideal product per element), and compare each
G-matrix, computed module-theoretically, against the transposed reflection
matrix of the word.
"""

from __future__ import annotations

import time

from .algebra import Subspace, ideal_product, two_sided_ideal
from .builders import auslander_algebra, preprojective_algebra
from .gmatrix import is_tau_rigid, is_tilting
from .linalg import IntMatrix
from .modules import (
    ModuleError,
    dim_vector,
    full_regular_module,
    g_vector,
    hom_dim,
    regular_module,
    socle_module,
    submodule,
)
from .reports import record
from .weyl import SymmetrizableCartan


def vertex_ideal(algebra, vertex) -> Subspace:
    """The two-sided ideal generated by 1 - e_v."""
    gen = list(algebra.unit)
    gen[algebra.idempotents[vertex]] -= 1
    return two_sided_ideal(algebra, [tuple(gen)])


def unit_ideal(algebra) -> Subspace:
    return Subspace(algebra, [algebra.basis_vector(i) for i in range(algebra.dim)])


class WordIdeal:
    """An ideal together with its per-vertex summand modules."""

    def __init__(self, algebra, word, subspace):
        self.algebra = algebra
        self.word = tuple(word)
        self.subspace = subspace
        reg = full_regular_module(algebra)
        self.summands = []
        for v in range(algebra.n):
            e_v = algebra.basis_vector(algebra.idempotents[v])
            vectors = [algebra.multiply(e_v, u) for u in subspace.basis]
            mod, _ = submodule(reg, vectors, name=f"e{v + 1}I")
            self.summands.append(mod)
        self.summands = tuple(self.summands)

    def nonzero_summands(self):
        return [m for m in self.summands if not m.is_zero()]

    def summand_dim_total(self):
        return sum(m.dim for m in self.summands)

    def g_matrix(self, nakayama_perm=None) -> IntMatrix:
        """Columns are g-vectors of the e_v I summands; a zero summand
        contributes minus the unit vector at the socle vertex of e_v."""
        cols = []
        for v, m in enumerate(self.summands):
            if m.is_zero():
                if nakayama_perm is None:
                    raise ModuleError(
                        "zero summand needs the Nakayama permutation "
                        "(self-injective ambient algebra)"
                    )
                cols.append(
                    tuple(
                        -1 if r == nakayama_perm[v] else 0
                        for r in range(self.algebra.n)
                    )
                )
            else:
                cols.append(g_vector(m))
        return IntMatrix.from_columns(cols)


def word_ideal(algebra, word, cartan, allowed_generators=None) -> WordIdeal:
    """Ideal for a word: reduce it first, then multiply the vertex ideals."""
    reduced = cartan.reduce_word(word)
    if allowed_generators is not None and any(
        i not in allowed_generators for i in reduced
    ):
        raise ValueError("word leaves the allowed parabolic subgroup")
    space = unit_ideal(algebra)
    for i in reduced:
        space = ideal_product(algebra, space, vertex_ideal(algebra, i))
    return WordIdeal(algebra, reduced, space)


def literal_ideal_chain(algebra, word) -> Subspace:
    """Product of vertex ideals along a word as written (no reduction)."""
    space = unit_ideal(algebra)
    for i in word:
        space = ideal_product(algebra, space, vertex_ideal(algebra, i))
    return space


def nakayama_permutation(algebra):
    """Vertex permutation v -> socle vertex of e_v A; requires simple socles."""
    perm = []
    for v in range(algebra.n):
        soc = socle_module(regular_module(algebra, v))
        if soc.dim != 1:
            raise ModuleError(
                f"socle of projective {v} is not simple; algebra is not "
                "self-injective"
            )
        perm.append(soc.grading[0])
    if sorted(perm) != list(range(algebra.n)):
        raise ModuleError("socle vertex assignment is not a permutation")
    return tuple(perm)


class _IdealFamily:
    """Shared enumeration: elements, reduced words, ideals along the BFS tree."""

    def __init__(self, algebra, cartan, generators=None):
        self.algebra = algebra
        self.cartan = cartan
        self.generators = (
            tuple(generators) if generators is not None else tuple(range(cartan.n))
        )
        self.elements = cartan.enumerate_elements(generators=self.generators)
        self.by_matrix = {m: w for m, w in self.elements}
        self.ideals = {}
        ident = IntMatrix.identity(cartan.n)
        self.ideals[ident] = WordIdeal(algebra, (), unit_ideal(algebra))
        for m, w in self.elements:
            if not w:
                continue
            prev = m @ cartan.reflection_matrix(w[-1])
            parent = self.ideals[prev]
            space = ideal_product(
                algebra, parent.subspace, vertex_ideal(algebra, w[-1])
            )
            self.ideals[m] = WordIdeal(algebra, w, space)

    def ideal(self, matrix):
        return self.ideals[matrix]


class SymmetricGroupSuite:
    """Tilting ideals over the Auslander algebra against the reflection
    matrices of the symmetric group sitting inside the one-larger one."""

    def __init__(self, n):
        if n < 2:
            raise ValueError("need n >= 2")
        self.n = n
        self.algebra = auslander_algebra(n)
        self.cartan = SymmetrizableCartan.named(f"A{n}")
        self.family = _IdealFamily(
            self.algebra, self.cartan, generators=tuple(range(n - 1))
        )

    def records_transpose(self, claim="thm-5.4"):
        out = []
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            g = self.family.ideal(m).g_matrix()
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    g.transpose(),
                    m,
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_pair_products(self, claim="cor-5.6"):
        out = []
        for m1, w1 in self.family.elements:
            g1 = self.family.ideal(m1).g_matrix()
            for m2, w2 in self.family.elements:
                t0 = time.perf_counter()
                g2 = self.family.ideal(m2).g_matrix()
                prod = self.family.ideal(m1 @ m2).g_matrix()
                out.append(
                    record(
                        claim,
                        self.algebra.name,
                        {"w": _word_name(w1), "w2": _word_name(w2)},
                        prod,
                        g2 @ g1,
                        time.perf_counter() - t0,
                    )
                )
        return out

    def records_factorization(self, claim="cor-5.7"):
        out = []
        letters = {
            i: self.family.ideal(self.cartan.reflection_matrix(i)).g_matrix()
            for i in range(self.n - 1)
        }
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            prod = IntMatrix.identity(self.n)
            for i in reversed(w):
                prod = prod @ letters[i]
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    self.family.ideal(m).g_matrix(),
                    prod,
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_tilting(self, claim="lem-5.1"):
        out = []
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            ideal = self.family.ideal(m)
            summands = ideal.nonzero_summands()
            ok = len(summands) == self.algebra.n and is_tilting(summands)
            end_dim = sum(
                hom_dim(a, b) for a in ideal.summands for b in ideal.summands
            )
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    [[1, self.algebra.dim]],
                    [[1 if ok else 0, end_dim]],
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_well_defined(self, claim="ideal-well-defined"):
        """Recompute each non-trivial ideal along a second reduced word."""
        out = []
        for m, w in self.family.elements:
            if len(w) < 2:
                continue
            alt = _alternative_reduced_word(self.cartan, m, w, self.family.elements)
            if alt is None:
                continue
            t0 = time.perf_counter()
            space = literal_ideal_chain(self.algebra, alt)
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w), "alt": _word_name(alt)},
                    [list(r) for r in self.family.ideal(m).subspace.basis],
                    [list(r) for r in space.basis],
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_decomposition(self, claim="eq-6.1"):
        """dim I_w equals the sum of its per-vertex summand dimensions."""
        out = []
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            ideal = self.family.ideal(m)
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    [[ideal.subspace.dim]],
                    [[ideal.summand_dim_total()]],
                    time.perf_counter() - t0,
                )
            )
        return out


def _word_name(word):
    return "e" if not word else "*".join(f"s{i + 1}" for i in word)


def _alternative_reduced_word(cartan, matrix, word, elements):
    """A second reduced word for the same element, if one exists."""
    for m, w in elements:
        for i in range(cartan.n):
            cand = w + (i,)
            if len(cand) != len(word) or cand == word:
                continue
            if not cartan.is_reduced(cand):
                continue
            if m @ cartan.reflection_matrix(i) == matrix:
                return cand
    return None


class WeylGroupSuite:
    """Support tau-tilting ideals over the preprojective algebra against the
    reflection and dual representations of the whole Weyl group."""

    def __init__(self, cartan):
        self.cartan = cartan
        self.algebra = preprojective_algebra(cartan)
        self.sigma = nakayama_permutation(self.algebra)
        self.family = _IdealFamily(self.algebra, cartan)
        self.w0 = cartan.word_matrix(cartan.longest_word())

    def g_of(self, matrix):
        return self.family.ideal(matrix).g_matrix(nakayama_perm=self.sigma)

    def records_main(self, claim="thm-6.7"):
        out = []
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            g = self.g_of(m)
            inv_word = tuple(reversed(w))
            sigma_m = self.cartan.sigma_word(inv_word)
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    (g, g),
                    (m.transpose(), sigma_m),
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_factorization(self, claim="cor-6.8"):
        out = []
        letters = {
            i: self.g_of(self.cartan.reflection_matrix(i))
            for i in range(self.cartan.n)
        }
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            prod = IntMatrix.identity(self.cartan.n)
            for i in reversed(w):
                prod = prod @ letters[i]
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    self.g_of(m),
                    prod,
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_pair_products(self, claim="cor-6.9"):
        out = []
        for m1, w1 in self.family.elements:
            g1 = self.g_of(m1)
            for m2, w2 in self.family.elements:
                t0 = time.perf_counter()
                out.append(
                    record(
                        claim,
                        self.algebra.name,
                        {"w": _word_name(w1), "w2": _word_name(w2)},
                        self.g_of(m1 @ m2),
                        self.g_of(m2) @ g1,
                        time.perf_counter() - t0,
                    )
                )
        return out

    def records_pairing(self, claim="cor-6.11.2"):
        """G_{I_w} + G_{I_{w'}} = 0 exactly when w' = w w0 and the longest
        element acts as minus the identity on the roots.

        The unconditional statement would force G_{I_{w0}} = -identity, which
        fails whenever w0 induces a nontrivial diagram automorphism (type A
        rank >= 2); in that case no pair sums to zero, and that is what is
        asserted.
        """
        out = []
        minus_one = self.w0 == -IntMatrix.identity(self.cartan.n)
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            g = self.g_of(m)
            matches = [
                w2
                for m2, w2 in self.family.elements
                if (self.g_of(m2) + g) == IntMatrix.zero(self.cartan.n, self.cartan.n)
            ]
            expect = (
                [self.family.by_matrix[m @ self.w0]] if minus_one else []
            )
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w), "w0_is_minus_identity": minus_one},
                    [_word_name(x) for x in matches],
                    [_word_name(x) for x in expect],
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_longest(self, claim="cor-6.11.1"):
        """G at the longest element; asserted equal to -identity only when
        the longest element acts as -identity on the roots."""
        t0 = time.perf_counter()
        g = self.g_of(self.w0)
        minus_ident = -IntMatrix.identity(self.cartan.n)
        w0_is_minus = self.w0 == minus_ident
        lhs = g
        rhs = minus_ident if w0_is_minus else self.w0.transpose()
        return [
            record(
                claim,
                self.algebra.name,
                {"w0_acts_as_minus_identity": w0_is_minus},
                lhs,
                rhs,
                time.perf_counter() - t0,
            )
        ]

    def records_support(self, claim="thm-6.6"):
        """Each ideal is a support tau-tilting pair: nonzero part tau-rigid,
        projective part Hom-orthogonal, and n distinct g-columns."""
        out = []
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            ideal = self.family.ideal(m)
            summands = ideal.nonzero_summands()
            proj_part = [
                regular_module(self.algebra, self.sigma[v])
                for v, s in enumerate(ideal.summands)
                if s.is_zero()
            ]
            rigid = is_tau_rigid(summands) if summands else True
            orth = all(
                hom_dim(p, s) == 0 for p in proj_part for s in summands
            )
            g = self.g_of(m)
            distinct = len({g.column(j) for j in range(self.cartan.n)})
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    [[1, 1, self.cartan.n]],
                    [[1 if rigid else 0, 1 if orth else 0, distinct]],
                    time.perf_counter() - t0,
                )
            )
        return out

    def records_decomposition(self, claim="eq-6.1"):
        """dim I_w equals the sum of the summand dimensions."""
        out = []
        for m, w in self.family.elements:
            t0 = time.perf_counter()
            ideal = self.family.ideal(m)
            out.append(
                record(
                    claim,
                    self.algebra.name,
                    {"w": _word_name(w)},
                    [[ideal.subspace.dim]],
                    [[ideal.summand_dim_total()]],
                    time.perf_counter() - t0,
                )
            )
        return out
