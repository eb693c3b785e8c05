import pytest

from gmatrices.builders import auslander_algebra, preprojective_algebra
from gmatrices.ideals import (
    SymmetricGroupSuite,
    WeylGroupSuite,
    literal_ideal_chain,
    nakayama_permutation,
    vertex_ideal,
    word_ideal,
)
from gmatrices.linalg import IntMatrix
from gmatrices.modules import (
    ModuleError,
    dim_vector,
    hom_dim,
    minimal_presentation,
    regular_module,
)
from gmatrices.reports import all_pass
from gmatrices.weyl import SymmetrizableCartan


def test_vertex_ideal_shapes_auslander():
    algebra = auslander_algebra(2)
    ideal = word_ideal(algebra, (0,), SymmetrizableCartan.named("A2"))
    assert dim_vector(ideal.summands[0]) == (0, 1)  # rad P(1)
    assert dim_vector(ideal.summands[1]) == dim_vector(regular_module(algebra, 1))


def test_vertex_ideal_other_summands_are_whole_projectives():
    algebra = auslander_algebra(3)
    for i in range(3):
        ideal = word_ideal(algebra, (i,), SymmetrizableCartan.named("A3"))
        for j in range(3):
            if j != i:
                assert dim_vector(ideal.summands[j]) == dim_vector(
                    regular_module(algebra, j)
                )


def test_preprojective_vertex_ideal_presentation_shape():
    cartan = SymmetrizableCartan.named("A2")
    algebra = preprojective_algebra(cartan)
    ideal = word_ideal(algebra, (0,), cartan)
    pres = minimal_presentation(ideal.summands[0])
    assert pres.p0_mult == (0, 1)
    assert pres.p1_mult == (1, 0)


def test_word_ideal_well_defined_across_reduced_expressions():
    algebra = auslander_algebra(3)
    cartan = SymmetrizableCartan.named("A3")
    left = literal_ideal_chain(algebra, (0, 1, 0))
    right = literal_ideal_chain(algebra, (1, 0, 1))
    assert left == right


def test_word_ideal_reduces_first():
    algebra = auslander_algebra(3)
    cartan = SymmetrizableCartan.named("A3")
    bad = word_ideal(algebra, (0, 0), cartan)
    assert bad.word == ()
    assert bad.subspace.dim == algebra.dim
    nonreduced = word_ideal(algebra, (0, 1, 0, 0), cartan)
    direct = word_ideal(algebra, (0, 1), cartan)
    assert nonreduced.subspace == direct.subspace


def test_nakayama_permutations():
    assert nakayama_permutation(
        preprojective_algebra(SymmetrizableCartan.named("A2"))
    ) == (1, 0)
    assert nakayama_permutation(
        preprojective_algebra(SymmetrizableCartan.named("A3"))
    ) == (2, 1, 0)
    assert nakayama_permutation(
        preprojective_algebra(SymmetrizableCartan.named("B2"))
    ) == (0, 1)
    with pytest.raises(ModuleError):
        nakayama_permutation(auslander_algebra(2))


def test_g_matrix_of_ideal_examples():
    algebra = auslander_algebra(2)
    cartan = SymmetrizableCartan.named("A2")
    ident = word_ideal(algebra, (), cartan)
    assert ident.g_matrix().is_identity()
    s1 = word_ideal(algebra, (0,), cartan)
    assert s1.g_matrix().tolist() == [[-1, 0], [1, 1]]
    assert s1.g_matrix().transpose() == cartan.reflection_matrix(0)


def test_longest_ideal_vanishes_dynkin():
    cartan = SymmetrizableCartan.named("A2")
    algebra = preprojective_algebra(cartan)
    w0 = cartan.longest_word()
    ideal = word_ideal(algebra, w0, cartan)
    assert ideal.subspace.dim == 0
    sigma = nakayama_permutation(algebra)
    g = ideal.g_matrix(nakayama_perm=sigma)
    assert g.tolist() == [[0, -1], [-1, 0]]
    with pytest.raises(ModuleError):
        ideal.g_matrix()  # zero column without the permutation


def test_rank_one_weyl_suite():
    suite = WeylGroupSuite(SymmetrizableCartan.named("A1"))
    records = suite.records_main()
    assert len(records) == 2 and all_pass(records)
    g_s1 = suite.g_of(suite.cartan.reflection_matrix(0))
    assert g_s1.tolist() == [[-1]]


def test_symmetric_group_suite_small():
    suite = SymmetricGroupSuite(2)
    assert all_pass(suite.records_transpose())
    assert all_pass(suite.records_pair_products())
    assert all_pass(suite.records_factorization())
    assert all_pass(suite.records_tilting())


def test_weyl_suite_records_a2():
    suite = WeylGroupSuite(SymmetrizableCartan.named("A2"))
    assert all_pass(suite.records_main())
    assert all_pass(suite.records_factorization())
    assert all_pass(suite.records_pairing())
    assert all_pass(suite.records_support())
    assert all_pass(suite.records_decomposition())
    longest = suite.records_longest()
    assert all_pass(longest)
    assert longest[0].inputs["w0_acts_as_minus_identity"] is False
    b2 = WeylGroupSuite(SymmetrizableCartan.named("B2"))
    longest = b2.records_longest()
    assert all_pass(longest)
    assert longest[0].inputs["w0_acts_as_minus_identity"] is True
    assert longest[0].rhs == (-IntMatrix.identity(2)).tolist()


def test_endomorphism_dimension_shadow():
    # End of every tilting ideal has the dimension of the algebra itself
    suite = SymmetricGroupSuite(3)
    for m, _ in suite.family.elements:
        ideal = suite.family.ideal(m)
        total = sum(
            hom_dim(a, b) for a in ideal.summands for b in ideal.summands
        )
        assert total == suite.algebra.dim


def test_unique_all_negative_g_at_longest():
    for name in ("A2", "B2"):
        suite = WeylGroupSuite(SymmetrizableCartan.named(name))
        negatives = [
            w
            for m, w in suite.family.elements
            if all(x <= 0 for row in suite.g_of(m).data for x in row)
        ]
        assert negatives == [suite.family.by_matrix[suite.w0]]


def test_ideal_dimension_monotone_in_length():
    suite = SymmetricGroupSuite(3)
    dims = {}
    for m, w in suite.family.elements:
        dims[w] = suite.family.ideal(m).subspace.dim
    for w, d in dims.items():
        for w2, d2 in dims.items():
            if len(w2) > len(w) and w2[: len(w)] == w:
                assert d2 <= d
