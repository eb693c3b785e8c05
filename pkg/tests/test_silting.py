import pytest

from gmatrices.builders import (
    auslander_algebra,
    hereditary_algebra,
    named_hereditary_quiver,
)
from gmatrices.checks import check_dim_transfer
from gmatrices.gmatrix import g_matrix, is_tilting
from gmatrices.ideals import word_ideal
from gmatrices.modules import (
    ModuleError,
    dim_vector,
    regular_module,
    simple_module,
)
from gmatrices.silting import (
    check_silting_transfer,
    cokernel_pair,
    complex_from_module,
    complex_from_pair,
    direct_sum_complexes,
    g_matrix_of_complex,
    hom_shift_one,
    hom_to_module,
    is_presilting,
    is_silting,
    pair_complex_checked,
    stalk_complex,
)
from gmatrices.weyl import SymmetrizableCartan


def a2():
    return hereditary_algebra(named_hereditary_quiver("A2"), name="hereditary:A2")


def projective_stalks(algebra, degree=0):
    return direct_sum_complexes(
        [stalk_complex(algebra, v, degree=degree) for v in range(algebra.n)]
    )


def test_stalk_hom_dimensions():
    algebra = a2()
    whole = projective_stalks(algebra)
    for v in range(2):
        x = simple_module(algebra, v)
        assert hom_to_module(whole, x, 0) == sum(dim_vector(x))
        assert hom_to_module(whole, x, 1) == 0
    shifted = projective_stalks(algebra, degree=-1)
    for v in range(2):
        x = simple_module(algebra, v)
        assert hom_to_module(shifted, x, 0) == 0
        assert hom_to_module(shifted, x, 1) == sum(dim_vector(x))


def test_presentation_complex_hom_dims():
    algebra = a2()
    s1 = simple_module(algebra, 0)
    s2 = simple_module(algebra, 1)
    complex_ = complex_from_module(s1)
    assert hom_to_module(complex_, s2, 0) == 0
    assert hom_to_module(complex_, s2, 1) == 1  # matches Ext^1(S1, S2)


def test_hom_shift_one_examples():
    algebra = a2()
    p_stalk = projective_stalks(algebra)
    assert hom_shift_one(p_stalk, p_stalk) == 0
    lhs = stalk_complex(algebra, 0, degree=0)
    rhs = stalk_complex(algebra, 1, degree=-1)
    assert hom_shift_one(lhs, rhs) == 0  # no maps P(1) -> P(2) here


def test_silting_predicates():
    algebra = a2()
    assert is_silting(projective_stalks(algebra))
    assert is_silting(projective_stalks(algebra, degree=-1))
    lone = stalk_complex(algebra, 0, degree=0)
    assert is_presilting(lone)
    assert not is_silting(lone)


def test_pair_round_trip_and_g_identification():
    algebra = a2()
    tilting = [regular_module(algebra, 0), simple_module(algebra, 0)]
    complex_ = pair_complex_checked(algebra, tilting, [])
    assert g_matrix_of_complex(complex_).tolist() == [[1, 1], [0, -1]]
    modules, vertices = cokernel_pair(complex_)
    assert vertices == []
    assert [dim_vector(m) for m in modules] == [dim_vector(t) for t in tilting]
    assert g_matrix_of_complex(complex_) == g_matrix(tilting).matrix
    co = pair_complex_checked(algebra, [], [0, 1])
    assert g_matrix_of_complex(co).tolist() == [[-1, 0], [0, -1]]
    mods, verts = cokernel_pair(co)
    assert mods == [] and sorted(verts) == [0, 1]


def test_silting_transfer_trivial_and_tilting():
    algebra = a2()
    whole = projective_stalks(algebra)
    shifted = projective_stalks(algebra, degree=-1)
    for v in range(2):
        x = simple_module(algebra, v)
        rep = check_silting_transfer(whole, x)
        assert rep.passed and tuple(rep.lhs) == tuple(dim_vector(x))
        rep = check_silting_transfer(shifted, x)
        assert rep.passed and tuple(rep.lhs) == tuple(
            -d for d in dim_vector(x)
        )


def test_silting_transfer_matches_module_transfer_on_auslander():
    algebra = auslander_algebra(2)
    ideal = word_ideal(algebra, (0,), SymmetrizableCartan.named("A2"))
    summands = ideal.nonzero_summands()
    assert is_tilting(summands)
    complex_ = pair_complex_checked(algebra, summands, [])
    for v in range(2):
        x = simple_module(algebra, v)
        silt = check_silting_transfer(complex_, x)
        tilt = check_dim_transfer(summands, x)
        assert silt.passed and tilt.passed
        assert silt.rhs == tilt.rhs


def test_silting_g_matrices_unimodular():
    algebra = auslander_algebra(2)
    for word in ((), (0,)):
        ideal = word_ideal(algebra, word, SymmetrizableCartan.named("A2"))
        complex_ = pair_complex_checked(algebra, ideal.nonzero_summands(), [])
        assert is_silting(complex_)
        assert g_matrix_of_complex(complex_).det() in (1, -1)
    co = pair_complex_checked(algebra, [], [0, 1])
    assert g_matrix_of_complex(co).det() in (1, -1)


def test_radical_differential_enforced():
    algebra = a2()
    p = regular_module(algebra, 0)
    with pytest.raises(ModuleError):
        # the identity P(1) -> P(1) is not a radical differential
        from gmatrices.silting import TwoTermComplex

        TwoTermComplex(
            algebra,
            ((0, 0, p.dim),),
            ((0, 0, p.dim),),
            [[1 if i == j else 0 for j in range(p.dim)] for i in range(p.dim)],
        )


def test_non_rigid_pair_rejected():
    algebra = a2()
    s2 = simple_module(algebra, 1)
    with pytest.raises(ModuleError):
        # Hom(P(2), S2) != 0, so (S2, {P(2)}) is not a tau-rigid pair
        pair_complex_checked(algebra, [s2], [1])
