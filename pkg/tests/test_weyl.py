import random

import pytest

from gmatrices.linalg import IntMatrix, is_column_sign_coherent
from gmatrices.weyl import SymmetrizableCartan, WeylError, find_symmetrizer


def test_reflection_matrix_display():
    a2 = SymmetrizableCartan.named("A2")
    assert a2.reflection_matrix(0).tolist() == [[-1, 1], [0, 1]]
    b2 = SymmetrizableCartan.named("B2")
    assert b2.reflection_matrix(0).row(0) == (-1, 1)
    assert b2.reflection_matrix(1).row(1) == (2, -1)


def test_reflections_are_involutions():
    for name in ("A2", "A3", "B2", "G2"):
        c = SymmetrizableCartan.named(name)
        for i in range(c.n):
            r = c.reflection_matrix(i)
            assert (r @ r).is_identity()
            s = c.sigma_matrix(i)
            assert (s @ s).is_identity()
            assert s == r.transpose()


def test_braid_relations():
    orders = {0: 2, 1: 3, 2: 4, 3: 6}
    for name in ("A2", "A3", "B2", "G2", "D4"):
        c = SymmetrizableCartan.named(name)
        for i in range(c.n):
            for j in range(i + 1, c.n):
                m = orders[c.rows[i][j] * c.rows[j][i]]
                prod = c.reflection_matrix(i) @ c.reflection_matrix(j)
                power = IntMatrix.identity(c.n)
                for _ in range(m):
                    power = power @ prod
                assert power.is_identity()


def test_word_matrices():
    a2 = SymmetrizableCartan.named("A2")
    assert a2.word_matrix(()).is_identity()
    assert a2.word_matrix((0, 1, 0)) == a2.word_matrix((1, 0, 1))
    rng = random.Random(31)
    b2 = SymmetrizableCartan.named("B2")
    for _ in range(30):
        word = tuple(rng.randrange(2) for _ in range(rng.randint(0, 6)))
        inv = tuple(reversed(word))
        assert b2.sigma_word(word) == b2.word_matrix(inv).transpose()


def test_is_reduced_and_reduce():
    a2 = SymmetrizableCartan.named("A2")
    assert a2.reduce_word((0, 0)) == ()
    red = a2.reduce_word((0, 1, 0, 1))
    assert len(red) == 2 and a2.is_reduced(red)
    assert a2.word_matrix(red) == a2.word_matrix((0, 1, 0, 1))
    already = (0, 1)
    assert a2.reduce_word(already) == already
    # every word of length <= 3 reduces to an equal-element reduced word
    for l in range(4):
        for bits in range(2 ** l if l else 1):
            word = tuple((bits >> k) & 1 for k in range(l))
            red = a2.reduce_word(word)
            assert a2.is_reduced(red)
            assert a2.word_matrix(red) == a2.word_matrix(word)


def test_longest_elements():
    a1 = SymmetrizableCartan.named("A1")
    assert a1.longest_word() == (0,)
    a2 = SymmetrizableCartan.named("A2")
    w0 = a2.longest_word()
    assert len(w0) == 3
    assert a2.word_matrix(w0).tolist() == [[0, -1], [-1, 0]]
    b2 = SymmetrizableCartan.named("B2")
    w0 = b2.longest_word()
    assert len(w0) == 4
    assert b2.word_matrix(w0) == -IntMatrix.identity(2)


def test_enumerate_groups():
    assert len(SymmetrizableCartan.named("A1").enumerate_elements()) == 2
    assert len(SymmetrizableCartan.named("A2").enumerate_elements()) == 6
    assert len(SymmetrizableCartan.named("B2").enumerate_elements()) == 8
    assert len(SymmetrizableCartan.named("A3").enumerate_elements()) == 24
    assert len(SymmetrizableCartan.named("G2").enumerate_elements()) == 12


def test_enumeration_is_faithful_and_words_reduced():
    for name in ("A2", "B2", "A3"):
        c = SymmetrizableCartan.named(name)
        elements = c.enumerate_elements()
        matrices = {m for m, _ in elements}
        assert len(matrices) == len(elements)
        for m, w in elements:
            assert c.is_reduced(w)
            assert c.word_matrix(w) == m


def test_column_sign_coherence_of_enumerated_elements():
    for name in ("A2", "A3", "B2", "G2"):
        c = SymmetrizableCartan.named(name)
        for m, _ in c.enumerate_elements():
            assert is_column_sign_coherent(m)


def test_enumeration_guards():
    affine = SymmetrizableCartan(((2, -2), (-2, 2)))
    with pytest.raises(WeylError):
        affine.enumerate_elements()
    with pytest.raises(WeylError):
        affine.longest_word()


def test_find_symmetrizer():
    assert find_symmetrizer(((2, -1), (-2, 2))) == (2, 1)
    assert find_symmetrizer(((2, -1), (-1, 2))) == (1, 1)
    assert find_symmetrizer(((2, -1), (-3, 2))) == (3, 1)
    bad = ((2, -1, -2), (-2, 2, -1), (-1, -2, 2))
    with pytest.raises(WeylError):
        find_symmetrizer(bad)


def test_gcm_validation():
    with pytest.raises(WeylError):
        SymmetrizableCartan(((2, 1), (1, 2)))
    with pytest.raises(WeylError):
        SymmetrizableCartan(((1, 0), (0, 2)))
    with pytest.raises(WeylError):
        SymmetrizableCartan(((2, -1), (0, 2)))


def test_dynkin_detection():
    assert SymmetrizableCartan.named("A3").is_dynkin()
    assert SymmetrizableCartan.named("G2").is_dynkin()
    assert not SymmetrizableCartan(((2, -2), (-2, 2))).is_dynkin()
