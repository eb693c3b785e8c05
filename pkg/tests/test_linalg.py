import random
from fractions import Fraction

import pytest

from gmatrices.linalg import (
    EchelonSet,
    IntMatrix,
    RatMatrix,
    ShapeError,
    SingularMatrixError,
    is_row_sign_coherent,
)


def test_rref_identity():
    m = RatMatrix([[1, 0], [0, 1]])
    reduced, rank, pivots = m.rref()
    assert reduced == m and rank == 2 and pivots == (0, 1)


def test_rref_dependent_rows():
    m = RatMatrix([[1, 2], [2, 4]])
    reduced, rank, pivots = m.rref()
    assert reduced.tolist() == [[1, 2], [0, 0]]
    assert rank == 1


def test_rref_row_swap():
    m = RatMatrix([[0, 1], [1, 0]])
    reduced, rank, _ = m.rref()
    assert reduced == RatMatrix.identity(2) and rank == 2


def test_kernel_basis_examples():
    assert RatMatrix.identity(2).kernel_basis() == []
    assert len(RatMatrix([[0, 0], [0, 0]]).kernel_basis()) == 2
    assert RatMatrix([[1, 1]]).kernel_basis() == [(1, -1)]


def test_solve_examples():
    assert RatMatrix.identity(2).solve((3, 4)) == (3, 4)
    sol = RatMatrix([[1, 1]]).solve((2,))
    assert sol is not None and sum(sol) == 2
    assert RatMatrix([[1], [1]]).solve((1, 2)) is None
    with pytest.raises(ShapeError):
        RatMatrix([[1, 1]]).solve((1, 2))


def test_det_and_inverse_examples():
    assert IntMatrix.identity(3).det() == 1
    m = IntMatrix([[1, 1], [-1, 0]])
    assert m.det() == 1
    inv = m.inverse().to_int()
    assert inv.tolist() == [[0, -1], [1, 1]]
    assert (inv @ m).is_identity()
    with pytest.raises(SingularMatrixError):
        RatMatrix([[1, 1], [1, 1]]).inverse()


def test_rank_nullity_and_solution_check():
    rng = random.Random(23)
    for _ in range(40):
        rows = [
            [rng.randint(-4, 4) for _ in range(rng.randint(1, 6))]
            for _ in range(rng.randint(1, 6))
        ]
        width = max(len(r) for r in rows)
        rows = [r + [0] * (width - len(r)) for r in rows]
        m = RatMatrix(rows)
        assert m.rank() + len(m.kernel_basis()) == m.cols
        for vec in m.kernel_basis():
            assert all(x == 0 for x in m.matvec(vec))
        rhs = m.matvec([rng.randint(-3, 3) for _ in range(m.cols)])
        sol = m.solve(rhs)
        assert sol is not None and m.matvec(sol) == tuple(Fraction(x) for x in rhs)


def test_det_multiplicative():
    rng = random.Random(29)
    for _ in range(30):
        n = rng.randint(1, 4)
        a = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        b = IntMatrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        assert (a @ b).det() == a.det() * b.det()


def test_matmul_shape_error():
    with pytest.raises(ShapeError):
        IntMatrix([[1, 2]]) @ IntMatrix([[1, 2]])


def test_row_sign_coherence():
    assert is_row_sign_coherent(IntMatrix([[1, 2], [-1, 0]]))
    assert not is_row_sign_coherent(IntMatrix([[1, -2], [0, 0]]))


def test_echelon_set_canonical_and_membership():
    es = EchelonSet(3)
    assert es.insert([2, 4, 0])
    assert es.insert([0, 0, 5])
    assert not es.insert([2, 4, 5])
    assert es.contains([4, 8, -15])
    assert not es.contains([1, 0, 0])
    other = EchelonSet(3)
    other.extend([[0, 0, 1], [1, 2, 3]])
    assert es == other
    coords = es.coordinates([1, 2, 7])
    assert coords is not None
    rebuilt = [0, 0, 0]
    for c, row in zip(coords, es.rows):
        for i, x in enumerate(row):
            rebuilt[i] += c * x
    assert rebuilt == [1, 2, 7]


def test_unimodular_inverse_guard():
    with pytest.raises(Exception):
        IntMatrix([[2, 0], [0, 1]]).unimodular_inverse()
