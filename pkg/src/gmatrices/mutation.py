"""Matrix mutation, the elementary row-replacement matrices, and the
identities tying them to G-matrices of exchanged tilting modules."""

from __future__ import annotations

import time

from .linalg import IntMatrix
from .reports import record


def _pos(a):
    return a if a > 0 else 0


def mutate(matrix: IntMatrix, k: int) -> IntMatrix:
    """Mutation in direction k (0-based column index) of an l x m matrix."""
    if not 0 <= k < matrix.cols:
        raise IndexError(f"direction {k} out of range for {matrix.cols} columns")
    rows = matrix.tolist()
    out = []
    for i in range(matrix.rows):
        new_row = []
        for j in range(matrix.cols):
            if i == k or j == k:
                new_row.append(-rows[i][j])
            else:
                new_row.append(
                    rows[i][j]
                    + _pos(-rows[i][k]) * rows[k][j]
                    + rows[i][k] * _pos(rows[k][j])
                )
        out.append(new_row)
    return IntMatrix(out)


def s_matrix(matrix: IntMatrix, k: int) -> IntMatrix:
    """Identity except row k, which is [-delta_kj + max(0, -b_kj)]."""
    if matrix.rows != matrix.cols:
        raise ValueError("square matrix required")
    if not 0 <= k < matrix.cols:
        raise IndexError(f"direction {k} out of range")
    n = matrix.rows
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[k] = [
        (-1 if j == k else 0) + _pos(-matrix[k, j]) for j in range(n)
    ]
    return IntMatrix(rows)


def check_mutation_conjugation(matrix: IntMatrix, k: int, claim="gls-conj"):
    """S(B,k)^t B S(B,k) = mu_k(B) for skew-symmetric B, both sign choices,
    and the involutivity of S(-B,k)."""
    t0 = time.perf_counter()
    if not matrix.is_skew_symmetric():
        raise ValueError("skew-symmetric matrix required")
    mu = mutate(matrix, k)
    s_plus = s_matrix(matrix, k)
    s_minus = s_matrix(-matrix, k)
    ident = IntMatrix.identity(matrix.rows)
    lhs = (s_plus.transpose() @ matrix @ s_plus,
           s_minus.transpose() @ matrix @ s_minus,
           s_minus @ s_minus)
    rhs = (mu, mu, ident)
    return record(
        claim,
        "matrix",
        {"k": k + 1, "m": matrix.rows},
        lhs,
        rhs,
        time.perf_counter() - t0,
    )


def check_mutation_via_g(matrix: IntMatrix, k: int, claim="thm-3.11"):
    """G_U B G_U^t = mu_k(B) with G_U = S(-B,k)^t, for skew-symmetric B."""
    t0 = time.perf_counter()
    if not matrix.is_skew_symmetric():
        raise ValueError("skew-symmetric matrix required")
    g_u = s_matrix(-matrix, k).transpose()
    lhs = g_u @ matrix @ g_u.transpose()
    rhs = mutate(matrix, k)
    return record(
        claim,
        "matrix",
        {"k": k + 1, "m": matrix.rows},
        lhs,
        rhs,
        time.perf_counter() - t0,
    )


def random_skew_symmetric(rng, size, bound=4):
    rows = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = rng.randint(-bound, bound)
            rows[i][j] = v
            rows[j][i] = -v
    return IntMatrix(rows)


def mutation_batch(seed=2024, count=1000, max_size=8, bound=4):
    """Fixed-seed batch over random skew-symmetric matrices and every
    direction: involution, negation equivariance, conjugation, G-realization.

    Returns one aggregated report per property.
    """
    import random

    rng = random.Random(seed)
    t0 = time.perf_counter()
    involution_ok = negation_ok = conjugation_ok = realization_ok = True
    checked = 0
    for _ in range(count):
        size = rng.randint(2, max_size)
        b = random_skew_symmetric(rng, size, bound)
        for k in range(size):
            mu = mutate(b, k)
            if mutate(mu, k) != b:
                involution_ok = False
            if mutate(-b, k) != -mu:
                negation_ok = False
            rep = check_mutation_conjugation(b, k)
            if not rep.passed:
                conjugation_ok = False
            rep = check_mutation_via_g(b, k)
            if not rep.passed:
                realization_ok = False
            checked += 1
    elapsed = time.perf_counter() - t0
    inputs = {"seed": seed, "count": count, "directions": checked}
    return [
        record("mut-involution", "matrix", inputs, [[1]],
               [[1 if involution_ok else 0]], elapsed),
        record("mut-negation", "matrix", inputs, [[1]],
               [[1 if negation_ok else 0]], elapsed),
        record("gls-conj", "matrix", inputs, [[1]],
               [[1 if conjugation_ok else 0]], elapsed),
        record("thm-3.11", "matrix", inputs, [[1]],
               [[1 if realization_ok else 0]], elapsed),
    ]
