import random
from fractions import Fraction

import pytest

from glsuper.ratlinalg import (
    identity,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
    sparse_mul,
    to_sparse_cols,
    transpose,
    zeros,
)


def random_matrix(rng, rows, cols, density=0.7):
    return [
        [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) if rng.random() < density else Fraction(0)
         for _ in range(cols)]
        for _ in range(rows)
    ]


def test_rref_identity():
    eye = identity(3)
    reduced, pivots = rref(eye)
    assert reduced == eye and pivots == [0, 1, 2]


def test_rank_and_nullity_add_up():
    rng = random.Random(41)
    for _ in range(25):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        mat = random_matrix(rng, rows, cols)
        r = rank(mat)
        kernel = nullspace(mat)
        assert r + len(kernel) == cols
        for vec in kernel:
            assert all(v == 0 for v in mat_vec(mat, vec))


def test_solve_round_trip():
    rng = random.Random(43)
    for _ in range(25):
        n = rng.randint(1, 5)
        mat = random_matrix(rng, n + 1, n, density=0.9)
        if rank(mat) < n:
            continue
        x_true = [[Fraction(rng.randint(-3, 3))] for _ in range(n)]
        rhs = mat_mul(mat, x_true)
        assert solve(mat, rhs) == x_true


def test_solve_detects_inconsistency():
    mat = [[Fraction(1)], [Fraction(1)]]
    rhs = [[Fraction(1)], [Fraction(2)]]
    with pytest.raises(ValueError):
        solve(mat, rhs)


def test_sparse_mul_matches_dense():
    rng = random.Random(47)
    for _ in range(15):
        n = rng.randint(1, 6)
        a = random_matrix(rng, n, n, density=0.4)
        b = random_matrix(rng, n, n, density=0.4)
        dense = mat_mul(a, b)
        sparse = sparse_mul(to_sparse_cols(a), to_sparse_cols(b))
        rebuilt = zeros(n, n)
        for j, col in enumerate(sparse):
            for i, val in col.items():
                rebuilt[i][j] = val
        assert rebuilt == dense


def test_transpose():
    mat = [[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]
    assert transpose(transpose(mat)) == mat
