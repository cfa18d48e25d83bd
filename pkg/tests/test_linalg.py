from __future__ import annotations

import random

import pytest
import sympy

from qminkowski import linalg
from qminkowski.scalars import QFrac, qpow


def _rand_matrix(rng, n, m, density=0.6):
    return [[rng.randint(-4, 4) if rng.random() < density else 0 for _ in range(m)] for _ in range(n)]


def test_rank_and_nullspace_match_sympy():
    rng = random.Random(7)
    for _ in range(40):
        n, m = rng.randint(1, 5), rng.randint(1, 6)
        A = _rand_matrix(rng, n, m)
        assert linalg.rank(A) == sympy.Matrix(A).rank()
        ns = linalg.nullspace(A)
        assert len(ns) == m - sympy.Matrix(A).rank()
        for v in ns:
            assert all(x == 0 for x in linalg.matvec(linalg.to_qfrac(A), v))


def test_solve_and_inverse():
    rng = random.Random(11)
    for _ in range(20):
        A = _rand_matrix(rng, 4, 4, 0.9)
        if sympy.Matrix(A).det() == 0:
            with pytest.raises(linalg.SingularMatrixError):
                linalg.inverse(A)
            continue
        inv = linalg.inverse(A)
        assert linalg.matmul(linalg.to_qfrac(A), inv) == linalg.identity(4)
        b = [rng.randint(-3, 3) for _ in range(4)]
        x = linalg.solve(A, b)
        assert linalg.matvec(linalg.to_qfrac(A), x) == linalg.to_qfrac([b])[0]


def test_function_field_entries():
    q = qpow(1)
    A = [[q, 1], [q * q, q]]  # rank 1 over Q(q)
    assert linalg.rank(A) == 1
    (v,) = linalg.nullspace(A)
    assert all(x == 0 for x in linalg.matvec(linalg.to_qfrac(A), v))
    B = [[q, 1], [1, q]]
    inv = linalg.inverse(B)
    assert inv[0][0] == q / (q * q - 1)


def test_kron_and_transpose():
    A = linalg.to_qfrac([[1, 2], [3, 4]])
    I = linalg.identity(2)
    K = linalg.kron(A, I)
    assert K[2][0] == QFrac(3) and K[3][1] == QFrac(3) and K[0][1] == 0
    assert linalg.transpose(linalg.transpose(A)) == A
