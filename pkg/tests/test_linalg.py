"""Exact dense linear algebra over Q(√3) and Q(√3, i)."""

import random

import pytest

from okubic.field import C3, F3, sample_c3, sample_f3
from okubic.linalg import (
    COMPACT,
    SPLIT,
    ExactMatrix,
    Mat3,
    determinant,
    eta_dagger,
    is_eta_hermitian,
    nullspace,
    rank,
    rref,
    symmetric_signature,
)


def _random_mat3(rng):
    return Mat3([[sample_c3(rng) for _ in range(3)] for _ in range(3)])


def test_mat3_inverse_and_det():
    rng = random.Random(201)
    for _ in range(30):
        m = _random_mat3(rng)
        if not m.det():
            continue
        assert m @ m.inverse() == Mat3.identity()
        assert m.inverse() @ m == Mat3.identity()
    with pytest.raises(ZeroDivisionError):
        Mat3.zero().inverse()


def test_det_is_multiplicative():
    rng = random.Random(202)
    for _ in range(30):
        a, b = _random_mat3(rng), _random_mat3(rng)
        assert (a @ b).det() == a.det() * b.det()


def test_eta_dagger_is_an_involution():
    rng = random.Random(203)
    for flavor in (COMPACT, SPLIT):
        for _ in range(20):
            m = _random_mat3(rng)
            assert eta_dagger(eta_dagger(m, flavor), flavor) == m


def test_eta_hermitian_examples():
    i = C3(0, 1)
    h = Mat3([[1, i, 0], [-i, 0, 2], [0, 2, -1]])
    assert is_eta_hermitian(h, COMPACT)
    assert not is_eta_hermitian(h, SPLIT)
    # first row/column imaginary parts flip sign under η = diag(-1,1,1)
    hs = Mat3([[1, i, i], [i, 0, 2], [i, 2, -1]])
    assert is_eta_hermitian(hs, SPLIT)
    assert not is_eta_hermitian(hs, COMPACT)


def test_rref_pinned_example():
    m = ExactMatrix([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    red, pivots = rref(m)
    assert pivots == [0, 2]
    assert red.entries[0] == (F3(1), F3(2), F3())
    assert red.entries[1] == (F3(), F3(), F3(1))
    assert rank(m) == 2


def test_nullspace_exactness():
    rng = random.Random(204)
    for _ in range(30):
        rows = rng.randrange(1, 6)
        cols = rng.randrange(1, 6)
        m = ExactMatrix(
            [[sample_f3(rng) for _ in range(cols)] for _ in range(rows)]
        )
        basis = nullspace(m)
        assert len(basis) == cols - rank(m)
        zero = [F3()] * rows
        for v in basis:
            assert m.mul_vec(v) == zero


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(205)
    for _ in range(30):
        entries = [[sample_f3(rng) for _ in range(3)] for _ in range(3)]
        m = ExactMatrix(entries)
        c = Mat3([[C3(x) for x in row] for row in entries])
        assert C3(determinant(m)) == c.det()


def test_signature_of_diagonal_matrices():
    m = ExactMatrix(
        [
            [F3(2), F3(), F3()],
            [F3(), F3(-1, 0), F3()],
            [F3(), F3(), F3()],
        ]
    )
    assert symmetric_signature(m) == (1, 1, 1)
    # entry involving √3: -2 + √3 < 0
    m2 = ExactMatrix([[F3(-2, 1)]])
    assert symmetric_signature(m2) == (0, 1, 0)


def test_signature_needs_off_diagonal_rescue():
    # hyperbolic plane: zero diagonal, signature (1, 1)
    m = ExactMatrix([[F3(), F3(1)], [F3(1), F3()]])
    assert symmetric_signature(m) == (1, 1, 0)


def test_signature_is_congruence_invariant_on_samples():
    rng = random.Random(206)
    for _ in range(20):
        n = 3
        a = [[sample_f3(rng) for _ in range(n)] for _ in range(n)]
        sym = [[a[i][j] + a[j][i] for j in range(n)] for i in range(n)]
        m = ExactMatrix(sym)
        pos, neg, zero = symmetric_signature(m)
        assert pos + neg + zero == n
        assert pos + neg == rank(m)
