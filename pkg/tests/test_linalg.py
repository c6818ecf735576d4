from fractions import Fraction

import pytest

from k3lat import linalg
from k3lat.gram_data import E8, A2, U


def is_unimodular(M):
    return abs(linalg.det(M)) == 1


def test_hnf_identity():
    H, U_ = linalg.hnf(linalg.identity(3))
    assert H == linalg.identity(3)
    assert U_ == linalg.identity(3)


def test_hnf_small():
    M = [[2, 4], [1, 3]]
    H, T = linalg.hnf(M)
    # our convention: positive pivots, entries above reduced into [0, pivot)
    assert H == [[1, 1], [0, 2]]
    assert linalg.mat_mul(T, M) == H
    assert is_unimodular(T)


def test_hnf_zero():
    M = [[0, 0], [0, 0]]
    H, T = linalg.hnf(M)
    assert H == M
    assert T == linalg.identity(2)


def test_hnf_canonical_under_row_mixing():
    M = [[2, 4], [1, 3]]
    mixed = [[3, 7], [1, 3]]  # row0 + row1, row1: same row span
    assert linalg.hnf(M)[0] == linalg.hnf(mixed)[0]


def test_snf_diagonal_stays():
    D, _, _ = linalg.snf([[2, 0], [0, 2]])
    assert D == [[2, 0], [0, 2]]


def test_snf_small():
    M = [[2, 1], [1, 2]]
    D, Um, Vm = linalg.snf(M)
    assert D == [[1, 0], [0, 3]]
    assert linalg.mat_mul(linalg.mat_mul(Um, M), Vm) == D
    assert is_unimodular(Um) and is_unimodular(Vm)


def test_snf_e8_doubled():
    M = [[2 * a for a in row] for row in E8]
    D, _, _ = linalg.snf(M)
    assert [D[i][i] for i in range(8)] == [2] * 8


def test_snf_det_and_divisibility():
    M = [[6, 4, 2], [4, 8, 6], [2, 6, 10]]
    D, _, _ = linalg.snf(M)
    diag = [D[i][i] for i in range(3)]
    prod = diag[0] * diag[1] * diag[2]
    assert prod == abs(linalg.det(M))
    for a, b in zip(diag, diag[1:]):
        assert b % a == 0


def test_kernel_identity_empty():
    assert linalg.kernel_basis(linalg.identity(2)) == []


def test_kernel_rank_one():
    assert linalg.kernel_basis([[1, 1], [1, 1]]) == [[1, -1]]


def test_kernel_two_cycle():
    g = [[0, 1], [1, 0]]
    gmi = [[g[i][j] - (i == j) for j in range(2)] for i in range(2)]
    assert linalg.kernel_basis(gmi) == [[1, 1]]


def test_kernel_is_saturated():
    M = [[2, 4], [1, 2]]
    K = linalg.kernel_basis(M)
    assert K == [[1, -2]]


def test_lll_identity_unchanged():
    G2, T = linalg.lll_reduce([[1, 0], [0, 1]])
    assert G2 == [[1, 0], [0, 1]]
    assert is_unimodular(T)


def test_lll_preserves_det_and_even():
    G = [[4, 2], [2, 4]]
    G2, T = linalg.lll_reduce(G)
    assert linalg.det(G2) == 12
    assert linalg.mat_mul(linalg.mat_mul(linalg.transpose(T), G), T) == G2
    assert all(G2[i][i] % 2 == 0 for i in range(2))


def test_lll_negative_definite():
    G = [[-4, -2], [-2, -4]]
    G2, T = linalg.lll_reduce(G)
    assert linalg.det(G2) == 12
    assert linalg.mat_mul(linalg.mat_mul(linalg.transpose(T), G), T) == G2


def test_lll_rejects_indefinite():
    with pytest.raises(ValueError):
        linalg.lll_reduce(U)


def test_lll_reduces_skewed_basis():
    # heavily sheared copy of Z^2
    G = [[1, 0], [0, 1]]
    R = [[1, 0], [137, 1]]
    sheared = linalg.mat_mul(linalg.mat_mul(R, G), linalg.transpose(R))
    G2, _ = linalg.lll_reduce(sheared)
    assert G2 == [[1, 0], [0, 1]]


def test_congruent_diagonal_signs():
    diag = linalg.congruent_diagonal(U)
    assert sorted(1 if d > 0 else -1 for d in diag) == [-1, 1]
    diag = linalg.congruent_diagonal(E8)
    assert all(d > 0 for d in diag)


def test_congruent_diagonal_degenerate():
    diag = linalg.congruent_diagonal([[0, 0], [0, 2]])
    assert sorted(diag) == [Fraction(0), Fraction(2)]


def test_inverse_and_solve():
    Minv = linalg.inverse(A2)
    prod = linalg.mat_mul(Minv, linalg.mat_frac(A2))
    assert prod == linalg.mat_frac(linalg.identity(2))
    x = linalg.solve_in_rowspace([[1, 2], [0, 3]], [2, 7])
    assert [a * 1 for a in x] == [Fraction(2), Fraction(1)]
    assert linalg.solve_in_rowspace([[1, 0]], [0, 1]) is None


def test_det_bareiss_matches_snf():
    mats = [E8, A2, U, [[3, 1, 4], [1, 5, 9], [2, 6, 5]]]
    for M in mats:
        D, _, _ = linalg.snf(M)
        prod = 1
        for i in range(len(M)):
            prod *= D[i][i]
        assert prod == abs(linalg.det(M))
