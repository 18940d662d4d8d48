import random

from scrolls.linalg import (
    det,
    identity_matrix,
    integer_kernel,
    mat_mul,
    nullspace_fraction,
    rank_fraction,
    smith_normal_form,
    snf_diagonal,
    solve_fraction,
)


def assert_snf_contract(A):
    D, U, V = smith_normal_form(A)
    assert mat_mul(mat_mul(U, A), V) == D
    assert abs(det(U)) == 1
    assert abs(det(V)) == 1
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    for i in range(len(D)):
        for j in range(len(D[0])):
            if i != j:
                assert D[i][j] == 0
    for a, b in zip(diag, diag[1:]):
        if a:
            assert b % a == 0
        else:
            assert b == 0
    assert all(d >= 0 for d in diag)


def test_snf_1x1():
    D, U, V = smith_normal_form([[2]])
    assert D == [[2]]


def test_snf_identity():
    D, U, V = smith_normal_form(identity_matrix(3))
    assert D == identity_matrix(3)


def test_snf_lattice_map_of_scroll_0112():
    # rows of the Z^2 -> Z^6 map for F(0,1,1,2); trivial invariant factors
    # certify that the quotient lattice N is free of rank 4
    A = [[1, 1, 0, -1, -1, -2], [0, 0, 1, 1, 1, 1]]
    assert_snf_contract(A)
    assert snf_diagonal(A) == [1, 1]


def test_snf_divisibility_example():
    A = [[2, 4, 4], [-6, 6, 12], [10, 4, 16]]
    assert_snf_contract(A)
    d = snf_diagonal(A)
    assert d == [2, 2, 156]  # known SNF of this classic example


def test_snf_random_matrices():
    rng = random.Random(7)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        assert_snf_contract(A)


def test_integer_kernel():
    A = [[1, 1, -1], [0, 2, -2]]
    K = integer_kernel(A)
    assert len(K) == 1
    v = K[0]
    assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    from math import gcd

    assert gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2])) == 1


def test_solve_and_nullspace():
    A = [[1, 2], [3, 4]]
    x = solve_fraction(A, [5, 6])
    assert [a * x[0] + b * x[1] for a, b in A] == [5, 6]
    assert solve_fraction([[1, 1], [1, 1]], [0, 1]) is None
    ns = nullspace_fraction([[1, 1, 1]])
    assert len(ns) == 2
    assert rank_fraction([[1, 1, 1], [2, 2, 2]]) == 1
