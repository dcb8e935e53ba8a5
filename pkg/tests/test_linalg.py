import random
from fractions import Fraction

from detfold.algebra import QQ, PrimeField, int_det_bareiss, kernel_rank_det, matrix_rank, nullspace


def test_kernel_examples():
    rank, det, basis = kernel_rank_det(
        [[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]], QQ
    )
    assert rank == 2 and det == 0
    assert basis == [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ]

    rank, det, basis = kernel_rank_det(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], QQ
    )
    assert (rank, det, basis) == (4, 1, [])

    rank, det, basis = kernel_rank_det(
        [[1, 0, 0, 0], [0, -2, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0]], QQ
    )
    assert rank == 3 and det == 0
    assert basis == [[0, 0, 0, 1]]


def test_kernel_properties_random():
    rng = random.Random(9)
    gf = PrimeField(13)
    for _ in range(60):
        n = rng.choice((3, 4))
        m = [[gf.from_int(rng.randrange(13)) for _ in range(n)] for _ in range(n)]
        rank, det, basis = kernel_rank_det(m, gf)
        assert rank + len(basis) == n
        assert (rank == n) == bool(det)
        for v in basis:
            for row in m:
                s = gf.zero()
                for a, b in zip(row, v):
                    s = s + a * b
                assert not s


def test_det_sign_convention():
    rank, det, _ = kernel_rank_det([[0, 1], [1, 0]], QQ)
    assert det == -1
    rank, det, _ = kernel_rank_det([[2, 1], [1, 1]], QQ)
    assert det == 1


def test_matrix_rank_rectangular():
    assert matrix_rank([[1, 2, 3], [2, 4, 6]], QQ) == 1
    assert matrix_rank([[1, 0, 0], [0, 1, 0]], QQ) == 2


def test_nullspace():
    ns = nullspace([[1, 0, 0, -1], [0, 1, -1, 0]], 4, QQ)
    assert len(ns) == 2
    for v in ns:
        assert v[0] == v[3] and v[1] == v[2]


def test_int_det_bareiss_matches_fraction_elimination():
    rng = random.Random(21)
    for _ in range(40):
        n = rng.choice((2, 3, 4, 5))
        m = [[rng.randrange(-9, 10) for _ in range(n)] for _ in range(n)]
        d1 = int_det_bareiss(m)
        _, d2, _ = kernel_rank_det([[Fraction(c) for c in row] for row in m], QQ)
        assert Fraction(d1) == d2
