from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quintic_mirror.exactnum import QQ, ZETA5_FIELD
from quintic_mirror.linalg import (
    SquareExactMatrix,
    canonical_kernel_basis,
    canonical_sign,
    hermite_rows,
    integer_kernel_basis,
    integer_left_kernel_basis,
    integer_matmul,
    is_unimodular,
    rational_inverse,
    rational_rank,
    smith_normal_form,
    solve_rational,
    unimodular_inverse,
)


def _random_int_matrix(rng: random.Random, m: int, n: int) -> list:
    return [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]


def _random_unimodular(rng: random.Random, n: int, steps: int = 12) -> list:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i = rng.randrange(n)
        j = rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    return rows


# -- rational elimination ----------------------------------------------------


def test_rational_rank_cases() -> None:
    assert rational_rank([[1, 2], [2, 4]]) == 1
    assert rational_rank([[1, 0], [0, 1]]) == 2
    assert rational_rank([[0, 0]]) == 0


def test_solve_rational_unique_and_inconsistent() -> None:
    sol = solve_rational([[2, 0], [0, 4]], [1, 1])
    assert sol == (Fraction(1, 2), Fraction(1, 4))
    assert solve_rational([[1, 1], [1, 1]], [0, 1]) is None


def test_rational_inverse_round_trip() -> None:
    rows = [[1, 2], [3, 5]]
    inv = rational_inverse(rows)
    prod = [
        [sum(Fraction(rows[i][k]) * inv[k][j] for k in range(2)) for j in range(2)]
        for i in range(2)
    ]
    assert prod == [[1, 0], [0, 1]]


# -- Smith normal form -------------------------------------------------------


def test_smith_frozen_example() -> None:
    assert smith_normal_form([[2, 4], [6, 8]]).divisors == (2, 4)


def test_smith_decomposition_properties(seed: int = 20260822) -> None:
    rng = random.Random(seed)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 5)
        a = _random_int_matrix(rng, m, n)
        dec = smith_normal_form(a)
        assert is_unimodular(dec.u)
        assert is_unimodular(dec.v)
        uav = integer_matmul(integer_matmul(dec.u, a), dec.v)
        assert uav == dec.d
        divisors = dec.divisors
        for i in range(m):
            for j in range(n):
                expected = divisors[i] if i == j and i < len(divisors) else 0
                assert uav[i][j] == expected
        for d, e in zip(divisors, divisors[1:]):
            assert d >= 0
            if d:
                assert e % d == 0
            else:
                assert e == 0


def test_integer_kernel_is_saturated() -> None:
    basis = integer_kernel_basis([[2, 2]])
    assert len(basis) == 1
    assert tuple(map(abs, basis[0])) == (1, 1)


def test_left_kernel_matches_transposed_kernel() -> None:
    rows = [[1, 0], [0, 1], [1, 1]]
    left = integer_left_kernel_basis(rows)
    assert len(left) == 1
    v = left[0]
    assert [sum(v[i] * rows[i][j] for i in range(3)) for j in range(2)] == [0, 0]


def test_hermite_rows_reduced_form() -> None:
    rows = hermite_rows([[4, 6], [2, 4]])
    assert [list(r) for r in rows] == [[2, 0], [0, 2]]
    assert all(next(x for x in r if x != 0) > 0 for r in rows)


def test_canonical_sign_rules() -> None:
    assert canonical_sign((-1, 1)) == (1, -1)
    assert canonical_sign((-2, -3, 1)) == (2, 3, -1)
    assert canonical_sign((-5, 1, 1, 1, 1, 1)) == (-5, 1, 1, 1, 1, 1)
    assert canonical_sign((0, 0)) == (0, 0)


def test_canonical_kernel_basis_is_deterministic() -> None:
    first = canonical_kernel_basis([[1, 1, 1]])
    second = canonical_kernel_basis([[1, 1, 1]])
    assert first == second
    assert len(first) == 2
    for v in first:
        assert sum(v) == 0


def test_unimodular_inverse_round_trip(seed: int = 9) -> None:
    rng = random.Random(seed)
    for _ in range(20):
        u = _random_unimodular(rng, rng.randint(2, 4))
        inv = unimodular_inverse(u)
        n = len(u)
        prod = integer_matmul(u, inv)
        assert prod == tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n)
        )


def test_unimodular_inverse_rejects_non_unimodular() -> None:
    with pytest.raises(ValueError):
        unimodular_inverse([[2, 0], [0, 1]])
    assert not is_unimodular([[2, 0], [0, 1]])


# -- dense exact matrices ----------------------------------------------------


def test_square_matrix_det_rank_inverse() -> None:
    m = SquareExactMatrix.from_rows(QQ, [[1, 2], [3, 5]])
    assert m.det() == -1
    assert m.rank() == 2
    assert (m * m.inverse()).is_identity()
    singular = SquareExactMatrix.from_rows(QQ, [[1, 2], [2, 4]])
    assert singular.rank() == 1
    with pytest.raises(ValueError):
        singular.inverse()


def test_square_matrix_powers_and_transpose() -> None:
    m = SquareExactMatrix.from_rows(QQ, [[1, 1], [0, 1]])
    assert (m**3).entry(0, 1) == 3
    assert (m**0).is_identity()
    assert m.transpose().entry(1, 0) == 1


def test_square_matrix_over_cyclotomic_field() -> None:
    z = ZETA5_FIELD.zeta()
    m = SquareExactMatrix.from_rows(
        ZETA5_FIELD, [[z, ZETA5_FIELD.zero()], [ZETA5_FIELD.zero(), z**2]]
    )
    inv = m.inverse()
    assert (m * inv).is_identity()
    assert inv.entry(0, 0).coeffs == (z**4).coeffs
    assert m.det().coeffs == (z**3).coeffs
