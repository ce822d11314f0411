import random

import pytest

from cycloderiv import (
    IntMatrix,
    RatVector,
    SingularMatrixError,
    adjugate,
    det,
    mat_vec,
    solve_unique,
)


def _random_matrix(rng, d, bound=9):
    return IntMatrix(d, d, tuple(rng.randint(-bound, bound) for _ in range(d * d)))


def _cofactor_det(m):
    # small-scale oracle, independent of the fraction-free path
    if m.rows == 1:
        return m.at(0, 0)
    total = 0
    for j in range(m.cols):
        a = m.at(0, j)
        if a:
            term = a * _cofactor_det(m.minor(0, j))
            total += -term if j % 2 else term
    return total


def test_matrix_construction_validation():
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        IntMatrix(0, 1, ())
    with pytest.raises(ValueError):
        IntMatrix.from_rows([[1, 2], [3]])


def test_matrix_accessors():
    m = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert m.at(1, 2) == 6
    assert m.row(0) == (1, 2, 3)
    assert m.column(1) == (2, 5)
    assert IntMatrix.from_columns([(1, 4), (2, 5), (3, 6)]) == m


def test_det_identity_and_rejections():
    assert det(IntMatrix.identity(4)) == 1
    with pytest.raises(ValueError):
        det(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))


def test_det_2x2_matches_formula():
    rng = random.Random(1)
    for _ in range(200):
        a, b, c, d = (rng.randint(-9, 9) for _ in range(4))
        assert det(IntMatrix.from_rows([[a, b], [c, d]])) == a * d - b * c


def test_det_matches_cofactor_oracle_up_to_5():
    rng = random.Random(2)
    for _ in range(200):
        m = _random_matrix(rng, rng.randint(1, 5))
        assert det(m) == _cofactor_det(m)


def test_det_handles_zero_pivots():
    m = IntMatrix.from_rows([[0, 1], [1, 0]])
    assert det(m) == -1
    assert det(IntMatrix.from_rows([[0, 0], [0, 0]])) == 0
    assert det(IntMatrix.from_rows([[0, 1, 2], [0, 2, 4], [1, 0, 0]])) == 0


def test_det_is_multiplicative():
    rng = random.Random(3)
    for _ in range(100):
        d = rng.randint(1, 6)
        a = _random_matrix(rng, d, 5)
        b = _random_matrix(rng, d, 5)
        assert det(a @ b) == det(a) * det(b)


def test_adjugate_identity_and_2x2():
    assert adjugate(IntMatrix.identity(5)) == IntMatrix.identity(5)
    m = IntMatrix.from_rows([[3, -2], [7, 4]])
    assert adjugate(m) == IntMatrix.from_rows([[4, 2], [-7, 3]])


def test_adjugate_product_identity_random():
    rng = random.Random(4)
    for _ in range(50):
        d = rng.randint(1, 5)
        m = _random_matrix(rng, d)
        adj = adjugate(m)
        scaled = IntMatrix(d, d, tuple(det(m) if i == j else 0 for i in range(d) for j in range(d)))
        assert m @ adj == scaled
        assert adj @ m == scaled


def test_mat_vec():
    m = IntMatrix.identity(3)
    assert mat_vec(m, (4, 5, 6)) == (4, 5, 6)
    zero = IntMatrix(2, 3, (0,) * 6)
    assert mat_vec(zero, (1, 2, 3)) == (0, 0)
    rng = random.Random(6)
    a = _random_matrix(rng, 3)
    for j in range(3):
        e = tuple(1 if i == j else 0 for i in range(3))
        assert mat_vec(a, e) == a.column(j)
    with pytest.raises(ValueError):
        mat_vec(m, (1, 2))


def test_ratvector_reduction():
    r = RatVector.reduced((2, 4, 6), 4)
    assert r.numerators == (1, 2, 3)
    assert r.denominator == 2
    # negative denominators are normalized away
    r = RatVector.reduced((2, -4), -2)
    assert r.numerators == (-1, 2)
    assert r.denominator == 1
    # the zero vector reduces to denominator 1
    r = RatVector.reduced((0, 0), 7)
    assert r.numerators == (0, 0)
    assert r.denominator == 1
    assert r.is_integral
    with pytest.raises(ValueError):
        RatVector((2, 4), 6)  # unreduced direct construction
    with pytest.raises(ValueError):
        RatVector.reduced((1,), 0)


def test_solve_identity_is_exact_copy():
    sol = solve_unique(IntMatrix.identity(3), (7, -8, 9))
    assert sol.numerators == (7, -8, 9)
    assert sol.denominator == 1


def test_solve_roundtrip_random():
    rng = random.Random(8)
    done = 0
    while done < 100:
        d = rng.randint(1, 6)
        m = _random_matrix(rng, d)
        if det(m) == 0:
            continue
        x0 = tuple(rng.randint(-9, 9) for _ in range(d))
        sol = solve_unique(m, mat_vec(m, x0))
        assert sol.numerators == x0
        assert sol.denominator == 1
        done += 1


def test_solve_reports_singular_and_mismatched_inputs():
    singular = IntMatrix.from_rows([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError, match="det = 0"):
        solve_unique(singular, (1, 1))
    with pytest.raises(ValueError):
        solve_unique(IntMatrix.identity(2), (1, 2, 3))
    with pytest.raises(ValueError):
        solve_unique(IntMatrix(2, 3, (0,) * 6), (1, 1))


def test_solve_result_satisfies_scaled_system():
    rng = random.Random(9)
    for _ in range(50):
        d = rng.randint(1, 5)
        m = _random_matrix(rng, d)
        if det(m) == 0:
            continue
        c = tuple(rng.randint(-9, 9) for _ in range(d))
        sol = solve_unique(m, c)
        assert mat_vec(m, sol.numerators) == tuple(sol.denominator * x for x in c)
