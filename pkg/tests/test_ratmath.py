from fractions import Fraction as Fr

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rat_matrices, rationals
from isotori.ratmath import (
    DimensionError,
    RatMat,
    SingularMatrixError,
    det,
    format_rat,
    inverse,
    is_positive_definite,
    parse_rat,
    rank,
    solve,
)


def M(rows, ncols=None):
    return RatMat.from_rows([[Fr(x) for x in r] for r in rows], ncols)


def rank_by_columns(A: RatMat) -> int:
    """Elimination that walks rows for pivots and clears columns instead."""
    cols = [list(A.col(j)) for j in range(A.ncols)]
    r = 0
    used_rows = set()
    for col in range(len(cols)):
        piv = next((i for i in range(A.nrows) if i not in used_rows and cols[col][i] != 0), None)
        if piv is None:
            continue
        used_rows.add(piv)
        r += 1
        for other in range(col + 1, len(cols)):
            c = cols[other][piv] / cols[col][piv]
            cols[other] = [a - c * b for a, b in zip(cols[other], cols[col])]
    return r


def to_sympy(A: RatMat):
    return sympy.Matrix(A.nrows, A.ncols, [sympy.Rational(x.numerator, x.denominator)
                                           for r in A.rows for x in r])


# -- rank ---------------------------------------------------------------------

def test_rank_identity():
    assert rank(RatMat.identity(3)) == 3


def test_rank_empty():
    assert rank(RatMat.zeros(0, 4)) == 0
    assert rank(RatMat.zeros(3, 0)) == 0


def test_rank_dependent_rows():
    A = M([[1, 0, 0, "4/3"], [0, 1, 0, "4/3"], [0, 0, 1, 2], [2, 0, 0, "8/3"]])
    assert rank(A) == 3


@given(rat_matrices())
def test_rank_equals_rank_of_transpose(A):
    assert rank(A) == rank(A.transpose())


@given(rat_matrices())
def test_rank_matches_column_elimination_and_sympy(A):
    assert rank(A) == rank_by_columns(A)
    if A.nrows and A.ncols:
        assert rank(A) == to_sympy(A).rank()


@given(rat_matrices(max_cols=3, min_cols=1), st.data())
def test_rank_of_product_is_bounded(A, data):
    B = data.draw(rat_matrices(min_rows=A.ncols, max_rows=A.ncols, max_cols=3))
    assert rank(A @ B) <= min(rank(A), rank(B))


# -- solve --------------------------------------------------------------------

def test_solve_identity():
    b = (Fr(1, 2), Fr(-3), Fr(7, 5))
    assert solve(RatMat.identity(3), b) == b


def test_solve_inconsistent_overdetermined():
    A = M([[1, 0], [0, 1], [2, 2], [1, 2]])
    b = [Fr(70, 153), Fr(13, 18), Fr(172, 153), Fr(7, 6)]
    assert solve(A, b) is None
    # the forced solution from rows 1-2 misses row 3 by exactly this much
    assert 2 * Fr(70, 153) + 2 * Fr(13, 18) == Fr(361, 153)


def test_solve_consistent_overdetermined():
    A = M([[1, 0], [0, 1], [-1, 0], [0, -1]])
    assert solve(A, [-1, 1, 1, -1]) == (Fr(-1), Fr(1))


def test_solve_free_variables_are_zero():
    A = M([[1, 1, 0]])
    assert solve(A, [Fr(3)]) == (Fr(3), Fr(0), Fr(0))


def test_solve_zero_columns():
    A = RatMat.zeros(2, 0)
    assert solve(A, [0, 0]) == ()
    assert solve(A, [0, 1]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(DimensionError):
        solve(RatMat.identity(2), [1, 2, 3])


@given(rat_matrices(min_cols=1), st.data())
def test_solve_succeeds_iff_augmented_rank_unchanged(A, data):
    b = data.draw(st.lists(rationals(), min_size=A.nrows, max_size=A.nrows))
    lam = solve(A, b)
    assert (lam is not None) == (rank(A.hstack(b)) == rank(A))
    if lam is not None:
        assert A @ lam == tuple(b)


@given(rat_matrices(min_cols=1), st.data())
def test_solve_consistent_rhs_is_recovered(A, data):
    x = data.draw(st.lists(rationals(), min_size=A.ncols, max_size=A.ncols))
    b = A @ x
    lam = solve(A, b)
    assert lam is not None and A @ lam == b


# -- inverse ------------------------------------------------------------------

def test_inverse_two_by_two():
    assert inverse(M([[6, 3], [3, 6]])) == M([[6, -3], [-3, 6]]).scale(Fr(1, 27))


def test_inverse_identity_and_empty():
    assert inverse(RatMat.identity(3)) == RatMat.identity(3)
    assert inverse(RatMat.zeros(0, 0)) == RatMat.zeros(0, 0)


def test_inverse_singular():
    with pytest.raises(SingularMatrixError):
        inverse(M([[1, 1], [1, 1]]))


@settings(max_examples=60)
@given(st.integers(1, 4).flatmap(lambda n: rat_matrices(min_rows=n, max_rows=n, min_cols=n, max_cols=n)))
def test_inverse_is_exact(A):
    if rank(A) < A.nrows:
        with pytest.raises(SingularMatrixError):
            inverse(A)
        assert det(A) == 0
        return
    Ainv = inverse(A)
    assert Ainv @ A == RatMat.identity(A.nrows)
    assert A @ Ainv == RatMat.identity(A.nrows)
    assert det(A) == to_sympy(A).det()


def test_positive_definite():
    assert is_positive_definite(M([[6, 3], [3, 6]]))
    assert not is_positive_definite(M([[1, 2], [2, 1]]))
    assert not is_positive_definite(M([[1, 1], [0, 1]]))


# -- literals -----------------------------------------------------------------

@pytest.mark.parametrize("text, value", [
    ("3/2", Fr(3, 2)), ("-1", Fr(-1)), ("1/4", Fr(1, 4)), ("0", Fr(0)), ("-6/4", Fr(-3, 2)),
])
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["1.5", "1e3", "+2", "1/0", "", "a/b", "1/-2"])
def test_parse_rat_rejects(text):
    with pytest.raises(ValueError):
        parse_rat(text)


@given(rationals(-100, 100, 50))
def test_format_parse_round_trip(q):
    assert parse_rat(format_rat(q)) == q
