import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from scissors import linalg
from scissors.errors import ContractError, ParseError


def matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r).map(lambda rows: linalg.as_int_matrix(rows, (r, c)))))


def test_snf_small_example():
    u, s, v = linalg.smith_normal_form([[2, 0], [0, 3]])
    assert linalg.to_lists(s) == [[1, 0], [0, 6]]
    assert linalg.to_lists(linalg.matmul(linalg.matmul(u, linalg.as_int_matrix([[2, 0], [0, 3]])), v)) == [[1, 0], [0, 6]]


def test_snf_zero_and_empty():
    r = linalg.smith_decomposition(linalg.zeros(3, 2))
    assert r.diagonal == []
    r = linalg.smith_decomposition(linalg.zeros(0, 4))
    assert r.s.shape == (0, 4) and r.v.shape == (4, 4)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_snf_properties(m):
    r = linalg.smith_decomposition(m)
    assert (linalg.matmul(linalg.matmul(r.u, m), r.v) == r.s).all()
    assert (linalg.matmul(r.u, r.u_inv) == linalg.identity(m.shape[0])).all()
    assert (linalg.matmul(r.v, r.v_inv) == linalg.identity(m.shape[1])).all()
    d = r.diagonal
    assert all(x > 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 for i in range(len(d) - 1))
    off = r.s.copy()
    for i in range(min(off.shape)):
        off[i, i] = 0
    assert linalg.is_zero(off)


@settings(max_examples=60, deadline=None)
@given(matrices(4, 4))
def test_snf_matches_sympy(m):
    if 0 in m.shape:
        return
    from sympy.matrices.normalforms import invariant_factors
    ref = [abs(int(x)) for x in invariant_factors(sympy.Matrix(linalg.to_lists(m)))]
    assert linalg.smith_decomposition(m).diagonal == [x for x in ref if x]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                                                    min_size=n, max_size=n)))
def test_determinant_matches_sympy(rows):
    assert linalg.determinant(linalg.as_int_matrix(rows)) == sympy.Matrix(rows).det()


def test_determinant_rejects_non_square():
    with pytest.raises(ContractError):
        linalg.determinant(linalg.zeros(2, 3))


def test_inverse_unimodular():
    a = linalg.as_int_matrix([[2, 1], [1, 1]])
    assert (linalg.matmul(a, linalg.inverse_unimodular(a)) == linalg.identity(2)).all()
    with pytest.raises(ContractError):
        linalg.inverse_unimodular(linalg.as_int_matrix([[2, 0], [0, 1]]))


def test_big_entries_stay_exact():
    a = linalg.as_int_matrix([[10 ** 30, 1], [1, 0]])
    assert linalg.determinant(a) == -1
    assert linalg.smith_decomposition(a).diagonal == [1, 1]


def test_matrix_text_round_trip():
    a = linalg.as_int_matrix([[1, -2, 3], [0, 5, 7]])
    text = linalg.format_matrix(a) + linalg.format_matrix(linalg.zeros(0, 2))
    back = linalg.parse_matrices(text)
    assert (back[0] == a).all() and back[1].shape == (0, 2)
    assert linalg.format_matrix(back[0]) == linalg.format_matrix(a)


@pytest.mark.parametrize("text", ["matrix 2 2\n1 2 3\n", "mat 1 1\n1\n", "matrix 1 1\nx\n", "matrix -1 2\n"])
def test_matrix_parse_errors(text):
    with pytest.raises(ParseError):
        linalg.parse_matrices(text)


def test_rational_inverse():
    inv = linalg.rational_inverse(np.array([[2, 0], [0, 4]], dtype=object))
    assert inv[0][0] * 2 == 1 and inv[1][1] * 4 == 1
