from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbitforge import linalg as la
from orbitforge.scalars import QuadScalar

entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # sprinkle zeros so that rank deficiency is common
    cell = st.one_of(st.just(Fraction(0)), entries)
    return [[draw(cell) for _ in range(c)] for _ in range(r)]


def as_float(A):
    return np.array([[float(x) for x in r] for r in A])


@settings(max_examples=200)
@given(matrices())
def test_rank_and_nullspace_against_numpy(A):
    n = len(A[0])
    assert la.rank(A) == np.linalg.matrix_rank(as_float(A))
    K = la.nullspace(A)
    assert len(K) == n - la.rank(A)
    for x in K:
        assert la.is_zero_vector(la.matvec(A, x))


@settings(max_examples=200)
@given(matrices())
def test_bareiss_matches_gauss(A):
    # same pivots from the fraction-free and the plain elimination
    _, p1 = la.echelon(A)
    _, p2 = la._gauss(la.to_matrix(A))
    assert p1 == p2


@given(matrices(4, 4), st.lists(entries, min_size=4, max_size=4))
def test_solve(A, x):
    x = x[: len(A[0])]
    b = la.matvec(A, x)
    y = la.solve(A, b)
    assert y is not None and la.matvec(A, y) == b


def test_solve_inconsistent():
    assert la.solve([[1, 0], [1, 0]], [1, 2]) is None


def test_inverse_and_singular():
    A = la.to_matrix([[2, 1], [1, 1]])
    assert la.matmul(A, la.inverse(A)) == la.identity(2)
    with pytest.raises(ZeroDivisionError):
        la.inverse([[1, 2], [2, 4]])


def test_quad_entries():
    s = QuadScalar(0, 1)
    A = [[s, QuadScalar(1)], [QuadScalar(2), s]]
    # det = 2 - 2 = 0
    assert la.rank(A) == 1
    (k,) = la.nullspace(A)
    assert all(x == 0 for x in la.matvec(A, k))


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=1, max_size=3))
def test_projector(vectors):
    P = la.projector(vectors, 3)
    assert la.matmul(P, P) == P
    assert la.is_symmetric(P)
    assert la.rank(P) == la.span_rank(vectors)
    for v in vectors:
        assert la.matvec(P, v) == [Fraction(x) for x in v]


def test_intersect():
    U = [[1, 0, 0], [0, 1, 0]]
    V = [[0, 1, 0], [0, 0, 1]]
    (w,) = la.intersect(U, V, 3)
    assert w[0] == 0 and w[2] == 0 and w[1] != 0


@settings(max_examples=60)
@given(matrices(4, 4))
def test_lambda_max_enclosure(A):
    S = la.matmul(la.transpose(A), A)
    lo, hi = la.lambda_max_enclosure(S)
    top = np.linalg.eigvalsh(as_float(S))[-1]
    assert float(lo) - 1e-9 <= top <= float(hi) + 1e-9
    assert la.is_psd(la.msub(la.mscale(hi, la.identity(len(S))), S))


def test_is_psd():
    assert la.is_psd([[2, 1], [1, 2]])
    assert not la.is_psd([[1, 2], [2, 1]])
    assert la.is_psd([[0, 0], [0, 0]])
    assert not la.is_psd([[0, 1], [1, 0]])
