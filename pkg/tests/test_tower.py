import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import dense_stab_apply, dist2_to_An_dense, seq_dist2
from orbitforge import linalg as la
from orbitforge.sequences import SparseVec, dist2_to_An, project_An
from orbitforge.tower import (
    RunVec,
    ScanLimitExceeded,
    StabilizerIsometry,
    act_stab,
    approximate_pair,
    fixed_point_witness,
    householder,
    orbit_witness,
    same_orbit,
)

small = st.fractions(min_value=-9, max_value=9, max_denominator=7)
nvecs = st.dictionaries(st.integers(0, 7), small, max_size=5)
SWAP = [[0, 1], [1, 0]]


def N(d):
    return SparseVec(d, "N")


def sparse(v):
    return {i: c.a for i, c in v.to_sparse().items()}


# RunVec -------------------------------------------------------------------

runs = st.lists(st.tuples(st.integers(0, 30), st.integers(0, 8), small), max_size=3)


def build_runvec(entries, rs):
    # turn (start, length, value) triples into disjoint runs
    out, last = [], -1
    for lo, length, v in sorted(rs):
        lo = max(lo, last + 1)
        out.append((lo, lo + length, v))
        last = lo + length
    return RunVec(entries, out)


def dense(u, size=50):
    return [u[j] for j in range(size)]


@given(nvecs, runs, nvecs, runs, small)
def test_runvec_against_dense(e1, r1, e2, r2, k):
    u, v = build_runvec(e1, r1), build_runvec(e2, r2)
    du, dv = dense(u), dense(v)
    assert dense(u + v) == [a + b for a, b in zip(du, dv)]
    assert dense(u.combine(v, k, -1)) == [k * a - b for a, b in zip(du, dv)]
    assert u.dot(v) == sum(a * b for a, b in zip(du, dv))
    assert dense(u.restrict(3, 17)) == [x if 3 <= j <= 17 else 0 for j, x in enumerate(du)]
    assert u.max_index() == max((j for j, x in enumerate(du) if x), default=-1)
    assert RunVec.from_json(u.to_json()) == u


# examples -----------------------------------------------------------------


def test_act_stab_examples():
    v = N({0: 2, 5: Fraction(1, 3)})
    assert act_stab(StabilizerIsometry.identity(3), v) == v
    g = StabilizerIsometry.from_matrix(SWAP)
    assert act_stab(g, N({0: 2})).to_sparse() == N({1: 2})
    # points of A_1 are fixed
    assert act_stab(g, N({0: 1, 1: 1, 4: 7})).to_sparse() == N({0: 1, 1: 1, 4: 7})


def test_householder_examples():
    assert householder([1, 0], [0, 1]) == la.to_matrix(SWAP)
    assert householder([3, 4], [3, 4]) == la.identity(2)
    assert householder([1, -1], [-1, 1]) == la.to_matrix(SWAP)
    with pytest.raises(ValueError):
        householder([1, 0], [1, 1])


@given(st.lists(small, min_size=3, max_size=3), st.lists(small, min_size=3, max_size=3))
def test_householder_property(u0, u1):
    if la.dot(u0, u0) != la.dot(u1, u1):
        u1 = u0[::-1]
    Q = householder(u0, u1)
    assert la.matmul(la.transpose(Q), Q) == la.identity(3)
    assert la.matvec(Q, u0) == [Fraction(x) for x in u1]


def test_approximate_pair_examples():
    c = approximate_pair(N({}), N({}), Fraction(1, 5))
    assert c.achieved_dist2 == 0 and c.g.reflectors == ()
    c = approximate_pair(N({0: 2}), N({1: 2}), Fraction(1, 10))
    assert c.n == 1 and c.g.matrix() == la.to_matrix(SWAP) and c.achieved_dist2 == 0
    c = approximate_pair(N({0: 3}), N({}), Fraction(1, 10))
    assert c.achieved_dist2 <= Fraction(1, 100)
    # the distances sqrt(n+4) and sqrt(n+1) first come within 1/20 at n = 898
    assert c.n == 898
    moved = sparse(act_stab(c.g, N({0: 3})))
    assert seq_dist2(moved, {}) == c.achieved_dist2


def test_fixed_point_witness_examples():
    assert fixed_point_witness([StabilizerIsometry.identity(0)]).to_sparse() == N({0: 1})
    assert fixed_point_witness([StabilizerIsometry.from_matrix(SWAP)]).to_sparse() == N({0: 1, 1: 1})
    g3 = StabilizerIsometry.from_matrix(householder([1, 0, 0, 0], [0, 0, 0, 1]))
    p = fixed_point_witness([StabilizerIsometry.from_matrix(SWAP), g3])
    assert p.to_sparse() == N({0: 1, 1: 1, 2: 1, 3: 1})


def test_scan_limit():
    with pytest.raises(ScanLimitExceeded):
        approximate_pair(N({0: 3}), N({}), Fraction(1, 1000), n_max=1000)


def test_non_orthogonal_rejected():
    with pytest.raises(ValueError):
        StabilizerIsometry.from_matrix([[1, 1], [0, 1]])


# properties ---------------------------------------------------------------


def random_orthogonal(rng, d):
    """Product of a few rational reflections."""
    Q = la.identity(d)
    for _ in range(3):
        w = [Fraction(rng.randint(-3, 3)) for _ in range(d)]
        if any(w):
            Q = la.matmul(Q, householder(w, [-x for x in w]))
    return Q


def test_act_stab_matches_dense_oracle():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(0, 5)
        Q = random_orthogonal(rng, n + 1)
        g = StabilizerIsometry.from_matrix(Q)
        assert g.matrix() == Q
        v = {j: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for j in rng.sample(range(9), 4)}
        w = {j: Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for j in rng.sample(range(9), 4)}
        gv, gw = sparse(act_stab(g, N(v))), sparse(act_stab(g, N(w)))
        assert gv == {i: c for i, c in dense_stab_apply(Q, v, n).items() if c}
        # exact isometry
        assert seq_dist2(gv, gw) == seq_dist2({i: c for i, c in v.items() if c}, {i: c for i, c in w.items() if c})
        # A_n is fixed pointwise
        a = {**{j: 1 for j in range(n + 1)}, **{j: c for j, c in w.items() if j > n}}
        assert sparse(act_stab(g, N(a))) == {i: c for i, c in a.items() if c}
        # StabilizerIsometry JSON round trip in both encodings
        assert StabilizerIsometry.from_json(g.to_json()).matrix() == Q
        assert StabilizerIsometry.from_json(g.to_json(dense_limit=0)).matrix() == Q


@settings(max_examples=100)
@given(nvecs, nvecs, st.integers(0, 9))
def test_orbit_equivalence_criterion(x, y, n):
    X, Y = N(x), N(y)
    invariants_equal = dist2_to_An(X, n) == dist2_to_An(Y, n) and project_An(X, n) == project_An(Y, n)
    assert same_orbit(X, Y, n) == invariants_equal
    if invariants_equal:
        g = orbit_witness(X, Y, n)
        assert act_stab(g, X) == Y


@settings(max_examples=100)
@given(nvecs, st.integers(0, 9), st.integers(0, 2**32))
def test_invariants_preserved(x, n, seed):
    rng = random.Random(seed)
    g = StabilizerIsometry.from_matrix(random_orthogonal(rng, n + 1))
    X = N(x)
    gx = act_stab(g, X).to_sparse()
    assert dist2_to_An(gx, n) == dist2_to_An(X, n) == dist2_to_An_dense(x, n)
    assert project_An(gx, n) == project_An(X, n)


def test_approximate_pair_random_pairs():
    rng = random.Random(3)
    for i in range(60):
        x0 = {j: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for j in rng.sample(range(8), rng.randint(0, 6))}
        z = {j: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for j in rng.sample(range(8), rng.randint(0, 6))}
        eps = [Fraction(1), Fraction(1, 10), Fraction(1, 100)][i % 3]
        c = approximate_pair(N(x0), N(z), eps, n_max=10**13)
        moved = act_stab(c.g, N(x0))
        assert (moved - RunVec.from_sparse(N(z))).norm2() == c.achieved_dist2 <= eps * eps
        # the isometry lives in G_n: it fixes the all-ones point of level n
        ones = RunVec.ones(0, c.n)
        assert act_stab(c.g, ones) == ones
