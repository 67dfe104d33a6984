import json
import random
from fractions import Fraction

import numpy as np
import pytest

from oracles import float_extend, float_h1
from orbitforge import corpus
from orbitforge import linalg as la
from orbitforge import presentation as pres
from orbitforge.cohomology import (
    AffineAction,
    NoCentralGap,
    OrthoRep,
    PreconditionError,
    affine_ball,
    affine_fixed_point,
    central_gap_check,
    coboundary,
    coboundary_space,
    cocycle_space,
    decompose,
    extend_cocycle,
    h1_dim,
    h1_of_cocycle,
    invariant_vectors,
    is_cocycle,
    is_strongly_cohomological,
    orbit_decomposition_probe,
    validate_rep,
    vanish_on_centre_check,
)
from orbitforge.corpus import DIAG, I1, I2, NEG1, ROT90, SWAP, block, pythagorean, rep

Z, Z2, H, F2 = pres.integers(), pres.free_abelian_2(), pres.heisenberg(), pres.free_group(2)
ROT35 = pythagorean(0)
ALL = corpus.nilpotent_reps() + corpus.reps_with_invariants() + corpus.free_group_reps()


def fl(M):
    return np.array([[float(x) for x in r] for r in M])


# validation ---------------------------------------------------------------


def test_validate_examples():
    assert validate_rep(Z2, rep(ROT35, pythagorean(1))).ok
    bad = validate_rep(Z2, rep(DIAG, SWAP))
    assert not bad.ok and bad.failed_relators
    assert validate_rep(F2, rep(DIAG, SWAP)).ok
    assert validate_rep(Z, rep([[1, 1], [0, 1]])).non_orthogonal == ["x"]


def test_extend_cocycle_examples():
    R = rep(ROT35)
    v = [Fraction(1), Fraction(2)]
    assert extend_cocycle(R, [v], ()) == [0, 0]
    assert extend_cocycle(R, [v], Z.word("xx")) == la.vadd(v, la.matvec(ROT35, v))
    assert extend_cocycle(R, [v], Z.word("xX")) == [0, 0]


# dimensions ---------------------------------------------------------------


def test_dimension_examples():
    assert len(cocycle_space(F2, rep(ROT35, I2))) == 4
    assert len(cocycle_space(Z2, rep(I1, I1))) == 2
    assert len(cocycle_space(Z, rep(ROT90))) == 2
    assert coboundary_space(rep(I1)) == []
    assert len(coboundary_space(rep(ROT90))) == 2
    assert len(coboundary_space(rep(block(ROT35, I1)))) == 2
    assert h1_dim(F2, rep(I1, I1)) == 2
    assert h1_dim(Z, rep(ROT90)) == 0
    assert h1_dim(H, rep(ROT35, I2, I2)) == 0


def test_heisenberg_hand_computation():
    # b(y) lies in ker(pi(x) - 1) = 0 and b(z) = 0, so Z^1 = B^1 = R^2
    R = rep(ROT35, I2, I2)
    basis = cocycle_space(H, R)
    assert len(basis) == 2
    for b in basis:
        assert la.is_zero_vector(b[1]) and la.is_zero_vector(b[2])


@pytest.mark.parametrize("label,P,R", ALL, ids=[x[0] for x in ALL])
def test_dimensions_match_float_oracle(label, P, R):
    z1, b1, h1 = float_h1(P, R)
    assert len(cocycle_space(P, R)) == z1
    assert len(coboundary_space(R)) == b1
    assert h1_dim(P, R) == h1


@pytest.mark.parametrize("label,P,R", ALL, ids=[x[0] for x in ALL])
def test_cocycle_basis_satisfies_relators(label, P, R):
    mats = [fl(R.matrix(i)) for i in range(R.m)]
    for b in cocycle_space(P, R):
        assert is_cocycle(P, R, b)
        bf = [np.array([float(x) for x in v]) for v in b]
        for r in P.relators:
            assert np.allclose(float_extend(mats, bf, r), 0)


def test_invariant_vectors_examples():
    assert len(invariant_vectors(rep(I2))) == 2
    assert invariant_vectors(rep(ROT90)) == []
    (v,) = invariant_vectors(rep(block(I1, ROT90)))
    assert v[0] != 0 and v[1] == v[2] == 0


def test_h1_of_cocycle():
    R = rep(ROT90)
    b = coboundary(R, [Fraction(2), Fraction(-1)])
    cls = h1_of_cocycle(Z, R, b)
    assert cls.zero
    assert coboundary(R, cls.witness) == [list(v) for v in b]
    cls = h1_of_cocycle(F2, rep(I1, I1), [[1], [0]])
    assert not cls.zero
    with pytest.raises(ValueError):
        h1_of_cocycle(Z2, rep(I1, NEG1), [[1], [0]])


# decomposition ------------------------------------------------------------


def test_decompose_examples():
    blocks = decompose(rep(block(I1, ROT90)))
    assert sorted(b.dim for b in blocks) == [1, 2]
    assert all(b.irreducible for b in blocks)
    (b,) = decompose(rep(ROT90))
    assert b.dim == 2
    lines = decompose(rep(I2))
    assert [b.matrix() for b in lines] == [[[1, 0], [0, 0]], [[0, 0], [0, 1]]]


@pytest.mark.parametrize("label,P,R", ALL, ids=[x[0] for x in ALL])
def test_blocks_are_invariant_orthogonal_projectors(label, P, R):
    blocks = decompose(R)
    total = la.zeros(R.dim, R.dim)
    for blk in blocks:
        Pm = blk.matrix()
        assert la.matmul(Pm, Pm) == Pm and la.is_symmetric(Pm)
        for i in range(R.m):
            assert la.matmul(R.matrix(i), Pm) == la.matmul(Pm, R.matrix(i))
        total = la.madd(total, Pm)
    assert total == la.identity(R.dim)


def test_strong_cohomology_examples():
    assert is_strongly_cohomological(Z, rep(I1)).strongly_cohomological
    rpt = is_strongly_cohomological(Z, rep(ROT90))
    assert not rpt.strongly_cohomological and rpt.witness.dim == 2
    rpt = is_strongly_cohomological(F2, rep(block(ROT35, I1), la.identity(3)))
    assert rpt.strongly_cohomological and all(h > 0 for h in rpt.block_h1)


# central gap --------------------------------------------------------------


def test_gap_examples():
    g = central_gap_check(Z, rep(NEG1), Z.word("x"), [[1]])
    assert g.bound_sq == 1 and g.max_norm_sq == 1 and g.bound_holds
    g = central_gap_check(Z, rep(ROT90), Z.word("x"), [[1, 0]])
    # C = 2 * (1/sqrt2) * 1
    assert g.bound_sq == 2 and g.max_norm_sq <= 2 and g.bound_holds
    with pytest.raises(NoCentralGap):
        central_gap_check(H, rep(ROT35, I2, I2), H.word("z"), [[0, 0]] * 3)


def test_gap_bound_against_float_orbit():
    rng = random.Random(1)
    for label, P, R, z in corpus.gap_corpus():
        b = corpus.random_cocycle(P, R, rng)
        g = central_gap_check(P, R, z, b, L=6)
        A = np.eye(R.dim) - fl(R.word_matrix(z))
        bz = np.array([float(x) for x in extend_cocycle(R, b, z)])
        C = 2 * np.linalg.norm(np.linalg.inv(A), 2) * np.linalg.norm(bz)
        assert abs(float(g.bound_sq) - C * C) <= 1e-6 * (1 + C * C)
        assert float(g.max_norm_sq) <= C * C + 1e-9
        assert g.h1_dim == 0


def test_centre_vanishing():
    R = rep(ROT35, I2, I2)
    for b in cocycle_space(H, R):
        assert vanish_on_centre_check(H, R, b).vanishes
    with pytest.raises(PreconditionError):
        vanish_on_centre_check(H, rep(I1, I1, I1), [[0], [0], [0]])
    assert vanish_on_centre_check(Z, rep(NEG1), [[1]]).values == {}
    # z acting as -1: the coboundaries are nonzero on z, but the z-fixed summand is 0
    R = corpus.heisenberg_b()
    b = cocycle_space(H, R)[0]
    with pytest.raises(PreconditionError):
        vanish_on_centre_check(H, R, b)
    assert not la.is_zero_vector(extend_cocycle(R, b, H.word("z")))
    assert vanish_on_centre_check(H, R, b, restrict=True).vanishes


# affine actions -----------------------------------------------------------


def test_affine_fixed_point_examples():
    A = AffineAction(Z, rep(ROT90), [[1, 0]])
    v = affine_fixed_point(A)
    # Q v + b = v
    assert la.vadd(la.matvec(ROT90, v), [1, 0]) == v
    assert v == [Fraction(1, 2), Fraction(1, 2)]
    A = AffineAction(Z, rep(I2), [[1, 2]])
    assert affine_fixed_point(A) == [0, 0]
    for b in cocycle_space(H, rep(ROT35, I2, I2)):
        assert affine_fixed_point(AffineAction(H, rep(ROT35, I2, I2), b)) is not None


def test_affine_action_rejects_non_cocycle():
    with pytest.raises(PreconditionError):
        AffineAction(Z2, rep(I1, NEG1), [[1], [0]])


def test_affine_ball_matches_words():
    R = rep(ROT35, pythagorean(1))
    b = [[1, 0], [0, 2]]
    levels = affine_ball(R, b, 3)
    seen = {la.key(M) + la.key(t) for level in levels for M, t in level}
    letters = "xyXY"
    words = [""] + [a + c + d for a in letters for c in letters + " " for d in letters + " "]
    for w in words:
        word = F2.word(w.replace(" ", ""))
        assert la.key(R.word_matrix(word)) + la.key(extend_cocycle(R, b, word)) in seen


def test_probe_examples():
    p = orbit_decomposition_probe(AffineAction(Z, rep(I2), [[1, 2]]), 5)
    assert all(r == 0 for r in p.perp_radius_sq)
    assert p.trans_radius_sq[-1] == 25 * 5
    p = orbit_decomposition_probe(AffineAction(Z, rep(ROT90), [[1, 0]]), 8)
    # the orbit is the square with corners 0, (1,0), (1,1), (0,1)
    assert p.perp_radius_sq[-1] == 2 and p.bound_sq == 2 and p.bound_holds


def test_rep_json_roundtrip(tmp_path):
    R = rep(block(DIAG, ROT35), block(SWAP, I2))
    path = tmp_path / "r.json"
    path.write_text(json.dumps(R.to_json()))
    assert OrthoRep.load(path) == R


def test_rep_json_bare_list():
    R = OrthoRep.from_json([[["3/5", "-4/5"], ["4/5", "3/5"]]])
    assert R == rep(ROT35)
    with pytest.raises(ValueError):
        OrthoRep.from_json({"dim": 3, "mats": [[[1]]]})
