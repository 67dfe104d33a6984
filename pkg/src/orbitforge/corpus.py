"""Hand-built exact representations of Z, Z^2, the Heisenberg group and F_2.

All matrices are rational and orthogonal. Rotations come from Pythagorean
triples, so cos and sin are rational.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import linalg as la
from . import presentation as pres
from .cohomology import AffineAction, OrthoRep, cocycle_space
from .presentation import Presentation

TRIPLES = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29), (12, 35, 37), (9, 40, 41), (11, 60, 61)]


def rot(c, s) -> list:
    c, s = Fraction(c), Fraction(s)
    if c * c + s * s != 1:
        raise ValueError("cos^2 + sin^2 must be 1")
    return [[c, -s], [s, c]]


def pythagorean(k: int) -> list:
    a, b, h = TRIPLES[k % len(TRIPLES)]
    return rot(Fraction(a, h), Fraction(b, h))


ROT90 = rot(0, 1)
ROT180 = rot(-1, 0)
I1 = [[Fraction(1)]]
NEG1 = [[Fraction(-1)]]
I2 = la.identity(2)
NEG2 = la.mscale(-1, la.identity(2))
DIAG = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(-1)]]
SWAP = [[Fraction(0), Fraction(1)], [Fraction(1), Fraction(0)]]


def block(*mats) -> list:
    """Block-diagonal matrix."""
    d = sum(len(M) for M in mats)
    out = la.zeros(d, d)
    at = 0
    for M in mats:
        for i, row in enumerate(M):
            for j, x in enumerate(row):
                out[at + i][at + j] = Fraction(x)
        at += len(M)
    return out


def rep(*mats) -> OrthoRep:
    return OrthoRep(tuple(la.to_matrix(M) for M in mats))


# ---------------------------------------------------------------------------
# corpora: lists of (label, presentation, representation)


def z_reps() -> list:
    """Representations of Z without invariant vectors."""
    Z = pres.integers()
    out = [(f"Z rot{k}", Z, rep(pythagorean(k))) for k in range(len(TRIPLES))]
    out += [
        ("Z rot90", Z, rep(ROT90)),
        ("Z -1", Z, rep(NEG1)),
        ("Z -I2", Z, rep(NEG2)),
        ("Z rot0+-1", Z, rep(block(pythagorean(0), NEG1))),
        ("Z rot0+rot1", Z, rep(block(pythagorean(0), pythagorean(1)))),
    ]
    return out


def z2_reps() -> list:
    Z2 = pres.free_abelian_2()
    out = [(f"Z2 rot{k},rot{k + 1}", Z2, rep(pythagorean(k), pythagorean(k + 1))) for k in range(4)]
    out += [
        ("Z2 -1,1", Z2, rep(NEG1, I1)),
        ("Z2 -1,-1", Z2, rep(NEG1, NEG1)),
        ("Z2 diag", Z2, rep(DIAG, la.mscale(-1, DIAG))),
        ("Z2 rot90,I", Z2, rep(ROT90, I2)),
        ("Z2 I,rot2", Z2, rep(I2, pythagorean(2))),
        ("Z2 -I,rot3", Z2, rep(NEG2, pythagorean(3))),
    ]
    return out


def heisenberg_b(Q=None) -> OrthoRep:
    """x -> diag(1, -1), y -> swap; the commutator z acts as -1."""
    R = rep(DIAG, SWAP, NEG2)
    return R if Q is None else R.conjugate(Q)


def heisenberg_reps() -> list:
    H = pres.heisenberg()
    out = [
        ("H rot0,I,I", H, rep(pythagorean(0), I2, I2)),
        ("H rot1,rot2,I", H, rep(pythagorean(1), pythagorean(2), I2)),
        ("H I,rot3,I", H, rep(I2, pythagorean(3), I2)),
        ("H -I,rot4,I", H, rep(NEG2, pythagorean(4), I2)),
        ("H -1,-1,1", H, rep(NEG1, NEG1, I1)),
        ("H B", H, heisenberg_b()),
        ("H B^rot0", H, heisenberg_b(pythagorean(0))),
        ("H B^rot5", H, heisenberg_b(pythagorean(5))),
        ("H B+rot6", H, rep(block(DIAG, pythagorean(6)), block(SWAP, I2), block(NEG2, I2))),
        ("H B+B", H, rep(block(DIAG, SWAP), block(SWAP, DIAG), block(NEG2, NEG2))),
    ]
    return out


def nilpotent_reps() -> list:
    """At least 30 representations of nilpotent groups, none with invariant vectors."""
    return z_reps() + z2_reps() + heisenberg_reps()


def reps_with_invariants() -> list:
    Z, Z2, H = pres.integers(), pres.free_abelian_2(), pres.heisenberg()
    return [
        ("Z trivial", Z, rep(I1)),
        ("Z rot0+1", Z, rep(block(pythagorean(0), I1))),
        ("Z2 trivial2", Z2, rep(I2, I2)),
        ("Z2 rot1+1,I3", Z2, rep(block(pythagorean(1), I1), la.identity(3))),
        ("H trivial", H, rep(I1, I1, I1)),
        ("H rot2+1,I,I", H, rep(block(pythagorean(2), I1), la.identity(3), la.identity(3))),
    ]


def free_group_reps() -> list:
    """Nonzero representations of F_2."""
    F = pres.free_group(2)
    P3 = [[Fraction(int(j == (i + 1) % 3)) for j in range(3)] for i in range(3)]
    T3 = [[Fraction(1), 0, 0], [0, 0, 1], [0, 1, 0]]
    return [
        ("F2 trivial1", F, rep(I1, I1)),
        ("F2 trivial2", F, rep(I2, I2)),
        ("F2 -1,1", F, rep(NEG1, I1)),
        ("F2 rot0,rot1", F, rep(pythagorean(0), pythagorean(1))),
        ("F2 rot0,I", F, rep(pythagorean(0), I2)),
        ("F2 diag,swap", F, rep(DIAG, SWAP)),
        ("F2 rot0+1,I3", F, rep(block(pythagorean(0), I1), la.identity(3))),
        ("F2 S3 perm", F, rep(P3, T3)),
        ("F2 rot90+rot2", F, rep(block(ROT90, I2), block(I2, pythagorean(2)))),
        ("F2 -1+rot3,swap+1", F, rep(block(NEG1, pythagorean(3)), block(SWAP, I1))),
        ("F2 rot4,rot4", F, rep(pythagorean(4), pythagorean(4))),
    ]


def gap_corpus() -> list:
    """(label, presentation, rep, central word) with 1 - pi(z) invertible; 20 entries."""
    Z, Z2, H = pres.integers(), pres.free_abelian_2(), pres.heisenberg()
    x, z = Z.word("x"), H.word("z")
    out = [(f"Z rot{k}", Z, rep(pythagorean(k)), x) for k in range(8)]
    out += [
        ("Z rot90", Z, rep(ROT90), x),
        ("Z -1", Z, rep(NEG1), x),
        ("Z rot0+-1", Z, rep(block(pythagorean(0), NEG1)), x),
        ("Z rot1+rot2", Z, rep(block(pythagorean(1), pythagorean(2))), x),
        ("Z2 -I,rot0", Z2, rep(NEG2, pythagorean(0)), Z2.word("x")),
        ("Z2 -1,-1", Z2, rep(NEG1, NEG1), Z2.word("x")),
        ("Z2 rot3,-I", Z2, rep(pythagorean(3), NEG2), Z2.word("y")),
        ("H B", H, heisenberg_b(), z),
        ("H B^rot0", H, heisenberg_b(pythagorean(0)), z),
        ("H B^rot1", H, heisenberg_b(pythagorean(1)), z),
        ("H B+B", H, rep(block(DIAG, SWAP), block(SWAP, DIAG), block(NEG2, NEG2)), z),
        ("H B^rot2", H, heisenberg_b(pythagorean(2)), z),
    ]
    return out


def random_cocycle(P: Presentation, R: OrthoRep, rng: random.Random, nonzero: bool = True) -> list:
    """Seeded integer combination of a Z^1 basis, as per-generator vectors."""
    basis = cocycle_space(P, R)
    if not basis:
        return [[Fraction(0)] * R.dim for _ in range(R.m)]
    while True:
        coeffs = [rng.randint(-3, 3) for _ in basis]
        b = [
            [sum((c * B[i][k] for c, B in zip(coeffs, basis)), Fraction(0)) for k in range(R.dim)]
            for i in range(R.m)
        ]
        if not nonzero or any(x != 0 for v in b for x in v):
            return b


def affine_corpus(seed: int = 0) -> list:
    """(label, AffineAction) over nilpotent groups, with and without invariant vectors.

    The last entries are pure translation actions (trivial linear part).
    """
    rng = random.Random(seed)
    out = []
    for label, P, R in nilpotent_reps()[::3] + reps_with_invariants():
        out.append((label, AffineAction(P, R, random_cocycle(P, R, rng))))
    Z, Z2 = pres.integers(), pres.free_abelian_2()
    out += [
        ("Z translate", AffineAction(Z, rep(I2), [[1, 2]])),
        ("Z2 translate", AffineAction(Z2, rep(I1, I1), [[1], [Fraction(1, 2)]])),
    ]
    return out
