"""First cohomology of finitely presented groups in exact orthogonal representations.

A representation assigns an orthogonal rational matrix to every generator.
A 1-cocycle is determined by its values ``b(x_i)`` on the generators and
extends to words by

    b(uv) = b(u) + pi(u) b(v),        b(x^-1) = -pi(x)^-1 b(x).

Z^1 is the kernel of the linear map sending generator values to the values
on the relators (the Fox-derivative conditions), B^1 is spanned by the
coboundaries ``g -> pi(g) v - v``, and H^1 = Z^1 / B^1. In finite dimension
B^1 is closed, so H^1 coincides with reduced cohomology.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import linalg as la
from .presentation import Presentation, Word
from .scalars import as_fraction, decimal_enclosure, sqrt_enclosure

__all__ = [
    "OrthoRep",
    "AffineAction",
    "ValidationReport",
    "validate_rep",
    "extend_cocycle",
    "fox_matrix",
    "cocycle_space",
    "coboundary_space",
    "h1_dim",
    "h1_of_cocycle",
    "invariant_vectors",
    "decompose",
    "Block",
    "is_strongly_cohomological",
    "central_gap_check",
    "NoCentralGap",
    "PreconditionError",
    "vanish_on_centre_check",
    "affine_fixed_point",
    "orbit_decomposition_probe",
    "affine_ball",
]


class PreconditionError(ValueError):
    """An operation's stated precondition does not hold for the input."""


class NoCentralGap(PreconditionError):
    """1 lies in the spectrum of pi(z), so there is no spectral gap to use."""


# ---------------------------------------------------------------------------
# representations


@dataclass(frozen=True)
class OrthoRep:
    """One exact d x d matrix per generator."""

    mats: tuple

    def __post_init__(self):
        mats = tuple(tuple(tuple(row) for row in la.to_matrix(M)) for M in self.mats)
        for M in mats:
            if len(M) != self.dim or any(len(r) != self.dim for r in M):
                raise ValueError("all generator matrices must be square of the same size")
        object.__setattr__(self, "mats", mats)

    @property
    def dim(self) -> int:
        return len(self.mats[0]) if self.mats else 0

    @property
    def m(self) -> int:
        return len(self.mats)

    def matrix(self, i: int) -> list:
        return [list(r) for r in self.mats[i]]

    def inverse_matrix(self, i: int) -> list:
        # orthogonal: the inverse is the transpose
        return la.transpose(self.matrix(i))

    def letter_matrix(self, letter) -> list:
        g, e = letter
        return self.matrix(g) if e > 0 else self.inverse_matrix(g)

    def word_matrix(self, word) -> list:
        M = la.identity(self.dim)
        for letter in word:
            M = la.matmul(M, self.letter_matrix(letter))
        return M

    def to_json(self) -> dict:
        return {"dim": self.dim, "mats": [[[str(x) for x in r] for r in M] for M in self.mats]}

    @classmethod
    def from_json(cls, obj) -> "OrthoRep":
        # a bare list of matrices is accepted as shorthand
        if isinstance(obj, list):
            obj = {"mats": obj}
        mats = [[[as_fraction(str(x)) for x in r] for r in M] for M in obj["mats"]]
        rep = cls(tuple(mats))
        if mats and obj.get("dim", rep.dim) != rep.dim:
            raise ValueError("'dim' does not match the matrices")
        return rep

    @classmethod
    def load(cls, path) -> "OrthoRep":
        return cls.from_json(json.loads(Path(path).read_text()))

    def direct_sum(self, other: "OrthoRep") -> "OrthoRep":
        if self.m != other.m:
            raise ValueError("direct sum needs the same number of generators")
        d1, d2 = self.dim, other.dim
        mats = []
        for A, B in zip(self.mats, other.mats):
            M = la.zeros(d1 + d2, d1 + d2)
            for i in range(d1):
                M[i][:d1] = list(A[i])
            for i in range(d2):
                M[d1 + i][d1:] = list(B[i])
            mats.append(M)
        return OrthoRep(tuple(mats))

    def conjugate(self, Q) -> "OrthoRep":
        """The equivalent representation g -> Q pi(g) Q^T for orthogonal Q."""
        Qt = la.transpose(Q)
        return OrthoRep(tuple(la.matmul(la.matmul(Q, self.matrix(i)), Qt) for i in range(self.m)))


@dataclass
class ValidationReport:
    non_orthogonal: list = field(default_factory=list)
    failed_relators: list = field(default_factory=list)
    shape_errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.non_orthogonal or self.failed_relators or self.shape_errors)

    def to_json(self) -> dict:
        return {
            "valid": self.ok,
            "non_orthogonal": self.non_orthogonal,
            "failed_relators": [
                {"relator": r, "value": [[str(x) for x in row] for row in M]}
                for r, M in self.failed_relators
            ],
            "shape_errors": self.shape_errors,
        }


def validate_rep(P: Presentation, R: OrthoRep) -> ValidationReport:
    report = ValidationReport()
    if R.m != P.m:
        report.shape_errors.append(f"{R.m} matrices for {P.m} generators")
        return report
    I = la.identity(R.dim)
    for i in range(R.m):
        M = R.matrix(i)
        if la.matmul(la.transpose(M), M) != I:
            report.non_orthogonal.append(P.names[i])
    if report.non_orthogonal:
        return report
    for r in P.relators:
        M = R.word_matrix(r)
        if M != I:
            report.failed_relators.append((P.format(r), M))
    return report


def _require_valid(P: Presentation, R: OrthoRep):
    report = validate_rep(P, R)
    if not report.ok:
        raise PreconditionError(f"invalid representation: {report.to_json()}")


# ---------------------------------------------------------------------------
# cocycles


def _as_values(b, R: OrthoRep) -> list:
    vals = [la.to_matrix([v])[0] for v in b]
    if len(vals) != R.m or any(len(v) != R.dim for v in vals):
        raise ValueError("cocycle needs one d-vector per generator")
    return vals


def extend_cocycle(R: OrthoRep, b, w: Word) -> list:
    """b(w) from the generator values, read left to right."""
    b = _as_values(b, R)
    M = la.identity(R.dim)
    t = [Fraction(0)] * R.dim
    for g, e in w:
        if e > 0:
            t = la.vadd(t, la.matvec(M, b[g]))
            M = la.matmul(M, R.matrix(g))
        else:
            M = la.matmul(M, R.inverse_matrix(g))
            t = la.vsub(t, la.matvec(M, b[g]))
    return t


def fox_matrix(P: Presentation, R: OrthoRep) -> list:
    """Rows: the relator conditions; columns: the m*d generator values."""
    d, m = R.dim, R.m
    rows = []
    for r in P.relators:
        block = [[Fraction(0)] * (m * d) for _ in range(d)]
        M = la.identity(d)
        for g, e in r:
            if e > 0:
                coeff = M
                M = la.matmul(M, R.matrix(g))
                sgn = 1
            else:
                M = la.matmul(M, R.inverse_matrix(g))
                coeff = M
                sgn = -1
            for i in range(d):
                for j in range(d):
                    block[i][g * d + j] += sgn * coeff[i][j]
        rows.extend(block)
    return rows


def _flatten(b) -> list:
    return [x for v in b for x in v]


def _unflatten(x, m: int, d: int) -> list:
    return [list(x[i * d:(i + 1) * d]) for i in range(m)]


def is_cocycle(P: Presentation, R: OrthoRep, b) -> bool:
    return all(la.is_zero_vector(extend_cocycle(R, b, r)) for r in P.relators)


def cocycle_space(P: Presentation, R: OrthoRep) -> list:
    """Basis of Z^1, each element a list of per-generator vectors."""
    _require_valid(P, R)
    d, m = R.dim, R.m
    if not P.relators:
        basis = la.nullspace([], m * d)
    else:
        basis = la.nullspace(fox_matrix(P, R), m * d)
    return [_unflatten(x, m, d) for x in basis]


def coboundary(R: OrthoRep, v) -> list:
    """The coboundary g -> pi(g) v - v on the generators."""
    v = la.to_matrix([v])[0]
    return [la.vsub(la.matvec(R.matrix(i), v), v) for i in range(R.m)]


def coboundary_space(R: OrthoRep) -> list:
    """Basis of B^1."""
    d = R.dim
    gens = [_flatten(coboundary(R, [Fraction(int(i == j)) for i in range(d)])) for j in range(d)]
    return [_unflatten(x, R.m, d) for x in la.column_space(gens)]


def invariant_vectors(R: OrthoRep) -> list:
    """Basis of the vectors fixed by every generator."""
    d = R.dim
    I = la.identity(d)
    rows = [row for i in range(R.m) for row in la.msub(R.matrix(i), I)]
    if not rows:
        return la.nullspace([], d)
    return la.nullspace(rows, d)


def _subrep_dims(P: Presentation, R: OrthoRep, proj=None) -> tuple[int, int]:
    """(dim Z^1, dim B^1) of the subrepresentation on the image of ``proj``."""
    Z = cocycle_space(P, R)
    inv = invariant_vectors(R)
    if proj is None:
        return len(Z), R.dim - len(inv)
    z_proj = [_flatten([la.matvec(proj, v) for v in b]) for b in Z]
    dim_z = la.span_rank(z_proj)
    dim_v = la.rank(proj)
    dim_inv = la.span_rank([la.matvec(proj, v) for v in inv])
    return dim_z, dim_v - dim_inv


def h1_dim(P: Presentation, R: OrthoRep, proj=None) -> int:
    """dim H^1, optionally of the subrepresentation cut out by an invariant projector."""
    _require_valid(P, R)
    dz, db = _subrep_dims(P, R, proj)
    return dz - db


@dataclass(frozen=True)
class H1Class:
    zero: bool
    witness: list | None = None  # v with b(g) = pi(g) v - v when the class is zero

    def to_json(self) -> dict:
        return {
            "class": "zero" if self.zero else "nonzero",
            "witness": None if self.witness is None else [str(x) for x in self.witness],
        }


def h1_of_cocycle(P: Presentation, R: OrthoRep, b) -> H1Class:
    _require_valid(P, R)
    b = _as_values(b, R)
    if not is_cocycle(P, R, b):
        raise ValueError("b is not a cocycle: some relator extension is nonzero")
    d = R.dim
    I = la.identity(d)
    A = [row for i in range(R.m) for row in la.msub(R.matrix(i), I)]
    if not A:
        return H1Class(True, [Fraction(0)] * d)
    v = la.solve(A, _flatten(b))
    return H1Class(v is not None, v)


# ---------------------------------------------------------------------------
# subrepresentations


@dataclass(frozen=True)
class Block:
    """An invariant subspace, given by its orthogonal projector."""

    projector: tuple
    dim: int
    irreducible: bool
    flagged: bool = False  # reducible but with no rational splitting found

    def matrix(self) -> list:
        return [list(r) for r in self.projector]

    def basis(self) -> list:
        return la.image_basis(self.matrix())

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "irreducible": self.irreducible,
            "flagged": self.flagged,
            "projector": [[str(x) for x in r] for r in self.projector],
        }


def _commutant(R: OrthoRep, P1, P2=None) -> list:
    """Basis of {X : X pi(g) = pi(g) X, X = P2 X P1} as d x d matrices."""
    d = R.dim
    P2 = P1 if P2 is None else P2
    rows = []

    def add(coeffs):
        rows.append(coeffs)

    # unknown X[i][j] at position i*d + j
    for g in range(R.m):
        M = R.matrix(g)
        for i in range(d):
            for j in range(d):
                # (M X - X M)[i][j] = sum_k M[i][k] X[k][j] - X[i][k] M[k][j]
                c = [Fraction(0)] * (d * d)
                for k in range(d):
                    c[k * d + j] += M[i][k]
                    c[i * d + k] -= M[k][j]
                add(c)
    for i in range(d):
        for j in range(d):
            # (P2 X - X)[i][j] and (X P1 - X)[i][j]
            c = [Fraction(0)] * (d * d)
            for k in range(d):
                c[k * d + j] += P2[i][k]
            c[i * d + j] -= 1
            add(c)
            c = [Fraction(0)] * (d * d)
            for k in range(d):
                c[i * d + k] += P1[k][j]
            c[i * d + j] -= 1
            add(c)
    return [[x[i * d:(i + 1) * d] for i in range(d)] for x in la.nullspace(rows, d * d)]


def _sym(X) -> list:
    return la.madd(X, la.transpose(X))


def _is_scalar_on(S, P) -> bool:
    # S = c P for some rational c
    for i in range(len(P)):
        for j in range(len(P)):
            if P[i][j] != 0:
                c = S[i][j] / P[i][j]
                return S == la.mscale(c, P)
    return True


def _rational_eigenvalues(S) -> list[Fraction]:
    """Rational eigenvalues of a rational symmetric matrix (float-guided, exact-checked)."""
    import math

    import numpy as np

    den = math.lcm(*(x.denominator for row in S for x in row))
    F = np.array([[float(x * den) for x in row] for row in S])
    # eigenvalues of the integer matrix den*S that are rational are integers
    cands = sorted({int(round(w)) for w in np.linalg.eigvalsh(F)}, reverse=True)
    out = []
    d = len(S)
    for k in cands:
        lam = Fraction(k, den)
        if la.rank(la.msub(S, la.mscale(lam, la.identity(d)))) < d:
            out.append(lam)
    return out


def _candidates(C: list):
    n = len(C)
    for i in range(n):
        yield _sym(C[i])
    for i in range(n):
        for j in range(i + 1, n):
            yield _sym(la.madd(C[i], C[j]))
    for i in range(n):
        for j in range(n):
            yield _sym(la.matmul(C[i], C[j]))


def _split(R: OrthoRep, P):
    """Split the block with projector P along a rational eigenspace.

    Returns ``("split", P1, P2)``, ``("irreducible",)`` when every symmetric
    commutant element is scalar, or ``("flagged",)`` when non-scalar ones
    exist but none has a usable rational eigenspace.
    """
    d = R.dim
    C = _commutant(R, P)
    I = la.identity(d)
    comp = la.msub(I, P)
    dim_p = la.rank(P)
    nonscalar_seen = False
    for S in _candidates(C):
        if _is_scalar_on(S, P):
            continue
        nonscalar_seen = True
        for lam in _rational_eigenvalues(S):
            E = la.nullspace(la.msub(S, la.mscale(lam, I)) + comp, d)
            if 0 < len(E) < dim_p:
                P1 = la.projector(E, d)
                return ("split", P1, la.msub(P, P1))
    return ("flagged",) if nonscalar_seen else ("irreducible",)


def decompose(R: OrthoRep) -> list[Block]:
    """Split the representation into invariant blocks.

    Irreducible blocks are marked; a block whose commutant has non-scalar
    symmetric elements but no rational eigenspace split is flagged.
    """
    d = R.dim
    if d == 0:
        return []
    out: list[Block] = []
    stack = [la.identity(d)]
    while stack:
        P = stack.pop(0)
        res = _split(R, P)
        if res[0] == "split":
            stack[:0] = [res[1], res[2]]
        else:
            irreducible = res[0] == "irreducible"
            out.append(Block(la.key(P), la.rank(P), irreducible, flagged=not irreducible))
    return out


def blocks_isomorphic(R: OrthoRep, b1: Block, b2: Block) -> bool:
    if b1.dim != b2.dim:
        return False
    return bool(_commutant(R, b1.matrix(), b2.matrix()))


@dataclass
class StrongCohomologyReport:
    strongly_cohomological: bool
    blocks: list
    block_h1: list
    witness: Block | None = None
    flagged: bool = False

    def to_json(self) -> dict:
        return {
            "strongly_cohomological": self.strongly_cohomological,
            "block_dims": [b.dim for b in self.blocks],
            "block_h1": self.block_h1,
            "flagged_blocks": self.flagged,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def is_strongly_cohomological(P: Presentation, R: OrthoRep) -> StrongCohomologyReport:
    """Does every nonzero invariant subspace carry nonzero H^1?

    Every subrepresentation is a sum of irreducibles isomorphic to blocks,
    so checking the blocks and the isotypic sums is complete (flagged blocks
    aside).
    """
    _require_valid(P, R)
    blocks = decompose(R)
    if not blocks:
        return StrongCohomologyReport(True, [], [])
    h1s = [h1_dim(P, R, b.matrix()) for b in blocks]
    flagged = any(b.flagged for b in blocks)
    for b, h in zip(blocks, h1s):
        if h == 0:
            return StrongCohomologyReport(False, blocks, h1s, b, flagged)
    # isotypic sums
    groups: list[list[int]] = []
    for i, b in enumerate(blocks):
        for grp in groups:
            if blocks_isomorphic(R, blocks[grp[0]], b):
                grp.append(i)
                break
        else:
            groups.append([i])
    for grp in groups:
        if len(grp) > 1:
            Psum = la.zeros(R.dim, R.dim)
            for i in grp:
                Psum = la.madd(Psum, blocks[i].matrix())
            if h1_dim(P, R, Psum) == 0:
                witness = Block(la.key(Psum), la.rank(Psum), False)
                return StrongCohomologyReport(False, blocks, h1s, witness, flagged)
    return StrongCohomologyReport(True, blocks, h1s, None, flagged)


# ---------------------------------------------------------------------------
# affine actions


@dataclass(frozen=True)
class AffineAction:
    """Linear part ``rep`` plus per-generator translation vectors ``b``."""

    presentation: Presentation
    rep: OrthoRep
    b: tuple

    def __post_init__(self):
        b = tuple(tuple(v) for v in _as_values(self.b, self.rep))
        object.__setattr__(self, "b", b)
        _require_valid(self.presentation, self.rep)
        if not is_cocycle(self.presentation, self.rep, b):
            raise PreconditionError("translation parts do not define an action: relators move 0")

    def values(self) -> list:
        return [list(v) for v in self.b]

    def to_json(self) -> dict:
        return {
            "rep": self.rep.to_json(),
            "b": [[str(x) for x in v] for v in self.b],
        }


def affine_ball(R: OrthoRep, b, L: int) -> list[list]:
    """Distinct affine maps (pi(g), b(g)) by word length, up to L.

    Level l lists the elements first reached by a word of length l; words
    landing on an already seen element are pruned.
    """
    b = _as_values(b, R)
    d = R.dim
    letters = [(g, e) for g in range(R.m) for e in (1, -1)]
    step = {}
    for g, e in letters:
        if e > 0:
            step[(g, e)] = (R.matrix(g), b[g])
        else:
            Mi = R.inverse_matrix(g)
            step[(g, e)] = (Mi, la.vscale(-1, la.matvec(Mi, b[g])))
    start = (la.identity(d), [Fraction(0)] * d)
    seen = {la.key(start[0]) + la.key(start[1])}
    levels = [[start]]
    frontier = [start]
    for _ in range(L):
        nxt = []
        for M, t in frontier:
            for letter in letters:
                A, c = step[letter]
                M2 = la.matmul(M, A)
                t2 = la.vadd(t, la.matvec(M, c))
                k = la.key(M2) + la.key(t2)
                if k not in seen:
                    seen.add(k)
                    nxt.append((M2, t2))
        levels.append(nxt)
        frontier = nxt
    return levels


@dataclass
class GapReport:
    central_word: str
    bound_sq: Fraction  # lower end of C^2, the safe side for "<= C"
    bound_enclosure: tuple
    max_norm_sq: Fraction
    elements_checked: int
    word_length: int
    bound_holds: bool
    h1_dim: int

    def to_json(self) -> dict:
        return {
            "central_word": self.central_word,
            "C_enclosure": decimal_enclosure(*self.bound_enclosure),
            "C_squared_safe": str(self.bound_sq),
            "max_norm_squared": {"exact": str(self.max_norm_sq)},
            "elements_checked": self.elements_checked,
            "word_length": self.word_length,
            "bound_holds": self.bound_holds,
            "h1_dim": self.h1_dim,
        }


def check_central(R: OrthoRep, z: Word) -> bool:
    Z = R.word_matrix(z)
    return all(la.matmul(Z, R.matrix(i)) == la.matmul(R.matrix(i), Z) for i in range(R.m))


def central_gap_check(P: Presentation, R: OrthoRep, z: Word, b, L: int = 8) -> GapReport:
    """Check ||b(g)|| <= 2 ||(1 - pi(z))^-1|| ||b(z)|| over all words up to length L."""
    _require_valid(P, R)
    b = _as_values(b, R)
    if not is_cocycle(P, R, b):
        raise ValueError("b is not a cocycle")
    if not check_central(R, z):
        raise PreconditionError(f"{P.format(z)} is not central in this representation")
    d = R.dim
    A = la.msub(la.identity(d), R.word_matrix(z))
    if la.rank(A) < d:
        raise NoCentralGap(f"1 is an eigenvalue of pi({P.format(z)}): no central gap")
    Ainv = la.inverse(A)
    # C^2 = 4 * lambda_max(Ainv^T Ainv) * |b(z)|^2; compare squares to avoid roots
    lam_lo, lam_hi = la.lambda_max_enclosure(la.matmul(la.transpose(Ainv), Ainv))
    bz = extend_cocycle(R, b, z)
    bz2 = la.dot(bz, bz)
    c2_lo = 4 * lam_lo * bz2
    c2_hi = 4 * lam_hi * bz2
    levels = affine_ball(R, b, L)
    norms = [la.dot(t, t) for level in levels for _, t in level]
    max_sq = max(norms)
    lo, _ = sqrt_enclosure(c2_lo)
    _, hi = sqrt_enclosure(c2_hi)
    return GapReport(
        central_word=P.format(z),
        bound_sq=c2_lo,
        bound_enclosure=(lo, hi),
        max_norm_sq=max_sq,
        elements_checked=len(norms),
        word_length=L,
        bound_holds=max_sq <= c2_lo,
        h1_dim=h1_dim(P, R),
    )


@dataclass
class CentreReport:
    vanishes: bool
    values: dict

    def to_json(self) -> dict:
        return {
            "vanishes": self.vanishes,
            "values": {k: [str(x) for x in v] for k, v in self.values.items()},
        }


def vanish_on_centre_check(P: Presentation, R: OrthoRep, b, restrict: bool = False) -> CentreReport:
    """Every cocycle vanishes on central elements acting trivially, absent invariant vectors.

    With ``restrict``, central elements may act nontrivially: the check is
    then made on the summand of vectors fixed by all central words, which is
    a subrepresentation without invariant vectors, and the report holds the
    component of b(z) in that summand.
    """
    _require_valid(P, R)
    b = _as_values(b, R)
    if not is_cocycle(P, R, b):
        raise ValueError("b is not a cocycle")
    if invariant_vectors(R):
        raise PreconditionError("representation has nonzero invariant vectors")
    d = R.dim
    I = la.identity(d)
    rows = []
    for z in P.central:
        name = P.format(z)
        if not check_central(R, z):
            raise PreconditionError(f"{name} is not central in this representation")
        if R.word_matrix(z) != I and not restrict:
            raise PreconditionError(f"{name} does not act trivially")
        rows += la.msub(R.word_matrix(z), I)
    P1 = la.projector(la.nullspace(rows, d), d) if rows else I
    values = {}
    for z in P.central:
        values[P.format(z)] = la.matvec(P1, extend_cocycle(R, b, z))
    return CentreReport(all(la.is_zero_vector(v) for v in values.values()), values)


def _split_invariant(R: OrthoRep):
    d = R.dim
    T = invariant_vectors(R)
    PT = la.projector(T, d)
    return T, PT, la.msub(la.identity(d), PT)


def affine_fixed_point(A: AffineAction):
    """A point of the orthogonal complement T of the invariant vectors fixed by the T-part.

    Returns None when the T-complement part of the cocycle is not a coboundary.
    """
    R = A.rep
    d = R.dim
    _, PT, Pperp = _split_invariant(R)
    I = la.identity(d)
    rows, rhs = [], []
    for i, v in enumerate(A.values()):
        rows += la.msub(R.matrix(i), I)
        rhs += la.vscale(-1, la.matvec(Pperp, v))
    rows += PT
    rhs += [Fraction(0)] * d
    return la.solve(rows, rhs)


@dataclass
class OrbitProbe:
    lengths: list
    perp_radius_sq: list  # max |proj_{T-perp} b(g)|^2 for word length <= l
    trans_radius_sq: list  # max |proj_T b(g)|^2
    fixed_point: list | None
    bound_sq: Fraction | None  # (2|v|)^2
    bound_holds: bool | None
    invariant_dim: int

    def to_json(self) -> dict:
        def enc(q):
            lo, hi = sqrt_enclosure(q, 32)
            return {"squared_exact": str(q), "enclosure": decimal_enclosure(lo, hi)}

        return {
            "invariant_dim": self.invariant_dim,
            "rows": [
                {"length": l, "perp_radius": enc(p), "translation_radius": enc(t)}
                for l, p, t in zip(self.lengths, self.perp_radius_sq, self.trans_radius_sq)
            ],
            "fixed_point": None if self.fixed_point is None else [str(x) for x in self.fixed_point],
            "bound_2v_squared": None if self.bound_sq is None else str(self.bound_sq),
            "bound_holds": self.bound_holds,
        }


def orbit_decomposition_probe(A: AffineAction, L: int = 8) -> OrbitProbe:
    """Radii of the orbit of 0 in the invariant part T and in its complement."""
    R = A.rep
    T, PT, Pperp = _split_invariant(R)
    v = affine_fixed_point(A)
    levels = affine_ball(R, A.values(), L)
    perp, trans = [], []
    best_p = best_t = Fraction(0)
    for level in levels:
        for _, t in level:
            tp = la.matvec(Pperp, t)
            tt = la.matvec(PT, t)
            best_p = max(best_p, la.dot(tp, tp))
            best_t = max(best_t, la.dot(tt, tt))
        perp.append(best_p)
        trans.append(best_t)
    bound = holds = None
    if v is not None:
        bound = 4 * la.dot(v, v)
        holds = all(p <= bound for p in perp)
    return OrbitProbe(list(range(L + 1)), perp, trans, v, bound, holds, len(T))

