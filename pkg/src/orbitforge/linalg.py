"""Exact dense linear algebra over Q (and Q(sqrt2)).

Matrices are lists of rows. Rational matrices are reduced with one-step
fraction-free (Bareiss) elimination on integer rows; matrices with
QuadScalar entries fall back to ordinary Gaussian elimination, which is
exact there as well.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .scalars import QuadScalar, as_fraction, sqrt_enclosure

Matrix = list  # list[list[Fraction | QuadScalar]]
Vector = list


def _is_rational(rows) -> bool:
    return all(not isinstance(x, QuadScalar) or x.is_rational() for row in rows for x in row)


def _to_fraction(x) -> Fraction:
    return x.a if isinstance(x, QuadScalar) else as_fraction(x)


def to_matrix(rows) -> Matrix:
    """Copy ``rows`` into a list-of-lists, rationals as Fraction."""
    if _is_rational(rows):
        return [[_to_fraction(x) for x in row] for row in rows]
    return [[QuadScalar.coerce(x) for x in row] for row in rows]


def identity(d: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def zeros(r: int, c: int) -> Matrix:
    return [[Fraction(0)] * c for _ in range(r)]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


def matvec(A: Matrix, v: Sequence) -> Vector:
    return [sum((a * x for a, x in zip(row, v)), Fraction(0)) for row in A]


def vadd(u, v) -> Vector:
    return [a + b for a, b in zip(u, v)]


def vsub(u, v) -> Vector:
    return [a - b for a, b in zip(u, v)]


def vscale(k, v) -> Vector:
    return [k * a for a in v]


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def madd(A, B) -> Matrix:
    return [vadd(r, s) for r, s in zip(A, B)]


def msub(A, B) -> Matrix:
    return [vsub(r, s) for r, s in zip(A, B)]


def mscale(k, A) -> Matrix:
    return [vscale(k, r) for r in A]


def is_zero_vector(v) -> bool:
    return all(x == 0 for x in v)


def key(A) -> tuple:
    """Hashable form of a matrix or vector."""
    if A and isinstance(A[0], list):
        return tuple(tuple(r) for r in A)
    return tuple(A)


# ---------------------------------------------------------------------------
# elimination


def _integer_rows(A: Matrix) -> list[list[int]]:
    out = []
    for row in A:
        den = math.lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def _bareiss(M: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form of an integer matrix, in place."""
    m = len(M)
    n = len(M[0]) if m else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        rowr = M[r]
        for i in range(r + 1, m):
            rowi = M[i]
            a = rowi[c]
            for j in range(c + 1, n):
                rowi[j] = (piv * rowi[j] - a * rowr[j]) // prev
            rowi[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return M, pivots


def _gauss(A: Matrix) -> tuple[Matrix, list[int]]:
    M = [list(row) for row in A]
    m = len(M)
    n = len(M[0]) if m else 0
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        for i in range(r + 1, m):
            f = M[i][c] / piv
            if f != 0:
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    return M, pivots


def echelon(A) -> tuple[Matrix, list[int]]:
    """Row echelon form and pivot columns."""
    A = to_matrix(A)
    if not A or not A[0]:
        return A, []
    if isinstance(A[0][0], Fraction):
        M, piv = _bareiss(_integer_rows(A))
        return [[Fraction(x) for x in row] for row in M], piv
    return _gauss(A)


def rank(A) -> int:
    return len(echelon(A)[1])


def nullspace(A, ncols: int | None = None) -> list[Vector]:
    """Basis of {x : A x = 0}, one vector per free column (free entry 1)."""
    A = to_matrix(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    if not A:
        return [[Fraction(int(i == j)) for i in range(n)] for j in range(n)]
    E, pivots = echelon(A)
    zero = E[0][0] * 0
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [zero] * n
        x[f] = zero + 1
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((E[r][j] * x[j] for j in range(pc + 1, n)), zero)
            x[pc] = -s / E[r][pc]
        basis.append(x)
    return basis


def solve(A, b) -> Vector | None:
    """One solution of A x = b, or None when the system is inconsistent."""
    A = to_matrix(A)
    n = len(A[0]) if A else 0
    aug = [row + [bi] for row, bi in zip(A, to_matrix([b])[0])]
    E, pivots = echelon(aug)
    if n in pivots:
        return None
    zero = E[0][0] * 0 if E else Fraction(0)
    x = [zero] * n
    for r in range(len(pivots) - 1, -1, -1):
        pc = pivots[r]
        s = sum((E[r][j] * x[j] for j in range(pc + 1, n)), zero)
        x[pc] = (E[r][n] - s) / E[r][pc]
    return x


def inverse(A) -> Matrix:
    A = to_matrix(A)
    d = len(A)
    cols = []
    for j in range(d):
        e = [Fraction(int(i == j)) for i in range(d)]
        x = solve(A, e)
        if x is None:
            raise ZeroDivisionError("matrix is singular")
        cols.append(x)
    return transpose(cols)


def column_space(vectors: Sequence[Vector]) -> list[Vector]:
    """A basis (subset of the input) for the span of ``vectors``."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return []
    _, piv = echelon(transpose(vectors))
    return [vectors[j] for j in piv]


def span_rank(vectors: Sequence[Vector]) -> int:
    return len(column_space(vectors))


def intersect(U: Sequence[Vector], V: Sequence[Vector], d: int) -> list[Vector]:
    """Basis of span(U) & span(V) inside Q^d."""
    if not U or not V:
        return []
    # solve sum a_i u_i = sum b_j v_j
    cols = [list(u) for u in U] + [[-x for x in v] for v in V]
    K = nullspace(transpose(cols), len(cols))
    out = [
        [sum((k[i] * U[i][t] for i in range(len(U))), Fraction(0)) for t in range(d)]
        for k in K
    ]
    return column_space(out)


def projector(basis: Sequence[Vector], d: int) -> Matrix:
    """Orthogonal projector onto span(basis): B (B^T B)^-1 B^T."""
    basis = column_space(basis)
    if not basis:
        return zeros(d, d)
    B = transpose(basis)
    G = matmul(basis, B)
    return matmul(matmul(B, inverse(G)), basis)


def image_basis(P: Matrix) -> list[Vector]:
    """Basis of the column space of a square matrix."""
    return column_space(transpose(P))


def is_symmetric(A: Matrix) -> bool:
    return all(A[i][j] == A[j][i] for i in range(len(A)) for j in range(i))


def is_psd(S: Matrix) -> bool:
    """Exact positive-semidefiniteness test by symmetric elimination."""
    M = [list(r) for r in to_matrix(S)]
    n = len(M)
    alive = list(range(n))
    while alive:
        # pick a positive diagonal pivot; any negative diagonal disproves PSD
        if any(M[i][i] < 0 for i in alive):
            return False
        k = next((i for i in alive if M[i][i] > 0), None)
        if k is None:
            # zero diagonal forces the remaining block to vanish
            return all(M[i][j] == 0 for i in alive for j in alive)
        alive.remove(k)
        p = M[k][k]
        for i in alive:
            f = M[i][k] / p
            if f:
                for j in alive:
                    M[i][j] -= f * M[k][j]
    return True


def lambda_max_enclosure(S: Matrix, bits: int = 40) -> tuple[Fraction, Fraction]:
    """Certified rational interval for the largest eigenvalue of symmetric PSD S.

    Lower end: a Rayleigh quotient at a rational vector. Upper end: the
    smallest tested mu with mu I - S positive semidefinite.
    """
    import numpy as np

    S = to_matrix(S)
    d = len(S)
    if d == 0:
        return Fraction(0), Fraction(0)
    F = np.array([[float(x) for x in row] for row in S])
    w, V = np.linalg.eigh(F)
    top = Fraction(float(w[-1]))
    # exact answer when the top eigenvalue is a small-denominator rational
    guess = top.limit_denominator(1 << 20)
    if rank(msub(S, mscale(guess, identity(d)))) < d and is_psd(msub(mscale(guess, identity(d)), S)):
        return guess, guess
    v = [Fraction(x).limit_denominator(1 << 30) for x in V[:, -1]]
    vv = dot(v, v)
    lo = dot(v, matvec(S, v)) / vv if vv else Fraction(0)
    scale = Fraction(1, 1 << bits)
    step = max(abs(top) * scale, scale)
    hi = max(lo, top) + step
    while not is_psd(msub(mscale(hi, identity(d)), S)):
        step *= 2
        hi = hi + step
    return lo, hi


def opnorm_enclosure(A: Matrix, bits: int = 40) -> tuple[Fraction, Fraction]:
    """Certified interval for the spectral norm of A."""
    A = to_matrix(A)
    lo2, hi2 = lambda_max_enclosure(matmul(transpose(A), A), bits)
    lo, _ = sqrt_enclosure(max(lo2, Fraction(0)), bits)
    _, hi = sqrt_enclosure(hi2, bits)
    return lo, hi


def norm_enclosure(v: Vector, bits: int = 40) -> tuple[Fraction, Fraction]:
    return sqrt_enclosure(dot(v, v), bits)


def float_rank(A, tol: float | None = None) -> int:
    """Numerical rank through SVD; used to cross-check the exact rank."""
    import numpy as np

    A = to_matrix(A)
    if not A or not A[0]:
        return 0
    F = np.array([[float(x) for x in row] for row in A])
    return int(np.linalg.matrix_rank(F, tol=tol))
