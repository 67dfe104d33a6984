"""Independent reference implementations used by the tests.

Nothing here imports the package's arithmetic: reals are evaluated with
100-digit decimals, sequences are plain dicts or dense lists, and the
cohomology counts come from floating-point SVD ranks.
"""
from decimal import Decimal, getcontext
from fractions import Fraction

import numpy as np

getcontext().prec = 100
SQRT2 = Decimal(2).sqrt()


def dec(q):
    q = Fraction(q)
    return Decimal(q.numerator) / Decimal(q.denominator)


def quad_value(a, b):
    """a + b*sqrt2 as a 100-digit decimal."""
    return dec(a) + dec(b) * SQRT2


def unit_power(k):
    return (SQRT2 - 1) ** k


# sequences as dicts -------------------------------------------------------


def seq_add(u, v):
    out = dict(u)
    for i, c in v.items():
        out[i] = out.get(i, 0) + c
    return {i: c for i, c in out.items() if c != 0}


def seq_shift(v, s):
    return {i + s: c for i, c in v.items()}


def seq_dist2(u, v):
    keys = set(u) | set(v)
    return sum((Fraction(u.get(i, 0)) - Fraction(v.get(i, 0))) ** 2 for i in keys)


def dist2_to_An_dense(v, n):
    """Sum over j <= n of (v_j - 1)^2, by brute force."""
    return sum((Fraction(v.get(j, 0)) - 1) ** 2 for j in range(n + 1))


# wreath elements as maps --------------------------------------------------


def wreath_apply(word, v):
    """Apply the word letter by letter, right to left, to a dict vector.

    t shifts by one place; a adds 1 at index 0; b adds sqrt2 at index 0
    (sqrt2 tracked as the pair (0, 1) in the value).
    """
    for ch in reversed(word):
        gen, e = ch.lower(), (-1 if ch.isupper() else 1)
        if gen == "t":
            v = seq_shift(v, e)
        else:
            inc = (e, 0) if gen == "a" else (0, e)
            a, b = v.get(0, (0, 0))
            v = dict(v)
            v[0] = (a + inc[0], b + inc[1])
            if v[0] == (0, 0):
                del v[0]
    return v


# dense tower --------------------------------------------------------------


def dense_stab_apply(Q, v, n):
    """c + Q (v_0..n - c) on coordinates 0..n, identity elsewhere; v a dict."""
    off = [Fraction(v.get(j, 0)) - 1 for j in range(n + 1)]
    new = [sum(Q[i][j] * off[j] for j in range(n + 1)) for i in range(n + 1)]
    out = {i: c for i, c in v.items() if i > n}
    for j in range(n + 1):
        if new[j] + 1 != 0:
            out[j] = new[j] + 1
    return out


# float cohomology ---------------------------------------------------------


def float_word_matrix(mats, word):
    d = mats[0].shape[0]
    M = np.eye(d)
    for g, e in word:
        M = M @ (mats[g] if e > 0 else mats[g].T)
    return M


def float_extend(mats, b, word):
    d = mats[0].shape[0]
    M = np.eye(d)
    t = np.zeros(d)
    for g, e in word:
        if e > 0:
            t = t + M @ b[g]
            M = M @ mats[g]
        else:
            M = M @ mats[g].T
            t = t - M @ b[g]
    return t


def float_h1(presentation, rep):
    """(dim Z1, dim B1, dim H1) from float ranks of the defining linear maps."""
    mats = [np.array([[float(x) for x in r] for r in rep.matrix(i)]) for i in range(rep.m)]
    m, d = len(mats), mats[0].shape[0]
    # the relator map, column by column on the standard basis of (R^d)^m
    cols = []
    for k in range(m * d):
        b = np.zeros((m, d))
        b[k // d, k % d] = 1.0
        vals = [float_extend(mats, b, r) for r in presentation.relators]
        cols.append(np.concatenate(vals) if vals else np.zeros(0))
    A = np.array(cols).T if presentation.relators else np.zeros((0, m * d))
    z1 = m * d - (np.linalg.matrix_rank(A) if A.size else 0)
    C = np.vstack([M - np.eye(d) for M in mats])
    b1 = np.linalg.matrix_rank(C)
    return z1, b1, z1 - b1
