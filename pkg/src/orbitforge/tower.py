"""Stabilizers of the affine subspaces A_n and dense orbits of their union.

G_n is the pointwise stabilizer of A_n = {x_0 = ... = x_n = 1} in the
isometry group of l^2(N). It acts by orthogonal maps on the offsets
``(x_0 - 1, ..., x_n - 1)`` and trivially on later coordinates. Every
finite set of such maps fixes the all-ones point of the largest level, yet
the union of the G_n has dense orbits; :func:`approximate_pair` turns that
density argument into an algorithm with an exact certificate.

The level needed to reach precision eps grows like (D/eps)^2, so points
and reflections are stored as :class:`RunVec`: a few explicit coordinates
plus constant runs.
"""
from __future__ import annotations

import bisect
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .scalars import as_fraction, sqrt_enclosure
from .sequences import SparseVec

__all__ = [
    "RunVec",
    "StabilizerIsometry",
    "ApproxCertificate",
    "ScanLimitExceeded",
    "act_stab",
    "householder",
    "approximate_pair",
    "fixed_point_witness",
    "same_orbit",
    "default_n_max",
]

INF = float("inf")


def default_n_max() -> int:
    return int(os.environ.get("ORBITFORGE_NMAX", 10**6))


class ScanLimitExceeded(RuntimeError):
    """The level scan passed N_max without meeting the precision target."""


class RunVec:
    """Rational N-indexed vector: explicit coordinates over constant runs.

    ``runs`` are disjoint inclusive ranges ``(lo, hi, value)``; explicit
    ``entries`` override the runs. Everything else is zero.
    """

    __slots__ = ("entries", "runs", "_keys")

    def __init__(self, entries=None, runs=()):
        runs = sorted((int(lo), int(hi), as_fraction(v)) for lo, hi, v in runs if lo <= hi)
        merged = []
        for lo, hi, v in runs:
            if lo < 0:
                raise ValueError("RunVec is N-indexed")
            if merged and lo <= merged[-1][1]:
                raise ValueError("runs overlap")
            if v == 0:
                continue
            if merged and merged[-1][1] + 1 == lo and merged[-1][2] == v:
                merged[-1] = (merged[-1][0], hi, v)
            else:
                merged.append((lo, hi, v))
        self.runs = tuple(merged)
        clean = {}
        for j, v in (entries or {}).items():
            j, v = int(j), as_fraction(v)
            if j < 0:
                raise ValueError("RunVec is N-indexed")
            if v != self._base(j):
                clean[j] = v
        self.entries = clean
        self._keys = sorted(clean)

    def _base(self, j: int) -> Fraction:
        i = bisect.bisect_right(self.runs, (j, INF, 0)) - 1
        if i >= 0:
            lo, hi, v = self.runs[i]
            if lo <= j <= hi:
                return v
        return Fraction(0)

    def __getitem__(self, j: int) -> Fraction:
        if j in self.entries:
            return self.entries[j]
        return self._base(j)

    @classmethod
    def ones(cls, lo: int, hi: int, value=1) -> "RunVec":
        return cls({}, [(lo, hi, value)])

    @classmethod
    def from_sparse(cls, v: SparseVec) -> "RunVec":
        if isinstance(v, RunVec):
            return v
        if v.domain != "N":
            raise ValueError("the stabilizer tower works in l^2(N)")
        if not v.is_rational():
            raise ValueError("the stabilizer tower needs rational coordinates")
        return cls({j: c.a for j, c in v.items()})

    def to_sparse(self) -> SparseVec:
        out = {}
        for lo, hi, v in self.runs:
            for j in range(lo, hi + 1):
                out[j] = v
        out.update(self.entries)
        return SparseVec(out, "N")

    def max_index(self) -> int:
        """Largest index carrying a nonzero value, -1 for zero."""
        cands = [j for j, v in self.entries.items() if v != 0]
        for lo, hi, v in self.runs:
            # the run end might be overridden by an explicit zero
            j = hi
            while j >= lo and self.entries.get(j, v) == 0:
                j -= 1
            if j >= lo:
                cands.append(j)
        return max(cands, default=-1)

    def _breaks(self) -> set:
        out = set()
        for lo, hi, _ in self.runs:
            out.add(lo)
            out.add(hi + 1)
        return out

    def combine(self, other: "RunVec", alpha=1, beta=1) -> "RunVec":
        """alpha * self + beta * other."""
        alpha, beta = as_fraction(alpha), as_fraction(beta)
        cuts = sorted(self._breaks() | other._breaks())
        runs = []
        for a, b in zip(cuts, cuts[1:]):
            v = alpha * self._base(a) + beta * other._base(a)
            if v:
                runs.append((a, b - 1, v))
        entries = {j: alpha * self[j] + beta * other[j] for j in set(self.entries) | set(other.entries)}
        return RunVec(entries, runs)

    def __add__(self, other):
        return self.combine(other, 1, 1)

    def __sub__(self, other):
        return self.combine(other, 1, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, k) -> "RunVec":
        k = as_fraction(k)
        return RunVec({j: k * v for j, v in self.entries.items()}, [(lo, hi, k * v) for lo, hi, v in self.runs])

    def restrict(self, lo: int, hi=None) -> "RunVec":
        """Coordinates in ``lo..hi`` (inclusive; hi=None means unbounded), zero elsewhere."""
        top = INF if hi is None else hi
        runs = [(max(a, lo), min(b, top), v) for a, b, v in self.runs if b >= lo and a <= top]
        runs = [(a, int(b), v) for a, b, v in runs]
        entries = {j: v for j, v in self.entries.items() if lo <= j <= top}
        out = RunVec({}, runs)
        # overrides include explicit zeros inside runs
        out.entries = {j: v for j, v in entries.items() if v != out._base(j)}
        out._keys = sorted(out.entries)
        return out

    def dot(self, other: "RunVec") -> Fraction:
        keys = sorted(set(self.entries) | set(other.entries))
        total = sum((self[j] * other[j] for j in keys), Fraction(0))
        cuts = sorted(self._breaks() | other._breaks())
        for a, b in zip(cuts, cuts[1:]):
            va, vb = self._base(a), other._base(a)
            if va and vb:
                inside = bisect.bisect_left(keys, b) - bisect.bisect_left(keys, a)
                total += (b - a - inside) * va * vb
        return total

    def norm2(self) -> Fraction:
        return self.dot(self)

    def __eq__(self, other):
        if isinstance(other, SparseVec):
            other = RunVec.from_sparse(other)
        if not isinstance(other, RunVec):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.runs, tuple(sorted(self.entries.items()))))

    def is_zero(self) -> bool:
        return not self.runs and all(v == 0 for v in self.entries.values())

    def to_dense(self, length: int) -> list:
        return [self[j] for j in range(length)]

    def to_json(self) -> dict:
        return {
            "entries": [[j, str(v)] for j, v in sorted(self.entries.items())],
            "runs": [[lo, hi, str(v)] for lo, hi, v in self.runs],
        }

    @classmethod
    def from_json(cls, obj) -> "RunVec":
        return cls(
            {int(j): as_fraction(v) for j, v in obj.get("entries", [])},
            [(int(lo), int(hi), as_fraction(v)) for lo, hi, v in obj.get("runs", [])],
        )

    def __repr__(self):
        return f"RunVec({self.entries!r}, runs={list(self.runs)!r})"


def _offset(v: RunVec, n: int) -> RunVec:
    return v.restrict(0, n) - RunVec.ones(0, n)


def _reflect(w: RunVec, u: RunVec) -> RunVec:
    """Householder reflection I - 2 w w^T / |w|^2 applied to u."""
    ww = w.norm2()
    return u.combine(w, 1, -2 * w.dot(u) / ww)


@dataclass(frozen=True)
class StabilizerIsometry:
    """An element of G_n: the orthogonal map Q = H_1 H_2 ... H_k on offsets.

    Each H_i is the rational Householder reflection along ``reflectors[i]``
    (a vector supported in 0..n). The empty product is the identity.
    """

    n: int
    reflectors: tuple = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("level must be >= 0")
        for w in self.reflectors:
            if w.is_zero():
                raise ValueError("zero reflector")
            if w.max_index() > self.n:
                raise ValueError("reflector leaves coordinates 0..n")

    @classmethod
    def identity(cls, n: int = 0) -> "StabilizerIsometry":
        return cls(n, ())

    def apply_offset(self, u: RunVec) -> RunVec:
        for w in reversed(self.reflectors):
            u = _reflect(w, u)
        return u

    def matrix(self) -> list:
        d = self.n + 1
        cols = []
        for j in range(d):
            e = RunVec({j: 1})
            cols.append(self.apply_offset(e).to_dense(d))
        return la.transpose(cols)

    @classmethod
    def from_matrix(cls, Q) -> "StabilizerIsometry":
        """Factor an exactly orthogonal rational matrix into reflections."""
        Q = la.to_matrix(Q)
        d = len(Q)
        if la.matmul(la.transpose(Q), Q) != la.identity(d):
            raise ValueError("matrix is not orthogonal")
        reflectors = []
        M = Q
        for j in range(d):
            col = [M[i][j] for i in range(d)]
            e = [Fraction(int(i == j)) for i in range(d)]
            if col != e:
                w = RunVec(dict(enumerate(la.vsub(col, e))))
                reflectors.append(w)
                # left-multiply by the reflection sending col to e_j
                M = la.transpose([_reflect(w, RunVec(dict(enumerate(c)))).to_dense(d) for c in la.transpose(M)])
        return cls(d - 1, tuple(reflectors))

    def compose(self, other: "StabilizerIsometry") -> "StabilizerIsometry":
        return StabilizerIsometry(max(self.n, other.n), self.reflectors + other.reflectors)

    def inverse(self) -> "StabilizerIsometry":
        return StabilizerIsometry(self.n, tuple(reversed(self.reflectors)))

    def to_json(self, dense_limit: int = 64) -> dict:
        if self.n + 1 <= dense_limit:
            return {"n": self.n, "Q": [[str(x) for x in r] for r in self.matrix()]}
        return {"n": self.n, "reflectors": [w.to_json() for w in self.reflectors]}

    @classmethod
    def from_json(cls, obj) -> "StabilizerIsometry":
        if "Q" in obj:
            g = cls.from_matrix([[as_fraction(x) for x in r] for r in obj["Q"]])
            if g.n != obj["n"]:
                raise ValueError("'n' does not match the matrix size")
            return g
        return cls(int(obj["n"]), tuple(RunVec.from_json(w) for w in obj.get("reflectors", [])))


def act_stab(g: StabilizerIsometry, v) -> RunVec:
    """Apply g to a point of l^2(N): rotate the offsets of 0..n about all-ones."""
    v = RunVec.from_sparse(v)
    n = g.n
    moved = g.apply_offset(_offset(v, n))
    return moved + RunVec.ones(0, n) + v.restrict(n + 1)


def householder(u0, u1) -> list:
    """Dense rational orthogonal Q with Q u0 = u1 (needs |u0| = |u1|)."""
    u0 = la.to_matrix([u0])[0]
    u1 = la.to_matrix([u1])[0]
    if len(u0) != len(u1):
        raise ValueError("vectors must have the same length")
    if la.dot(u0, u0) != la.dot(u1, u1):
        raise ValueError("householder needs vectors of equal norm")
    d = len(u0)
    w = la.vsub(u0, u1)
    I = la.identity(d)
    if la.is_zero_vector(w):
        return I
    ww = la.dot(w, w)
    return [[I[i][j] - 2 * w[i] * w[j] / ww for j in range(d)] for i in range(d)]


def _reflection_between(n: int, u0: RunVec, u1: RunVec) -> StabilizerIsometry:
    if u0.norm2() != u1.norm2():
        raise ValueError("householder needs vectors of equal norm")
    w = u0 - u1
    if w.is_zero():
        return StabilizerIsometry.identity(n)
    return StabilizerIsometry(n, (w,))


# ---------------------------------------------------------------------------
# the density algorithm


@dataclass(frozen=True)
class ApproxCertificate:
    n: int
    g: StabilizerIsometry
    achieved_dist2: Fraction
    eps2: Fraction

    @property
    def ok(self) -> bool:
        return self.achieved_dist2 <= self.eps2

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "g": self.g.to_json(),
            "achieved_dist2": {"exact": str(self.achieved_dist2)},
            "eps2": {"exact": str(self.eps2)},
            "certified": self.ok,
        }


def _roots_close(r2: Fraction, s2: Fraction, e: Fraction) -> bool:
    """Exact test of |sqrt(r2) - sqrt(s2)| <= e."""
    a = r2 + s2 - e * e
    # (r - s)^2 <= e^2  <=>  r2 + s2 - e^2 <= 2 r s
    return a <= 0 or a * a <= 4 * r2 * s2


def _rational_sqrt(q: Fraction) -> Fraction | None:
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _sphere_point_near(x_off: RunVec, z_off: RunVec, r2: Fraction, s2: Fraction, e: Fraction):
    """Rational y with |y|^2 = r2 and |y - z_off| <= the (|r - s| + e) target.

    The ideal point is (r/s) z_off. With lam a rational approximation of r/s,
    the line from x_off through lam * z_off meets the sphere |y|^2 = r2 a
    second time at a rational point, which converges to the ideal one.
    """
    exact = _rational_sqrt(r2 / s2)
    if exact is not None:
        yield z_off.scale(exact)
        return
    bits = 16
    while True:
        lam, _ = sqrt_enclosure(r2 / s2, bits)
        u = z_off.scale(lam)
        w = u - x_off
        if w.is_zero():
            yield x_off
        else:
            yield x_off.combine(w, 1, -2 * w.dot(x_off) / w.norm2())
        bits *= 2


def _level_for(x0: RunVec, z: RunVec, n0: int, e: Fraction, n_max: int) -> int:
    def close(n):
        return _roots_close(_offset(x0, n).norm2(), _offset(z, n).norm2(), e)

    if close(n0):
        return n0
    # the gap |D| / (r + s) is non-increasing in n once the tails agree
    lo, step = n0, 1
    hi = n0 + step
    while not close(hi):
        lo = hi
        step *= 2
        hi = n0 + step
        if lo >= n_max:
            raise ScanLimitExceeded(f"no level <= N_max={n_max} brings the distances to A_n within {e}")
    hi = min(hi, max(n_max, lo + 1))
    if not close(hi):
        raise ScanLimitExceeded(f"no level <= N_max={n_max} brings the distances to A_n within {e}")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if close(mid):
            hi = mid
        else:
            lo = mid
    return hi


def approximate_pair(x0, z, eps, n_max: int | None = None) -> ApproxCertificate:
    """Find n and g in G_n with |g x0 - z| <= eps, certified exactly.

    Steps: pick n0 with p_n(x0) = p_n(z) for n >= n0; move x0 along A_n to
    y0 = x0 + p_n(z) - p_n(x0); find the least n >= n0 where the distances
    of y0 and z to A_n differ by at most eps/2; choose a rational point y
    with p_n(y) = p_n(z), d(y, A_n) = d(y0, A_n) and |y - z| <= eps; and
    let g be the reflection sending the offsets of y0 to those of y.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    n_max = default_n_max() if n_max is None else n_max
    x0 = RunVec.from_sparse(x0)
    z = RunVec.from_sparse(z)
    eps2 = eps * eps
    half = eps / 2

    diff = x0 - z
    n0 = max(diff.max_index(), 0)
    if n0 > n_max:
        raise ScanLimitExceeded(f"supports differ beyond N_max={n_max}")
    n = _level_for(x0, z, n0, half, n_max)

    ones = RunVec.ones(0, n)
    p_x0 = ones + x0.restrict(n + 1)
    p_z = ones + z.restrict(n + 1)
    y0 = x0 + p_z - p_x0
    y0_off = _offset(y0, n)
    z_off = _offset(z, n)
    r2, s2 = y0_off.norm2(), z_off.norm2()

    if s2 == 0:
        # z lies in A_n; the level search already forced d(y0, A_n) <= eps/2
        candidates = iter([y0_off])
    else:
        candidates = _sphere_point_near(y0_off, z_off, r2, s2, half)
    for attempt, y_off in enumerate(candidates):
        g = _reflection_between(n, y0_off, y_off)
        achieved = (act_stab(g, x0) - z).norm2()
        if achieved <= eps2:
            return ApproxCertificate(n, g, achieved, eps2)
        if attempt > 12:
            break
    raise ArithmeticError("could not certify the approximation")  # pragma: no cover


def fixed_point_witness(gs) -> RunVec:
    """The all-ones point on 0..m (m = largest level), fixed by every g in gs."""
    gs = list(gs)
    m = max((g.n for g in gs), default=0)
    p = RunVec.ones(0, m)
    for g in gs:
        if act_stab(g, p) != p:
            raise AssertionError(f"level-{g.n} isometry moves the witness")
    return p


def same_orbit(x, y, n: int) -> bool:
    """x and y lie in one G_n-orbit iff d(., A_n) and p_n agree."""
    x, y = RunVec.from_sparse(x), RunVec.from_sparse(y)
    if x.restrict(n + 1) != y.restrict(n + 1):
        return False
    return _offset(x, n).norm2() == _offset(y, n).norm2()


def orbit_witness(x, y, n: int) -> StabilizerIsometry:
    """g in G_n with g x = y when :func:`same_orbit` holds."""
    if not same_orbit(x, y, n):
        raise ValueError("points are not in the same G_n-orbit")
    x, y = RunVec.from_sparse(x), RunVec.from_sparse(y)
    return _reflection_between(n, _offset(x, n), _offset(y, n))
