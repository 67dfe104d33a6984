"""Finitely supported sequences standing in for l^2(Z) and l^2(N).

A :class:`SparseVec` stores only its nonzero coordinates, each as an exact
:class:`~orbitforge.scalars.QuadScalar`. The affine subspaces

    A_n = {x : x_0 = x_1 = ... = x_n = 1}

of l^2(N) and the nearest-point maps onto them live here too.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from .scalars import ONE, ZERO, QuadScalar

__all__ = [
    "SparseVec",
    "inner",
    "norm2",
    "dist2",
    "shift",
    "project_An",
    "dist2_to_An",
    "dist2_to_An_closed_form",
]

DOMAINS = ("Z", "N")


class SparseVec:
    """Immutable finitely supported vector with exact coefficients.

    ``domain`` is ``"Z"`` for sequences indexed by the integers and ``"N"``
    for sequences indexed by the naturals (indices >= 0).
    """

    __slots__ = ("_entries", "_domain")

    def __init__(self, entries: Mapping[int, object] | Iterable = (), domain: str = "Z"):
        if domain not in DOMAINS:
            raise ValueError(f"domain must be 'Z' or 'N', got {domain!r}")
        items = entries.items() if isinstance(entries, Mapping) else entries
        clean = {}
        for i, c in items:
            i = int(i)
            if domain == "N" and i < 0:
                raise ValueError(f"negative index {i} in an N-indexed vector")
            c = QuadScalar.coerce(c)
            if c:
                clean[i] = c
        self._entries = dict(sorted(clean.items()))
        self._domain = domain

    @property
    def domain(self) -> str:
        return self._domain

    @property
    def entries(self) -> dict[int, QuadScalar]:
        return dict(self._entries)

    def support(self) -> list[int]:
        return list(self._entries)

    def max_index(self) -> int:
        """Largest index in the support, -1 for the zero vector."""
        return max(self._entries, default=-1)

    def __getitem__(self, i: int) -> QuadScalar:
        return self._entries.get(i, ZERO)

    def items(self):
        return self._entries.items()

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries.items())

    def is_zero(self) -> bool:
        return not self._entries

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self._entries.values())

    def _check(self, other: "SparseVec"):
        if not isinstance(other, SparseVec):
            return NotImplemented
        if other._domain != self._domain:
            raise ValueError("cannot combine Z-indexed and N-indexed vectors")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self._entries)
        for i, c in other._entries.items():
            out[i] = out.get(i, ZERO) + c
        return SparseVec(out, self._domain)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return SparseVec({i: -c for i, c in self._entries.items()}, self._domain)

    def scale(self, k) -> "SparseVec":
        return SparseVec({i: c * k for i, c in self._entries.items()}, self._domain)

    def __eq__(self, other):
        if not isinstance(other, SparseVec):
            return NotImplemented
        return self._domain == other._domain and self._entries == other._entries

    def __hash__(self):
        return hash((self._domain, tuple(self._entries.items())))

    def __repr__(self):
        body = ", ".join(f"{i}: {c}" for i, c in self._entries.items())
        return f"SparseVec({{{body}}}, domain={self._domain!r})"

    def to_json(self) -> dict:
        return {
            "domain": self._domain,
            "entries": [[i, c.to_json()] for i, c in self._entries.items()],
        }

    @classmethod
    def from_json(cls, obj) -> "SparseVec":
        return cls(
            {int(i): QuadScalar.from_json(c) for i, c in obj["entries"]},
            obj.get("domain", "Z"),
        )

    @classmethod
    def ones(cls, lo: int, hi: int, value=1, domain: str = "Z") -> "SparseVec":
        """``value`` on every index in ``lo..hi`` inclusive."""
        return cls({i: value for i in range(lo, hi + 1)}, domain)


def inner(u: SparseVec, v: SparseVec) -> QuadScalar:
    if u.domain != v.domain:
        raise ValueError("cannot pair Z-indexed and N-indexed vectors")
    if len(u) > len(v):
        u, v = v, u
    total = ZERO
    for i, c in u.items():
        d = v[i]
        if d:
            total = total + c * d
    return total


def norm2(v: SparseVec) -> QuadScalar:
    return inner(v, v)


def dist2(u: SparseVec, v: SparseVec) -> QuadScalar:
    return norm2(u - v)


def shift(v: SparseVec, s: int) -> SparseVec:
    """``shift(v, s)[i] == v[i - s]``."""
    if v.domain != "Z":
        raise ValueError("shift needs a Z-indexed vector")
    return SparseVec({i + s: c for i, c in v.items()}, "Z")


def _require_N(v: SparseVec, n: int):
    if v.domain != "N":
        raise ValueError("A_n lives in l^2(N); got a Z-indexed vector")
    if n < 0:
        raise ValueError("level n must be >= 0")


def project_An(v: SparseVec, n: int) -> SparseVec:
    """Nearest point of A_n: coordinates 0..n become 1, the rest stay."""
    _require_N(v, n)
    out = {i: c for i, c in v.items() if i > n}
    out.update({i: ONE for i in range(n + 1)})
    return SparseVec(out, "N")


def dist2_to_An(v: SparseVec, n: int) -> QuadScalar:
    """Squared distance from v to A_n, i.e. sum over j <= n of (v_j - 1)^2."""
    _require_N(v, n)
    total = ZERO
    inside = 0
    for j, c in v.items():
        if j > n:
            break
        total = total + (c - 1) * (c - 1)
        inside += 1
    # every coordinate of 0..n outside the support contributes (0 - 1)^2
    total = total + (n + 1 - inside)
    if v.max_index() < n:
        assert total == dist2_to_An_closed_form(v, n)
    return total


def dist2_to_An_closed_form(v: SparseVec, n: int) -> QuadScalar:
    """``n + 1 - 2 sum x_j + sum x_j^2`` over the support, valid when it sits below n."""
    _require_N(v, n)
    if v.max_index() > n:
        raise ValueError("closed form needs the support inside 0..n")
    s1 = ZERO
    s2 = ZERO
    for _, c in v.items():
        s1 = s1 + c
        s2 = s2 + c * c
    return QuadScalar(n + 1) - 2 * s1 + s2
