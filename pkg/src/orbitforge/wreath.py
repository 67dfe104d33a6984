"""The wreath products Z[sqrt2] wr Z and Z wr Z acting on l^2(Z).

An element ``(f, s)`` acts on a sequence ``v`` by shifting it ``s`` places
and then adding ``f``:

    (f, s) . v = f + shift(v, s)

so the group law is ``(f1, s1)(f2, s2) = (f1 + shift(f2, s1), s1 + s2)``.
The orbit of 0 is the set of finitely supported sequences with entries in
Z[sqrt2] (resp. Z), which is dense (resp. only enveloping).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import ONE, SQRT2, QuadScalar, approximate_real, as_fraction
from .sequences import SparseVec, dist2, shift

__all__ = [
    "WreathElement",
    "GroupWord",
    "compose",
    "invert",
    "act",
    "cocycle",
    "evaluate_word",
    "approximate_orbit",
    "OrbitApproximation",
    "in_int_orbit",
    "int_orbit_witness",
]

LATTICES = ("quad", "int")


def _canonical_f(f, lattice: str) -> tuple:
    out = {}
    for i, c in dict(f).items():
        c = QuadScalar.coerce(c)
        if not c.is_integral():
            raise ValueError(f"translation entry {c} is not in Z[sqrt2]")
        if lattice == "int" and not c.is_rational():
            raise ValueError(f"translation entry {c} is not an integer")
        if c:
            out[int(i)] = c
    return tuple(sorted(out.items()))


@dataclass(frozen=True)
class WreathElement:
    """``(f, s)``: finitely supported translation data ``f`` and shift ``s``."""

    f: tuple = ()
    s: int = 0
    lattice: str = "quad"

    def __post_init__(self):
        if self.lattice not in LATTICES:
            raise ValueError(f"lattice must be one of {LATTICES}")
        object.__setattr__(self, "f", _canonical_f(self.f, self.lattice))
        object.__setattr__(self, "s", int(self.s))

    @classmethod
    def identity(cls, lattice: str = "quad") -> "WreathElement":
        return cls((), 0, lattice)

    @classmethod
    def translation(cls, f, lattice: str = "quad") -> "WreathElement":
        return cls(tuple(dict(f).items()), 0, lattice)

    def translation_vector(self) -> SparseVec:
        return SparseVec(dict(self.f), "Z")

    def is_identity(self) -> bool:
        return not self.f and self.s == 0

    def __mul__(self, other: "WreathElement") -> "WreathElement":
        return compose(self, other)

    def to_json(self) -> dict:
        return {
            "lattice": self.lattice,
            "f": [[i, c.to_json()] for i, c in self.f],
            "s": self.s,
        }

    @classmethod
    def from_json(cls, obj) -> "WreathElement":
        f = {int(i): QuadScalar.from_json(c) for i, c in obj.get("f", [])}
        return cls(tuple(f.items()), obj.get("s", 0), obj.get("lattice", "quad"))

    def __str__(self):
        body = ", ".join(f"{i}: {c}" for i, c in self.f)
        return f"({{{body}}}, {self.s})"


def _same_lattice(g: WreathElement, h: WreathElement) -> str:
    if g.lattice != h.lattice:
        raise ValueError(f"lattice mismatch: {g.lattice} vs {h.lattice}")
    return g.lattice


def compose(g: WreathElement, h: WreathElement) -> WreathElement:
    lattice = _same_lattice(g, h)
    f = g.translation_vector() + shift(h.translation_vector(), g.s)
    return WreathElement(tuple(f.items()), g.s + h.s, lattice)


def invert(g: WreathElement) -> WreathElement:
    f = -shift(g.translation_vector(), -g.s)
    return WreathElement(tuple(f.items()), -g.s, g.lattice)


def act(g: WreathElement, v: SparseVec) -> SparseVec:
    """Affine isometric action: translate by f after shifting by s."""
    if v.domain != "Z":
        raise ValueError("the wreath product acts on Z-indexed vectors")
    return g.translation_vector() + shift(v, g.s)


def cocycle(g: WreathElement) -> SparseVec:
    """The orbit map g -> g.0, which is the translation part f."""
    return g.translation_vector()


# ---------------------------------------------------------------------------
# words in the generators t (shift), a (+1 at 0), b (+sqrt2 at 0)

GENERATORS = {
    "t": lambda lat: WreathElement((), 1, lat),
    "a": lambda lat: WreathElement(((0, ONE),), 0, lat),
    "b": lambda lat: WreathElement(((0, SQRT2),), 0, lat),
}


@dataclass(frozen=True)
class GroupWord:
    """Word in t, a, b stored as (generator, exponent) runs.

    Exponents are nonzero and neighbouring runs use distinct generators.
    """

    letters: tuple = field(default=())

    def __post_init__(self):
        merged: list[list] = []
        for gen, e in self.letters:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            if merged and merged[-1][0] == gen:
                merged[-1][1] += e
            else:
                merged.append([gen, e])
            if merged[-1][1] == 0:
                merged.pop()
        object.__setattr__(self, "letters", tuple((g, e) for g, e in merged))

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """Parse strings like ``"t3A2b"``; capitals are inverses."""
        text = text.replace(" ", "")
        if not re.fullmatch(r"([tabTAB]\d*)*", text):
            raise ValueError(f"bad group word {text!r}")
        letters = []
        for ch, digits in re.findall(r"([tabTAB])(\d*)", text):
            e = int(digits) if digits else 1
            letters.append((ch.lower(), -e if ch.isupper() else e))
        return cls(tuple(letters))

    def __str__(self):
        parts = []
        for g, e in self.letters:
            ch = g if e > 0 else g.upper()
            parts.append(ch if abs(e) == 1 else f"{ch}{abs(e)}")
        return "".join(parts)

    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def uses_b(self) -> bool:
        return any(g == "b" for g, _ in self.letters)


def _power(g: WreathElement, e: int) -> WreathElement:
    base = g if e > 0 else invert(g)
    out = WreathElement.identity(g.lattice)
    for _ in range(abs(e)):
        out = compose(out, base)
    return out


def evaluate_word(w: GroupWord | str, lattice: str | None = None) -> WreathElement:
    if isinstance(w, str):
        w = GroupWord.parse(w)
    if lattice is None:
        lattice = "quad" if w.uses_b() else "int"
    if lattice == "int" and w.uses_b():
        raise ValueError("generator b is not available in Z wr Z")
    out = WreathElement.identity(lattice)
    for gen, e in w.letters:
        out = compose(out, _power(GENERATORS[gen](lattice), e))
    return out


# ---------------------------------------------------------------------------
# density of the orbit of 0 under Z[sqrt2] wr Z


@dataclass(frozen=True)
class OrbitApproximation:
    element: WreathElement
    dist2: QuadScalar
    eps: Fraction

    @property
    def certified(self) -> bool:
        return self.dist2 <= self.eps * self.eps


def _rational_inv_sqrt_lower(n: int) -> Fraction:
    """A rational r with 0 < r <= 1/sqrt(n)."""
    if n <= 1:
        return Fraction(1)
    scale = 1 << 32
    # ceil(sqrt(n) * scale) >= sqrt(n) * scale
    s = math.isqrt(n * scale * scale)
    if s * s < n * scale * scale:
        s += 1
    return Fraction(scale, s)


def approximate_orbit(target: SparseVec, eps) -> OrbitApproximation:
    """A shift-free element g with ||g.0 - target|| <= eps, certified exactly.

    Each of the N support coordinates gets a budget eps_i <= eps/sqrt(N),
    so the squared errors sum to at most eps^2.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if target.domain != "Z":
        raise ValueError("target must be Z-indexed")
    if not target.is_rational():
        raise ValueError("target must have rational coordinates")
    budget = eps * _rational_inv_sqrt_lower(len(target))
    f = {i: approximate_real(c.a, budget) for i, c in target.items()}
    g = WreathElement(tuple(f.items()), 0, "quad")
    d2 = dist2(cocycle(g), target)
    result = OrbitApproximation(g, d2, eps)
    if not result.certified:
        raise ArithmeticError("orbit approximation failed its exact certificate")
    return result


def in_int_orbit(v: SparseVec) -> bool:
    """Membership in the orbit of 0 under Z wr Z: integer coordinates."""
    return v.domain == "Z" and all(c.is_rational() and c.a.denominator == 1 for _, c in v.items())


def int_orbit_witness(v: SparseVec) -> WreathElement:
    """An element of Z wr Z sending 0 to v."""
    if not in_int_orbit(v):
        raise ValueError("vector is not in the orbit of 0 under Z wr Z")
    return WreathElement(tuple(v.items()), 0, "int")

