"""Exact arithmetic in Z[sqrt2] and Q(sqrt2).

Every decision (sign, comparison, floor) is made with integer arithmetic;
floats only appear through :meth:`QuadScalar.to_float`, which is for
reporting.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

__all__ = [
    "QuadScalar",
    "SQRT2",
    "ONE",
    "ZERO",
    "UNIT",
    "as_fraction",
    "sign",
    "small_unit",
    "approximate_real",
    "sqrt_enclosure",
    "decimal_enclosure",
    "parse_rational",
]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and rational strings ("3/5", "-2") to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def sqrt_enclosure(q, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(q) <= hi with hi - lo <= 2**-bits."""
    q = as_fraction(q)
    if q < 0:
        raise ValueError("square root of a negative number")
    scale = 1 << bits
    # floor(sqrt(q) * scale) computed as isqrt(floor(q * scale^2))
    s = math.isqrt((q.numerator * scale * scale) // q.denominator)
    lo = Fraction(s, scale)
    hi = lo if lo * lo == q else Fraction(s + 1, scale)
    return lo, hi


def _decimal(m: int, k: int) -> str:
    """The decimal string of m * 10**-k."""
    sign = "-" if m < 0 else ""
    digits = str(abs(m))
    if k <= 0:
        return sign + digits + "0" * -k
    digits = digits.rjust(k + 1, "0")
    head, tail = digits[:-k], digits[-k:].rstrip("0")
    return sign + head + ("." + tail if tail else "")


def decimal_enclosure(lo, hi, digits: int = 15) -> list[str]:
    """Outward-rounded decimal strings [lo', hi'] with lo' <= lo and hi <= hi'."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    big = max(abs(lo), abs(hi))
    if big == 0:
        return ["0", "0"]
    # k decimals keep about ``digits`` significant figures at magnitude big
    e = len(str(big.numerator)) - len(str(big.denominator))
    k = digits - e
    scale = Fraction(10) ** k
    return [_decimal(math.floor(lo * scale), k), _decimal(math.ceil(hi * scale), k)]


@total_ordering
class QuadScalar:
    """The real number ``a + b*sqrt(2)`` with rational ``a`` and ``b``.

    Instances are immutable. Equality is componentwise, which is exact
    because sqrt(2) is irrational.
    """

    __slots__ = ("_a", "_b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "_a", as_fraction(a))
        object.__setattr__(self, "_b", as_fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("QuadScalar is immutable")

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x) -> "QuadScalar":
        if isinstance(x, QuadScalar):
            return x
        return cls(as_fraction(x), 0)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integral(self) -> bool:
        """True when the element lies in Z[sqrt2]."""
        return self._a.denominator == 1 and self._b.denominator == 1

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (QuadScalar, int, Fraction)):
            return NotImplemented
        o = QuadScalar.coerce(other)
        return QuadScalar(self._a + o._a, self._b + o._b)

    __radd__ = __add__

    def __neg__(self):
        return QuadScalar(-self._a, -self._b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, (QuadScalar, int, Fraction)):
            return NotImplemented
        o = QuadScalar.coerce(other)
        return QuadScalar(self._a - o._a, self._b - o._b)

    def __rsub__(self, other):
        return QuadScalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadScalar(self._a * other, self._b * other)
        if not isinstance(other, QuadScalar):
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        return QuadScalar(a * c + 2 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        return QuadScalar(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 2 b^2."""
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> "QuadScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        return QuadScalar(self._a / n, -self._b / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(sqrt2)")
            return QuadScalar(self._a / other, self._b / other)
        if not isinstance(other, QuadScalar):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QuadScalar.coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- order ------------------------------------------------------------
    def sign(self) -> int:
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # mixed signs: the larger of a^2 and 2 b^2 wins
        diff = a * a - 2 * b * b
        return sa if diff > 0 else sb

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        if not isinstance(other, QuadScalar):
            return NotImplemented
        return self._a == other._a and self._b == other._b

    def __lt__(self, other):
        if not isinstance(other, (QuadScalar, int, Fraction)):
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self):
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def floor(self) -> int:
        """Exact floor of the real value."""
        # value = (A + B sqrt2) / d with integers A, B and d > 0
        d = math.lcm(self._a.denominator, self._b.denominator)
        A = self._a.numerator * (d // self._a.denominator)
        B = self._b.numerator * (d // self._b.denominator)
        r = math.isqrt(2 * B * B)
        if B >= 0:
            whole = A + r
        else:
            whole = A - r if r * r == 2 * B * B else A - r - 1
        # A + B sqrt2 lies in [whole, whole + 1), so dividing by d cannot cross an integer
        return whole // d

    def __floor__(self):
        return self.floor()

    def round(self) -> int:
        """Nearest integer, ties resolved upward."""
        return (self + Fraction(1, 2)).floor()

    # -- reporting ----------------------------------------------------------
    def enclosure(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """Rational interval containing the real value."""
        lo2, hi2 = sqrt_enclosure(2, bits)
        if self._b >= 0:
            return self._a + self._b * lo2, self._a + self._b * hi2
        return self._a + self._b * hi2, self._a + self._b * lo2

    def enclose(self, rel_bits: int = 53) -> tuple[Fraction, Fraction]:
        """Enclosure whose width is at most 2^-rel_bits of the magnitude."""
        if self._b == 0:
            return self._a, self._a
        if self.sign() == 0:  # pragma: no cover - b != 0 means irrational
            return Fraction(0), Fraction(0)
        bits = 64
        while True:
            lo, hi = self.enclosure(bits)
            if (lo > 0 or hi < 0) and (hi - lo) * (1 << rel_bits) <= min(abs(lo), abs(hi)):
                return lo, hi
            bits *= 2

    def to_float(self) -> float:
        """Nearest-ish double (within a few ulp); never used for decisions."""
        s = self.sign()
        if s == 0:
            return 0.0
        bits = 64
        while True:
            lo, hi = self.enclosure(bits)
            try:
                flo, fhi = float(lo), float(hi)
            except OverflowError:
                raise OverflowError("QuadScalar magnitude exceeds double range") from None
            if math.isinf(flo) or math.isinf(fhi):
                raise OverflowError("QuadScalar magnitude exceeds double range")
            # the enclosure excludes 0 once it is tight enough, so relative accuracy follows
            if (lo > 0 or hi < 0) and abs(fhi - flo) <= 2 * math.ulp(max(abs(flo), abs(fhi))):
                return float((lo + hi) / 2)
            bits *= 2

    def __float__(self):
        return self.to_float()

    def __repr__(self):
        return f"QuadScalar({self._a!s}, {self._b!s})"

    def __str__(self):
        if self._b == 0:
            return str(self._a)
        if self._a == 0:
            return f"{self._b}*sqrt2"
        op = "-" if self._b < 0 else "+"
        return f"{self._a} {op} {abs(self._b)}*sqrt2"

    @classmethod
    def parse(cls, text: str) -> "QuadScalar":
        """Parse ``"a/b + c/d*sqrt2"`` and the variants emitted by ``str``."""
        s = text.replace(" ", "")
        num = r"\d+(?:/\d+)?"
        if not s.endswith("sqrt2"):
            if not re.fullmatch(r"[+-]?" + num, s):
                raise ValueError(f"not a QuadScalar literal: {text!r}")
            return cls(Fraction(s), 0)
        prefix = s[:-5].rstrip("*")
        m = re.fullmatch(r"(?P<sgn>[+-]*)(?P<b>" + num + r")?", prefix)
        if m:
            a, sgn, b = "0", m.group("sgn"), m.group("b")
        else:
            m = re.fullmatch(r"(?P<a>[+-]?" + num + r")(?P<sgn>[+-]+)(?P<b>" + num + r")?", prefix)
            if not m:
                raise ValueError(f"not a QuadScalar literal: {text!r}")
            a, sgn, b = m.group("a"), m.group("sgn"), m.group("b")
        coeff = Fraction(b) if b else Fraction(1)
        if sgn.count("-") % 2:
            coeff = -coeff
        return cls(Fraction(a), coeff)

    def to_json(self) -> dict:
        return {
            "a": [str(self._a.numerator), str(self._a.denominator)],
            "b": [str(self._b.numerator), str(self._b.denominator)],
        }

    @classmethod
    def from_json(cls, obj) -> "QuadScalar":
        if isinstance(obj, (int, str)):
            return cls.parse(str(obj))
        a = Fraction(int(obj["a"][0]), int(obj["a"][1]))
        b = Fraction(int(obj["b"][0]), int(obj["b"][1]))
        return cls(a, b)


ZERO = QuadScalar(0, 0)
ONE = QuadScalar(1, 0)
SQRT2 = QuadScalar(0, 1)
UNIT = QuadScalar(-1, 1)  # sqrt2 - 1, the fundamental unit in (0, 1)


def sign(x) -> int:
    return QuadScalar.coerce(x).sign()


def small_unit(eps) -> tuple[int, QuadScalar]:
    """Smallest k >= 1 with ``0 < (sqrt2 - 1)**k <= eps``."""
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    k, u = 1, UNIT
    while u > eps:
        k += 1
        u = u * UNIT
    return k, u


def approximate_real(t, eps) -> QuadScalar:
    """An element q of Z[sqrt2] with |q - t| <= eps.

    Uses an integer multiple of a small power of the fundamental unit, so
    the error is at most half that power.
    """
    t = as_fraction(t)
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if t == 0:
        return ZERO
    _, u = small_unit(eps)
    m = (QuadScalar(t) / u).round()
    q = u * m
    assert abs(q - t) <= eps
    return q
