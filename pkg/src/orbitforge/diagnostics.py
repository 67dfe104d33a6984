"""Probes of density, coarse density and half-lines on concrete orbits.

The integer-lattice orbit of Z wr Z is enveloping but not coarsely dense:
``(1/2) 1_{1..4n}`` sits at distance sqrt(n) from it. The Z[sqrt2] orbit is
dense, which :func:`density_report` certifies target by target. Half-lines
in an orbit show up as linear growth of support functions, tabulated by
:func:`support_growth`.
"""
from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cohomology import AffineAction, affine_ball
from .scalars import QuadScalar, as_fraction, decimal_enclosure, sqrt_enclosure
from .sequences import SparseVec, inner, norm2
from .wreath import GENERATORS, WreathElement, approximate_orbit, compose

__all__ = [
    "ProbeReport",
    "lattice_distance2",
    "density_report",
    "support_growth",
    "default_directions",
    "growth_is_monotone",
    "lattice_report",
    "wreath_ball",
]


def _enclosure(x, rel_bits: int = 40) -> tuple[Fraction, Fraction]:
    if isinstance(x, QuadScalar):
        return x.enclose(rel_bits)
    x = as_fraction(x)
    return x, x


@dataclass
class ProbeReport:
    """Probe description, per-item rows and verdict tags.

    Each row holds an exact value where one exists and a rational
    enclosure otherwise; verdicts are derived from exact comparisons.
    """

    description: str
    rows: list = field(default_factory=list)
    verdicts: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.get("certified", True) for r in self.rows)

    def to_json(self) -> dict:
        return {"description": self.description, "rows": self.rows, "verdicts": self.verdicts}

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.rows:
            keys = list(self.rows[0])
            w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
            w.writeheader()
            for r in self.rows:
                w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
        return buf.getvalue()


# ---------------------------------------------------------------------------
# the integer lattice


def lattice_distance2(probe: SparseVec) -> Fraction:
    """Squared distance from a rational vector to the finitely supported integer vectors."""
    if not probe.is_rational():
        raise ValueError("lattice_distance2 needs rational coordinates")
    total = Fraction(0)
    for _, c in probe.items():
        q = c.a
        frac = q - (q.numerator // q.denominator)
        total += min(frac, 1 - frac) ** 2
    return total


def lattice_report(n: int) -> ProbeReport:
    """The half-vector on 1..4n and its exact distance to the integer orbit."""
    probe = SparseVec.ones(1, 4 * n, Fraction(1, 2))
    d2 = lattice_distance2(probe)
    lo, hi = sqrt_enclosure(d2, 32)
    row = {
        "n": n,
        "probe": f"(1/2)*1[1..{4 * n}]",
        "distance2": {"exact": str(d2)},
        "distance": {"enclosure": decimal_enclosure(lo, hi)},
    }
    # every coordinate is within 1/2 of an integer, so (support)/4 bounds it
    bound = Fraction(len(probe), 4)
    verdicts = [f"coarse-dense-at-C: distance2 <= {bound} on this support"] if d2 <= bound else []
    return ProbeReport("integer-lattice orbit of Z wr Z", [row], verdicts)


# ---------------------------------------------------------------------------
# density


def density_report(targets, eps) -> ProbeReport:
    """Certified approximations of each target by the Z[sqrt2] wr Z orbit of 0."""
    eps = as_fraction(eps)
    rows = []
    for idx, target in enumerate(targets):
        approx = approximate_orbit(target, eps)
        lo, hi = _enclosure(approx.dist2, 40)
        rows.append(
            {
                "target": idx,
                "element": approx.element.to_json(),
                "distance2": {"exact": str(approx.dist2), "enclosure": decimal_enclosure(lo, hi)},
                "eps2": {"exact": str(eps * eps)},
                "certified": approx.certified,
            }
        )
    report = ProbeReport(f"Z[sqrt2] wr Z orbit of 0, eps = {eps}", rows)
    if report.ok:
        report.verdicts.append(f"dense-at-eps: {len(rows)} targets within {eps}")
    return report


# ---------------------------------------------------------------------------
# support-function growth


def wreath_ball(lattice: str, L: int) -> list[list[SparseVec]]:
    """Orbit points of 0 by word length: level l holds points first reached at length l."""
    gens = ["t", "a"] + (["b"] if lattice == "quad" else [])
    steps = []
    for g in gens:
        h = GENERATORS[g](lattice)
        steps.append(h)
        inv_f = tuple((i - h.s, -c) for i, c in h.f)
        steps.append(WreathElement(inv_f, -h.s, lattice))
    start = WreathElement.identity(lattice)
    seen = {start}
    frontier = [start]
    levels = [[start.translation_vector()]]
    for _ in range(L):
        nxt = []
        for g in frontier:
            for h in steps:
                k = compose(g, h)
                if k not in seen:
                    seen.add(k)
                    nxt.append(k)
        frontier = nxt
        # distinct group elements may share their orbit point
        levels.append(list({k.translation_vector() for k in nxt}))
    return levels


def _random_direction(rng: random.Random, lo: int, hi: int, domain: str) -> SparseVec:
    size = rng.randint(1, min(4, hi - lo + 1))
    idx = rng.sample(range(lo, hi + 1), size)
    return SparseVec({i: Fraction(rng.randint(-5, 5), rng.randint(1, 5)) or Fraction(1) for i in idx}, domain)


def default_directions(lo: int, hi: int, seed: int = 0, domain: str = "Z", count: int = 8) -> list[SparseVec]:
    """Coordinate directions on lo..hi followed by ``count`` seeded rational ones."""
    rng = random.Random(seed)
    coords = [SparseVec({i: 1}, domain) for i in range(lo, hi + 1)]
    return coords + [_random_direction(rng, lo, hi, domain) for _ in range(count)]


def _affine_points(action: AffineAction, L: int) -> list[list[SparseVec]]:
    levels = affine_ball(action.rep, action.values(), L)
    return [[SparseVec(dict(enumerate(t)), "N") for _, t in level] for level in levels]


def support_growth(action, directions=None, L: int = 6, seed: int = 0) -> ProbeReport:
    """Tabulate h_l(u) = max <p, u> / |u| over orbit points p of word length <= l.

    ``action`` is ``"wreath-int"``, ``"wreath-quad"`` or an AffineAction.
    The values are enclosed with exact rational endpoints; the exact
    maximum is kept where it is available. Linear growth in l along some
    direction is the finite-length signature of a half-line in the orbit.
    """
    if isinstance(action, AffineAction):
        levels = _affine_points(action, L)
        name = "affine"
        if directions is None:
            directions = default_directions(0, action.rep.dim - 1, seed, "N")
    elif action in ("wreath-int", "wreath-quad"):
        levels = wreath_ball(action.split("-")[1], L)
        name = action
        if directions is None:
            directions = default_directions(-L, L, seed, "Z")
    else:
        raise ValueError(f"unknown action {action!r}")

    rows = []
    for d_id, u in enumerate(directions):
        u2 = norm2(u)
        best = None
        for length, level in enumerate(levels):
            for p in level:
                val = inner(p, u)
                if best is None or val > best:
                    best = val
            if length == 0:
                continue
            if u2 == 0:
                lo = hi = Fraction(0)
                exact = "0"
            else:
                # divide by |u| using a rational enclosure of the norm
                blo, bhi = _enclosure(best, 48)
                nlo, nhi = sqrt_enclosure(u2.a, 48)
                cands = [blo / nlo, blo / nhi, bhi / nlo, bhi / nhi]
                lo, hi = min(cands), max(cands)
                exact = str(best) if u2.a.numerator == 1 and u2.a.denominator == 1 else None
            dlo, dhi = decimal_enclosure(lo, hi)
            rows.append(
                {
                    "length": length,
                    "direction": d_id,
                    "lo": dlo,
                    "hi": dhi,
                    "exact": exact,
                }
            )
    report = ProbeReport(f"support growth of the {name} orbit of 0", rows)
    report.verdicts.append("support-growth-table")
    return report


def growth_is_monotone(report: ProbeReport) -> bool:
    """h_l is nondecreasing in l for every direction (checked on exact enclosures)."""
    last: dict = {}
    for r in report.rows:
        d = r["direction"]
        lo, hi = Fraction(r["lo"]), Fraction(r["hi"])
        if d in last and hi < last[d][0]:
            return False
        last[d] = (lo, hi)
    return True
