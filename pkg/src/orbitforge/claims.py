"""The self-test suite: one exact, seeded check per structural claim.

Each check returns a :class:`CheckResult`. Reports exclude wall-clock
time so that equal seeds give byte-identical output; runtime limits are
enforced separately through ``limit`` and ``seconds``.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import corpus
from . import linalg as la
from .cohomology import (
    central_gap_check,
    cocycle_space,
    decompose,
    h1_dim,
    invariant_vectors,
    is_strongly_cohomological,
    orbit_decomposition_probe,
    vanish_on_centre_check,
)
from .diagnostics import lattice_distance2
from .scalars import QuadScalar, decimal_enclosure
from .sequences import SparseVec, dist2, dist2_to_An, dist2_to_An_closed_form, shift
from .tower import RunVec, act_stab, approximate_pair, fixed_point_witness
from .wreath import (
    GroupWord,
    WreathElement,
    act,
    approximate_orbit,
    cocycle,
    compose,
    evaluate_word,
    invert,
)

# levels needed by the tower search grow like (D / eps)^2
TOWER_N_MAX = 10**13


@dataclass
class CheckResult:
    key: str
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None

    @property
    def within_limit(self) -> bool:
        return self.limit is None or self.seconds < self.limit

    def to_json(self) -> dict:
        return {"check": self.key, "title": self.title, "passed": self.passed, "detail": self.detail}


def _rng(seed: int, k: int) -> random.Random:
    return random.Random(seed * 1000 + k)


def _rational(rng: random.Random, span: int = 50, den: int = 99) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_target(rng: random.Random, max_support: int, domain: str = "Z", lo: int = -20, hi: int = 20) -> SparseVec:
    k = rng.randint(0, max_support)
    idx = rng.sample(range(lo, hi + 1), k)
    return SparseVec({i: _rational(rng) for i in idx}, domain)


# ---------------------------------------------------------------------------


def check_dense_orbit(seed: int) -> tuple[bool, str]:
    rng = _rng(seed, 1)
    epsilons = [Fraction(1, 10**k) for k in range(1, 7)]
    worst = Fraction(0)
    for i in range(500):
        target = random_target(rng, 8)
        eps = epsilons[i % len(epsilons)]
        g = approximate_orbit(target, eps).element
        # re-derive the orbit point through the action, independently of the solver
        d2 = dist2(act(g, SparseVec({}, "Z")), target)
        if not d2 <= eps * eps:
            return False, f"target {i}: distance^2 {d2} exceeds {eps * eps}"
        worst = max(worst, (d2 / (eps * eps)).enclose(20)[1])
    return True, f"500 targets certified; max distance^2/eps^2 <= {decimal_enclosure(worst, worst, 6)[1]}"


def check_distance_formula(seed: int) -> tuple[bool, str]:
    rng = _rng(seed, 2)
    for _ in range(1000):
        v = random_target(rng, 8, "N", 0, 30)
        # the closed form sums over the support, so it needs n >= max index
        n = rng.randint(max(v.max_index(), 0), 40)
        if dist2_to_An(v, n) != dist2_to_An_closed_form(v, n):
            return False, f"mismatch at n={n}, v={v}"
    zero = SparseVec({}, "N")
    for n in range(10**4 + 1):
        if dist2_to_An(zero, n) != n + 1:
            return False, f"d(0, A_{n})^2 != {n + 1}"
    return True, "1000 random (v, n) agree with the closed form; d(0,A_n)^2 = n+1 for n <= 10^4"


def check_tower_density(seed: int) -> tuple[bool, str]:
    rng = _rng(seed, 3)
    epsilons = [Fraction(1), Fraction(1, 10), Fraction(1, 100)]
    produced = []
    top = 0
    for i in range(200):
        x0 = random_target(rng, 6, "N", 0, 10)
        z = random_target(rng, 6, "N", 0, 10)
        eps = epsilons[i % 3]
        cert = approximate_pair(x0, z, eps, n_max=TOWER_N_MAX)
        achieved = (act_stab(cert.g, x0) - RunVec.from_sparse(z)).norm2()
        if achieved != cert.achieved_dist2 or not achieved <= eps * eps:
            return False, f"pair {i}: achieved {achieved} vs eps^2 {eps * eps}"
        produced.append(cert.g)
        top = max(top, cert.n)
    # the whole set, and every prefix of it, has a common fixed point
    for k in range(1, len(produced) + 1, 20):
        fixed_point_witness(produced[:k])
    p = fixed_point_witness(produced)
    if any(act_stab(g, p) != p for g in produced):
        return False, "witness not fixed"
    return True, f"200 certificates with achieved_dist2 <= eps^2 (largest level {top}); common fixed point 1 on 0..{top}"


def check_lattice(seed: int) -> tuple[bool, str]:
    for n in range(1, 33):
        probe = SparseVec.ones(1, 4 * n, Fraction(1, 2))
        if lattice_distance2(probe) != n:
            return False, f"n={n}: got {lattice_distance2(probe)}"
    return True, "lattice_distance2((1/2)*1[1..4n]) = n for n = 1..32"


def _random_word(rng: random.Random, letters: str) -> GroupWord:
    length = rng.randint(0, 12)
    return GroupWord(tuple((rng.choice(letters), rng.choice((1, -1))) for _ in range(length)))


def check_cocycle_identities(seed: int) -> tuple[bool, str]:
    rng = _rng(seed, 5)
    for i in range(1000):
        lattice = "quad" if i % 2 else "int"
        letters = "tab" if lattice == "quad" else "ta"
        g, h, k = (evaluate_word(_random_word(rng, letters), lattice) for _ in range(3))
        e = WreathElement.identity(lattice)
        u = SparseVec({j: QuadScalar(_rational(rng, 5, 5), _rational(rng, 5, 5)) for j in rng.sample(range(-6, 7), 3)})
        v = SparseVec({j: _rational(rng, 5, 5) for j in rng.sample(range(-6, 7), 3)})
        gh = compose(g, h)
        checks = [
            compose(gh, k) == compose(g, compose(h, k)),
            compose(g, e) == g == compose(e, g),
            compose(g, invert(g)) == e == compose(invert(g), g),
            act(gh, u) == act(g, act(h, u)),
            cocycle(gh) == cocycle(g) + shift(cocycle(h), g.s),
            dist2(act(g, u), act(g, v)) == dist2(u, v),
            act(e, u) == u,
        ]
        if not all(checks):
            return False, f"case {i}: identity {checks.index(False)} failed"
    return True, "1000 cases: associativity, identity, inverses, action law, cocycle rule, isometry"


def check_central_gap(seed: int) -> tuple[bool, str]:
    rng = _rng(seed, 6)
    entries = corpus.gap_corpus()
    for label, P, R, z in entries:
        b = corpus.random_cocycle(P, R, rng)
        rep = central_gap_check(P, R, z, b, L=8)
        if not rep.bound_holds or rep.h1_dim != 0:
            return False, f"{label}: bound_holds={rep.bound_holds}, h1={rep.h1_dim}"
    return True, f"{len(entries)} representations: word extensions up to length 8 within the bound; H^1 = 0"


def check_nilpotent(seed: int) -> tuple[bool, str]:
    reps = corpus.nilpotent_reps()
    if len(reps) < 30:
        return False, "corpus too small"
    for label, P, R in reps:
        if invariant_vectors(R):
            return False, f"{label} has invariant vectors"
        if h1_dim(P, R) != 0:
            return False, f"{label}: H^1 != 0"
    for label, P, R in reps + corpus.reps_with_invariants():
        strong = is_strongly_cohomological(P, R).strongly_cohomological
        if strong and not invariant_vectors(R):
            return False, f"{label}: strongly cohomological without invariant vectors"
    n_heis = 0
    for label, P, R in reps:
        if not P.central:
            continue
        n_heis += 1
        for b in cocycle_space(P, R):
            if not vanish_on_centre_check(P, R, b, restrict=True).vanishes:
                return False, f"{label}: a cocycle is nonzero on the centre"
    return True, (
        f"{len(reps)} representations: H^1 = 0, none strongly cohomological; "
        f"{n_heis} Heisenberg reps: Z^1 vanishes on z (within the z-fixed summand)"
    )


def check_free_group(seed: int) -> tuple[bool, str]:
    reps = corpus.free_group_reps()
    for label, P, R in reps:
        d = R.dim
        inv = len(invariant_vectors(R))
        if h1_dim(P, R) != d + inv:
            return False, f"{label}: H^1 = {h1_dim(P, R)} != {d} + {inv}"
        for blk in decompose(R):
            if h1_dim(P, R, blk.matrix()) <= 0:
                return False, f"{label}: block of dim {blk.dim} has H^1 = 0"
    return True, f"{len(reps)} representations of F_2: dim H^1 = d + dim(invariants), every block has H^1 > 0"


def check_orbit_probe(seed: int) -> tuple[bool, str]:
    actions = corpus.affine_corpus(seed)
    n_fixed = n_trans = 0
    for label, A in actions:
        probe = orbit_decomposition_probe(A, L=8)
        if probe.fixed_point is not None:
            n_fixed += 1
            if not probe.bound_holds:
                return False, f"{label}: complement radius exceeds 2|v|"
        if all(A.rep.matrix(i) == la.identity(A.rep.dim) for i in range(A.rep.m)):
            n_trans += 1
            if any(r != 0 for r in probe.perp_radius_sq):
                return False, f"{label}: pure translation with nonzero complement radius"
    return True, f"{n_fixed} actions within 2|v| up to length 8; {n_trans} pure translations with complement radius 0"


CHECKS = [
    ("1", "dense orbits of Z[sqrt2] wr Z", check_dense_orbit, 10.0),
    ("2", "distance to A_n closed form", check_distance_formula, None),
    ("3", "stabilizer tower density and fixed points", check_tower_density, 30.0),
    ("4", "half-vectors at distance sqrt(n) from the integer lattice", check_lattice, None),
    ("5", "wreath product group and cocycle identities", check_cocycle_identities, None),
    ("6", "central gap bound 2|(1-pi(z))^-1||b(z)|", check_central_gap, None),
    ("7", "nilpotent groups: no strongly cohomological reps without invariants", check_nilpotent, None),
    ("8", "free group: every representation strongly cohomological", check_free_group, None),
    ("9", "orbit splits as translation part times bounded part", check_orbit_probe, None),
]


def run_check(key: str, seed: int) -> CheckResult:
    for k, title, fn, limit in CHECKS:
        if k == key:
            t0 = time.perf_counter()
            try:
                passed, detail = fn(seed)
            except Exception as exc:  # a crash is a failed check, reported as such
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            return CheckResult(k, title, passed, detail, time.perf_counter() - t0, limit)
    raise KeyError(key)


def render(results) -> str:
    return json.dumps([r.to_json() for r in results], indent=2, sort_keys=True) + "\n"


def check_determinism(seed: int, first: list | None = None) -> CheckResult:
    """Run the checks twice more with the same seed and compare the rendered reports."""
    t0 = time.perf_counter()
    a = render(first) if first is not None else render([run_check(k, seed) for k, *_ in CHECKS])
    b = render([run_check(k, seed) for k, *_ in CHECKS])
    ok = a == b
    detail = "repeated run with the same seed gives a byte-identical report" if ok else "reports differ"
    return CheckResult("10", "determinism", ok, detail, time.perf_counter() - t0)


def verify_claims(seed: int = 42) -> list[CheckResult]:
    results = [run_check(k, seed) for k, *_ in CHECKS]
    results.append(check_determinism(seed, results))
    return results
