"""H^1 for a few small groups, then the central-gap bound and an orbit probe."""
from orbitforge import corpus
from orbitforge import presentation as pres
from orbitforge.cohomology import (
    AffineAction,
    central_gap_check,
    coboundary_space,
    cocycle_space,
    h1_dim,
    is_strongly_cohomological,
    orbit_decomposition_probe,
)

rot = corpus.pythagorean(0)
cases = [
    ("F2, trivial 1-dim", pres.free_group(2), corpus.rep(corpus.I1, corpus.I1)),
    ("Z, rotation by 90 degrees", pres.integers(), corpus.rep(corpus.ROT90)),
    ("Z^2, two Pythagorean rotations", pres.free_abelian_2(), corpus.rep(rot, corpus.pythagorean(1))),
    ("Heisenberg, x rotates, y and z trivial", pres.heisenberg(), corpus.rep(rot, corpus.I2, corpus.I2)),
]
for label, P, R in cases:
    strong = is_strongly_cohomological(P, R).strongly_cohomological
    print(f"{label:40s} Z1={len(cocycle_space(P, R))} B1={len(coboundary_space(R))} "
          f"H1={h1_dim(P, R)} strongly cohomological={strong}")

Z = pres.integers()
gap = central_gap_check(Z, corpus.rep(corpus.ROT90), Z.word("x"), [[1, 0]], L=8)
print(f"\ncentral gap, Z by 90 degrees: C^2 = {gap.bound_sq}, max |b(g)|^2 = {gap.max_norm_sq}, holds={gap.bound_holds}")

A = AffineAction(Z, corpus.rep(corpus.ROT90), [[1, 0]])
probe = orbit_decomposition_probe(A, L=8)
print("fixed point", [str(x) for x in probe.fixed_point], "radii^2 by length", [str(r) for r in probe.perp_radius_sq])
