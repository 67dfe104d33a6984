"""Move one sequence near another with an isometry fixing 1 on 0..n."""
from fractions import Fraction

from orbitforge import SparseVec
from orbitforge.tower import act_stab, approximate_pair, fixed_point_witness

x0 = SparseVec({0: 3}, "N")
z = SparseVec({}, "N")
certs = []
for eps in (Fraction(1, 2), Fraction(1, 10), Fraction(1, 100)):
    cert = approximate_pair(x0, z, eps)
    certs.append(cert.g)
    print(f"eps={eps}: level n={cert.n}, {len(cert.g.reflectors)} reflection(s), "
          f"achieved distance^2 = {cert.achieved_dist2}  (<= {eps * eps}: {cert.ok})")

p = fixed_point_witness(certs)
print("common fixed point: 1 on indices 0 ..", p.max_index())
print("all fixed:", all(act_stab(g, p) == p for g in certs))
