"""Half-vectors far from the integer orbit, and support growth of Z wr Z."""
from orbitforge import SparseVec
from orbitforge.diagnostics import lattice_report, support_growth

for n in (1, 4, 16):
    row = lattice_report(n).rows[0]
    print(f"n={n:2d}: distance^2 = {row['distance2']['exact']}, distance in {row['distance']['enclosure']}")

rpt = support_growth("wreath-int", [SparseVec({0: 1}), SparseVec({1: 1, -1: 1})], L=6)
print("\nlength  direction  h_l")
for r in rpt.rows:
    print(f"{r['length']:6d}  {r['direction']:9d}  {r['exact'] or r['lo']}")
