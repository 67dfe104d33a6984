"""Walk a rational target into the Z[sqrt2] wr Z orbit of 0 at shrinking eps."""
from fractions import Fraction

from orbitforge import SparseVec, approximate_orbit, approximate_real, small_unit
from orbitforge.scalars import decimal_enclosure

t = Fraction(1, 2)
print("approximating 1/2 inside Z[sqrt2]")
for k in range(1, 7):
    eps = Fraction(1, 10**k)
    power, _ = small_unit(eps)
    q = approximate_real(t, eps)
    lo, hi = (q - t).enclose(40)
    print(f"  eps=1e-{k}  unit power {power:2d}  q = {q}  error in {decimal_enclosure(lo, hi, 8)}")

target = SparseVec({-2: Fraction(3, 7), 0: Fraction(-1, 3), 5: Fraction(22, 9)})
print("\nthe orbit of 0 comes arbitrarily close to", target)
for k in (1, 3, 6):
    eps = Fraction(1, 10**k)
    res = approximate_orbit(target, eps)
    lo, hi = res.dist2.enclose(40)
    print(f"  eps=1e-{k}  distance^2 in {decimal_enclosure(lo, hi, 6)}  certified={res.certified}")
