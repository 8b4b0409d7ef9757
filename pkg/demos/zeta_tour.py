"""Euler products over primes, monoid-category norms and F1-module norms."""

import mpmath

from lforge.zeta import ZetaSpec, dirichlet_partial, euler_product, fixed_point_zeta, geometric_zeta_f1mod

for bound in (10, 1000, 100000):
    r = euler_product(ZetaSpec.primes(), 2, bound)
    print(f"prod over p<={bound:>6}: {mpmath.nstr(r.value, 15)}  (tail <= {mpmath.nstr(r.tail_bound, 3)})")
print("zeta(2)              :", mpmath.nstr(mpmath.zeta(2), 15))

d = dirichlet_partial(3, 10**4)
print("\nsum n^-3 to 10^4 + tail bound:", mpmath.nstr(d.value + d.tail_bound, 15))
print("fixed-point zeta at s=3      :", mpmath.nstr(fixed_point_zeta(3, 10**4).value, 15))

m = euler_product(ZetaSpec.monoidcat(), 2, 1000)
print("\nmonoid-category zeta at 2:", mpmath.nstr(m.value, 12), " ratio to primes:",
      mpmath.nstr(m.value / euler_product(ZetaSpec.primes(), 2, 1000).value, 12))
print("F1-module zeta at 2      :", mpmath.nstr(geometric_zeta_f1mod(2, 50).value, 12))
