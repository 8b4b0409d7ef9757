"""Big Witt vectors as power series, and lambda-operations on group rings."""

from lforge import TruncSeries
from lforge.lambda_rings import MonoidRing
from lforge.monoid import Cyclic, MonoidRingElem
from lforge.lambda_rings import adams, degree, lambda_n
from lforge.witt import WittVector, artin_hasse, artin_hasse_inv, ghost_components, witt_add, witt_mul, witt_sym_names, witt_sym_polys

a, b = WittVector([1, 2, 0, -1]), WittVector([3, 0, 1, 1])
print("ghost(a) =", ghost_components(a.components))
print("a + b    =", witt_add(a, b).components)
print("a * b    =", witt_mul(a, b).components)

series = TruncSeries([1, 2, 3, 4], 3)
w = artin_hasse(series)
print("1+2t+3t^2+4t^3 as Witt components:", w.components, "back:", artin_hasse_inv(w))

polys = witt_sym_polys(3)
print("third component of a+b:", polys["add"][2].format(witt_sym_names(3)))

R = MonoidRing(Cyclic(6))
g = MonoidRingElem.gen(Cyclic(6), 1)
r = g + g**2 + 2 * g**3
print(f"\nr = {r} in Z[C6]")
for n in range(1, 4):
    print(f"  lambda^{n}(r) = {lambda_n(R, r, n)}")
print("  psi^2(r) =", adams(R, r, 2))
print("  degree:", degree(R, r, 8), " degree of r - 1:", degree(R, r - 1, 8))
