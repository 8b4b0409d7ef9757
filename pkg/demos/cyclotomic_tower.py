"""Walk the lambda-stable quotients of Z[x] and build cyclotomic towers."""

from lforge import UPoly
from lforge.f1_closure import build_tower, classify_generator, cyc_factor, hom_count_affine_line, is_lambda_stable
from lforge.monoid import Cyclic

x = UPoly.x()

for f in [x**6 - 1, x**4 + x**2 + 1, x**2 - 2, x**4 - 1, x**5 - 1]:
    fac = cyc_factor(f)
    verdict = is_lambda_stable(f)
    line = f"{str(f):>16}  cyclotomic indices {fac.indices()}  {verdict.status}"
    if verdict.stable:
        line += f"  -> {classify_generator(f).kind}"
    elif verdict.witness is not None:
        line += f"  (witness {verdict.witness})"
    print(line)

print()
for N in (12, 30):
    tower = build_tower(N)
    print(f"tower to Z[C_{N}]: certified={tower.certified}")
    for step in tower.steps:
        print("   ", step.to_dict())

print()
print("points of Spec Z[x] over Z[C_n]:", [hom_count_affine_line(Cyclic(n)) for n in range(1, 11)])
