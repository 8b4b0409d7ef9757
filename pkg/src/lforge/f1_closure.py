"""Lambda-stable principal ideals of Z[x], their classification, the tower of
cyclotomic extensions of F1, and fixed-point counts on the affine line.

A monic f generates a lambda-ideal exactly when f | f(x^k) for every k
(Adams operations act on Z[x] by x -> x^k). For squarefree f this is
decided exactly: f must be x^a (a <= 1) times a product of distinct
cyclotomics Phi_d whose index set is closed under taking divisors.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .config import get_config
from .errors import NonEnumerableError, NotMonicError, UnstableGeneratorError
from .exact_algebra import UPoly, cyclotomic, is_squarefree, substitute_power, upoly_divrem
from .lambda_rings import BinomialZ, MonoidRing, degree
from .monoid import Cyclic, FreeAdd, MonoidRingElem, points


@dataclass(frozen=True)
class CycFactorization:
    x_power: int
    multiplicities: dict
    remainder: UPoly

    def indices(self):
        return sorted(self.multiplicities)

    def reconstruct(self):
        out = UPoly.monomial(1, self.x_power) * self.remainder
        for d, mult in self.multiplicities.items():
            out = out * cyclotomic(d) ** mult
        return out

    def to_dict(self):
        return {
            "x_power": self.x_power,
            "cyclotomic": {str(d): m for d, m in sorted(self.multiplicities.items())},
            "remainder": str(self.remainder),
        }


def cyc_factor(f):
    """Split off x^a and every Phi_d with deg Phi_d <= deg f by trial division.

    phi(d) >= sqrt(d/2), so only d <= 2 deg(f)^2 can qualify.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    a = 0
    while f[a] == 0:
        a += 1
    rest = UPoly(f.coeffs[a:])
    mult = {}
    for d in _cyclotomic_indices(rest.degree):
        phi = cyclotomic(d)
        while rest.degree >= phi.degree:
            q, r = upoly_divrem(rest, phi)
            if not r.is_zero():
                break
            mult[d] = mult.get(d, 0) + 1
            rest = q
    return CycFactorization(a, mult, rest)


@lru_cache(maxsize=None)
def _cyclotomic_indices(n):
    return tuple(d for d in range(1, 2 * n * n + 1) if _totient(d) <= n)


@dataclass(frozen=True)
class StabilityVerdict:
    status: str  # "stable" | "not_stable" | "stable_bounded"
    witness: object = None
    k_max: int = None
    squarefree: bool = True

    @property
    def stable(self):
        return self.status == "stable"

    def to_dict(self):
        out = {"verdict": self.status, "squarefree": self.squarefree}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.k_max is not None:
            out["k_max"] = self.k_max
        return out


def divides_adams_image(f, k):
    """f | f(x^k), by exact division."""
    return upoly_divrem(substitute_power(f, k), f)[1].is_zero()


def _missing_divisor(indices):
    s = set(indices)
    for d in sorted(s):
        for e in range(1, d):
            if d % e == 0 and e not in s:
                return d, e
    return None


def is_lambda_stable(f, k_max=None):
    """Decide whether the monic f generates a lambda-stable ideal of Z[x]."""
    if not f.is_monic():
        raise NotMonicError(f"{f} is not monic", witness=f.lc)
    k_max = get_config().k_max_stability if k_max is None else k_max
    if f.degree <= 0:
        return StabilityVerdict("stable", witness="unit ideal")
    fac = cyc_factor(f)
    # the cyclotomic parts and x are pairwise coprime and coprime to the remainder
    squarefree = fac.x_power <= 1 and all(m == 1 for m in fac.multiplicities.values())
    if squarefree and fac.remainder.degree > 0:
        squarefree = is_squarefree(fac.remainder)
    if not squarefree:
        bound = max(k_max, f.degree + 1)
        for k in range(2, bound + 1):
            if not divides_adams_image(f, k):
                return StabilityVerdict("not_stable", witness=k, squarefree=False)
        return StabilityVerdict("stable_bounded", k_max=bound, squarefree=False)
    if fac.remainder.degree > 0:
        # a root that is neither 0 nor a root of unity has infinitely many
        # distinct powers, so some k <= deg f + 1 already fails
        for k in range(2, max(k_max, f.degree + 1) + 1):
            if not divides_adams_image(f, k):
                return StabilityVerdict("not_stable", witness=k)
        raise AssertionError(f"no witness found for unstable {f}")
    missing = _missing_divisor(fac.indices())
    if missing is not None:
        d, e = missing
        # a primitive d-th root raised to k = d/e is a primitive e-th root
        return StabilityVerdict("not_stable", witness=d // e)
    return StabilityVerdict("stable", witness={"divisor_closed": fac.indices(), "x_power": fac.x_power})


def brute_force_stable(f, k_max=30):
    """True iff f | f(x^k) for every 1 <= k <= k_max.

    Independent of the factorization: tabulates x^j mod f for every
    exponent up to k_max * deg f and sums coefficients against that table.
    """
    n = f.degree
    if n <= 0:
        return True
    low = list(f.coeffs[:-1])
    table = [[0] * n]
    table[0][0] = 1 if n > 0 else 0
    row = table[0]

    def ensure(j):
        nonlocal row
        while len(table) <= j:
            top = row[-1]
            nxt = [0] + row[:-1]
            if top:
                for i, c in enumerate(low):
                    if c:
                        nxt[i] -= top * c
            table.append(nxt)
            row = nxt

    for k in range(2, k_max + 1):
        ensure(k * n)
        acc = [0] * n
        for i, c in enumerate(f.coeffs):
            if c:
                r = table[k * i]
                for j in range(n):
                    if r[j]:
                        acc[j] += c * r[j]
        if any(acc):
            return False
    return True


@dataclass(frozen=True)
class Classification:
    kind: str  # decomposable | non_decomposable | simple_extension | nilpotent_quotient
    parts: tuple = ()
    prime: int = None
    forbidden_divisor: object = None

    def to_dict(self):
        out = {"kind": self.kind}
        if self.parts:
            out["parts"] = [str(p) for p in self.parts]
        if self.prime is not None:
            out["prime"] = self.prime
        if self.forbidden_divisor is not None:
            out["forbidden_divisor"] = str(self.forbidden_divisor)
        return out


def _factor_pieces(fac):
    pieces = [UPoly.x()] * fac.x_power
    for d in fac.indices():
        pieces += [cyclotomic(d)] * fac.multiplicities[d]
    return pieces


def _product(polys):
    out = UPoly((1,))
    for p in polys:
        out = out * p
    return out


def _is_prime(n):
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def classify_generator(f):
    """Decomposable / non-decomposable / simple extension for a stable generator.

    Decomposable: f = f1*f2 with both factors of positive degree and both
    stable. Simple: non-decomposable and no stable proper divisor g with
    0 < deg g < deg f other than x - 1 (whose quotient is F1 itself), which
    happens exactly for x^p - 1, p prime. x^a with a >= 2 has a nilpotent
    quotient and is reported separately.
    """
    if not f.is_monic():
        raise NotMonicError(f"{f} is not monic", witness=f.lc)
    fac = cyc_factor(f)
    if fac.x_power >= 2 and fac.remainder.degree <= 0:
        verdict = is_lambda_stable(f)
        if verdict.status == "not_stable":
            raise UnstableGeneratorError(f"{f} is not lambda-stable", witness=verdict.witness)
        return Classification("nilpotent_quotient")
    verdict = is_lambda_stable(f)
    if not verdict.stable:
        raise UnstableGeneratorError(f"{f} is not certified lambda-stable ({verdict.status})", witness=verdict.witness)
    pieces = _factor_pieces(fac)
    idx = range(len(pieces))
    stable_divisors = []
    seen = set()
    for r in range(1, len(pieces)):
        for chosen in combinations(idx, r):
            g = _product(pieces[i] for i in chosen)
            key = g.coeffs
            if key in seen:
                continue
            seen.add(key)
            h = _product(pieces[i] for i in idx if i not in chosen)
            g_ok = is_lambda_stable(g).status != "not_stable"
            if g_ok:
                stable_divisors.append(g)
            if g_ok and is_lambda_stable(h).status != "not_stable":
                return Classification("decomposable", parts=(g, h))
    forbidden = [g for g in stable_divisors if g != UPoly((-1, 1)) and g != UPoly.x()]
    if f.degree >= 2 and not forbidden:
        p = f.degree
        if f == UPoly.monomial(1, p) - 1 and _is_prime(p):
            return Classification("simple_extension", prime=p)
        raise AssertionError(f"{f} has no forbidden divisor yet is not x^p - 1")
    return Classification("non_decomposable", forbidden_divisor=forbidden[0] if forbidden else None)


class QuotientElem:
    """Element of Z[C_n][x]/(x^p - mu^i) in the basis mu^a x^b (a < n, b < p)."""

    __slots__ = ("n", "p", "i", "terms")

    def __init__(self, n, p, i, terms):
        self.n, self.p, self.i = n, p, i
        self.terms = {k: v for k, v in terms.items() if v}

    def _reduce_mono(self, a, b):
        a += (b // self.p) * self.i
        return a % self.n, b % self.p

    def __mul__(self, other):
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = self._reduce_mono(a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return QuotientElem(self.n, self.p, self.i, out)

    def is_one(self):
        return self.terms == {(0, 0): 1}


@dataclass
class TowerStep:
    n: int
    p: int
    i: int
    unit_power: int
    order: int
    basis_ok: bool

    def to_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "i": self.i,
            "generator": f"x*mu^{self.unit_power}",
            "order": self.order,
            "certified": self.basis_ok,
        }


@dataclass
class ExtensionTower:
    target: int
    steps: list = field(default_factory=list)

    @property
    def certified(self):
        n = 1
        for s in self.steps:
            if s.n != n or not _is_prime(s.p) or not s.basis_ok or s.order != s.n * s.p:
                return False
            n *= s.p
        return n == self.target

    def to_dict(self):
        return {"target": self.target, "certified": self.certified, "steps": [s.to_dict() for s in self.steps]}


def _prime_factors(N):
    out, d = [], 2
    while d * d <= N:
        while N % d == 0:
            out.append(d)
            N //= d
        d += 1
    if N > 1:
        out.append(N)
    return out


def certify_step(n, p, i):
    """Find a unit mu^j so that u = x*mu^j generates Z[C_n][x]/(x^p - mu^i) as Z[C_np].

    Certificate: u has multiplicative order n*p and its powers are exactly the
    n*p basis monomials mu^a x^b, so they form a Z-basis.
    """
    basis = {(a, b) for a in range(n) for b in range(p)}
    for j in range(n):
        u = QuotientElem(n, p, i, {(j, 1): 1})
        power = QuotientElem(n, p, i, {(0, 0): 1})
        seen = []
        for _ in range(n * p):
            if len(power.terms) != 1:
                break
            (mono, c), = power.terms.items()
            if c != 1:
                break
            seen.append(mono)
            power = power * u
        if power.is_one() and len(seen) == n * p and set(seen) == basis:
            return TowerStep(n, p, i, j, n * p, True)
    return TowerStep(n, p, i, -1, 0, False)


def build_tower(N):
    """Prime-by-prime chain F1 -> F1[mu_p1] -> ... -> F1[mu_N]."""
    if N < 1:
        raise ValueError("N must be >= 1")
    tower = ExtensionTower(N)
    n = 1
    for p in _prime_factors(N):
        i = 0 if n % p else 1
        tower.steps.append(certify_step(n, p, i))
        n *= p
    return tower


def hom_count_affine_line(M):
    """|Hom_lambda(Z[x], Z[M])| = |M+|, cross-checked against B-points.

    Candidate images of x are the elements of M and 0; each is confirmed to
    have degree <= 1 in Z[M], and the count is compared with the pointed
    monoid maps N+ -> M+.
    """
    if not getattr(M, "finite", False):
        raise NonEnumerableError(f"{M} is not finite")
    R = MonoidRing(M)
    images = [R.zero()]
    for m in M.elements():
        images.append(MonoidRingElem.gen(M, m))
    for img in images:
        d = degree(R, img, 2)
        if not (isinstance(d, int) and d <= 1):
            raise AssertionError(f"image {img} has degree {d}")
    count = len(images)
    via_points = len(points(FreeAdd(), M))
    if via_points != count:
        raise AssertionError(f"Hom count {count} disagrees with point count {via_points}")
    return count


def closure_fixed_count(n):
    """Points of the affine line over F1[Q/Z] fixed by psi^n.

    A nonzero fixed point zeta satisfies zeta^(n-1) = 1, so it is a root of
    unity whose order d divides n-1; there are phi(d) of each order. Plus the
    point 0. At n = 1 only 0 is counted (the same convention as
    ``fixed_point_count``).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return 1
    m = n - 1
    count = 1
    for d in range(1, math.isqrt(m) + 1):
        if m % d == 0:
            count += _totient(d)
            if d * d != m:
                count += _totient(m // d)
    return count


def _totient(n):
    out, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def augmentation_check(n, samples=50, order=4, seed=0):
    """The coefficient sum Z[C_n] -> Z commutes with lambda^k for k <= order."""
    import random

    M = Cyclic(n)
    R, Z = MonoidRing(M), BinomialZ()
    rng = random.Random(seed)
    elems = [MonoidRingElem.gen(M, m) for m in M.elements()]
    elems += [R.random_element(rng) for _ in range(samples)]
    for x in elems:
        lam = R.lambda_t(x, order).coeffs
        for k in range(order + 1):
            if lam[k].augmentation() != Z.lambda_n(x.augmentation(), k):
                return False
    return True
