"""Lambda-rings: the binomial structure on Z, the monoidal structure on Z[M],
polynomial rings R[x] = R (x) Z[N+], lambda_t series, Adams operations,
element degree and an axiom-checking harness.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb

from .exact_algebra import TruncSeries, UPoly, series_inv
from .monoid import FiniteMonoid, FreeAdd, MonoidRingElem, PointedMonoid
from .symmetric import universal_P, universal_P2


def binomial(m, n):
    """m choose n for any integer m, via m(m-1)...(m-n+1)/n!."""
    if n < 0:
        return 0
    if m >= 0:
        return comb(m, n)
    return (-1) ** n * comb(n - m - 1, n)


@dataclass(frozen=True)
class ExceedsBound:
    """Degree search gave up: lambda^bound(x) is still nonzero."""

    bound: int

    def __str__(self):
        return f">{self.bound - 1} (exceeds bound {self.bound})"


class LambdaRing:
    """A commutative ring with a family of operations lambda^n.

    Subclasses provide ``lambda_n`` or ``lambda_t`` (each defaults to the
    other), ``one``/``zero`` and ``random_element``.
    """

    name = "R"

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, n):
        return n

    def is_zero(self, x):
        return x == 0

    def lambda_n(self, x, n):
        if n < 0:
            raise ValueError("n must be >= 0")
        return self.lambda_t(x, n)[n]

    def lambda_t(self, x, order):
        return TruncSeries([self.lambda_n(x, i) for i in range(order + 1)], order, self.name)

    def adams(self, x, k):
        """psi^k(x) from the Newton recursion."""
        if k < 1:
            raise ValueError("k must be >= 1")
        lam = self.lambda_t(x, k).coeffs
        psi = [None]
        for j in range(1, k + 1):
            acc = self.coerce((-1) ** (j - 1) * j) * lam[j]
            for i in range(1, j):
                term = lam[i] * psi[j - i]
                acc = acc + term if i % 2 == 1 else acc - term
            psi.append(acc)
        return psi[k]

    def certified_degree(self, x):
        """An exact degree when one is decidable without search, else None."""
        return None

    def random_element(self, rng):
        raise NotImplementedError

    def format(self, x):
        return str(x)

    def __repr__(self):
        return self.name


class BinomialZ(LambdaRing):
    """Z with lambda^n(m) = m choose n."""

    name = "Z"

    def lambda_n(self, x, n):
        if n < 0:
            raise ValueError("n must be >= 0")
        return binomial(x, n)

    def certified_degree(self, x):
        # (1+t)^m is a polynomial of degree m for m >= 0; for m < 0 every coefficient is nonzero.
        return x if x >= 0 else None

    def random_element(self, rng, bound=5):
        return rng.randint(-bound, bound)


@lru_cache(maxsize=4096)
def _monoid_lambda_t(M, x, order):
    result = TruncSeries.one(order)
    one = MonoidRingElem.scalar(M, 1)
    for m, a in x.terms.items():
        g = MonoidRingElem.gen(M, m)
        b = abs(a)
        # (1 + m t)^b by the binomial theorem
        coeffs = [one]
        power = one
        for i in range(1, min(b, order) + 1):
            power = power * g
            coeffs.append(power * comb(b, i))
        factor = TruncSeries(coeffs, order)
        if a < 0:
            factor = series_inv(factor)
        result = result * factor
    return TruncSeries(
        [c if isinstance(c, MonoidRingElem) else MonoidRingElem.scalar(M, c) for c in result.coeffs],
        order,
        f"Z[{M.name}]",
    )


class MonoidRing(LambdaRing):
    """Z[M] with lambda^1(m) = m and lambda^i(m) = 0 (i > 1) on monoid elements."""

    def __init__(self, monoid):
        self.monoid = monoid
        self.name = f"Z[{monoid.name}]"

    def coerce(self, n):
        return MonoidRingElem.scalar(self.monoid, n)

    def gen(self, m, coeff=1):
        return MonoidRingElem.gen(self.monoid, m, coeff)

    def lambda_t(self, x, order):
        """prod_i (1 + m_i t)^{a_i}, inverting (1 + m t)^{|a|} for negative a."""
        return _monoid_lambda_t(x.monoid, x, order)

    def certified_degree(self, x):
        if all(c > 0 for c in x.terms.values()):
            return sum(x.terms.values())
        return None

    def adams_direct(self, x, k):
        return x.adams(k)

    def random_element(self, rng, support=3, coeff=3):
        elems = self.monoid.elements()
        k = rng.randint(0, min(support, len(elems)))
        chosen = rng.sample(elems, k)
        return MonoidRingElem(self.monoid, {m: rng.choice([c for c in range(-coeff, coeff + 1) if c]) for m in chosen})


class PolyOver(LambdaRing):
    """R[x] = R (x) Z[N+], elements are UPoly with coefficients in R.

    lambda_t(sum r_i x^i) = prod_i lambda_t(r_i x^i), and since x^i has
    degree one, lambda^n(r x^i) = lambda^n(r) x^{in}.
    """

    def __init__(self, base):
        self.base = base
        self.name = f"{base.name}[x]"

    def coerce(self, n):
        return UPoly((self.base.coerce(n),))

    def is_zero(self, x):
        return x.is_zero()

    def _mono_lambda_t(self, r, i, order):
        lam = self.base.lambda_t(r, order).coeffs
        return TruncSeries([UPoly.monomial(lam[n], i * n) for n in range(order + 1)], order)

    def lambda_t(self, x, order):
        result = TruncSeries([self.coerce(1)], order)
        for i, r in enumerate(x.coeffs):
            if not self.base.is_zero(r):
                result = result * self._mono_lambda_t(r, i, order)
        return TruncSeries([c if isinstance(c, UPoly) else self.coerce(c) for c in result.coeffs], order, self.name)

    def random_element(self, rng, degree=2):
        return UPoly(self.base.random_element(rng) for _ in range(degree + 1))


def lambda_n(R, x, n):
    return R.lambda_n(x, n)


def lambda_t(R, x, order):
    return R.lambda_t(x, order)


def adams(R, x, k):
    return R.adams(x, k)


def degree(R, x, bound):
    """Largest k <= bound with lambda^k(x) != 0, or ExceedsBound.

    When a certificate exists (e.g. Z[M] elements with positive coefficients,
    whose lambda_t is the polynomial prod (1+m t)^a) the exact degree is
    returned without searching.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    cert = R.certified_degree(x)
    if cert is not None:
        return cert
    lam = R.lambda_t(x, bound).coeffs
    if not R.is_zero(lam[bound]):
        return ExceedsBound(bound)
    for k in range(bound - 1, -1, -1):
        if not R.is_zero(lam[k]):
            return k
    return 0


def degree_le_one_submonoid(R, sample, bound=4):
    """R_1 restricted to a sample: the elements of degree <= 1, plus 0 and 1.

    Returns a pointed monoid whose underlying monoid lists the nonzero
    members; raises ``ValueError`` if a product of two members leaves the set
    with degree > 1 (products of degree-one elements stay degree-one or 0).
    """
    members = {R.one()}
    for x in sample:
        d = degree(R, x, bound)
        if isinstance(d, int) and d <= 1 and not R.is_zero(x):
            members.add(x)
    for a in list(members):
        for b in list(members):
            p = a * b
            if R.is_zero(p):
                continue
            d = degree(R, p, bound)
            if not (isinstance(d, int) and d <= 1):
                raise ValueError(f"product {a} * {b} has degree {d}")
    ordered = sorted(members, key=str)
    return PointedMonoid(FiniteMonoid(ordered, lambda a, b: a * b, R.one(), name=f"{R.name}_1"))


@dataclass
class AxiomResult:
    axiom: int
    passed: bool = True
    checks: int = 0
    witness: object = None

    def fail(self, witness):
        if self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class AxiomReport:
    ring: str
    n_max: int
    samples: int
    results: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(r.passed for r in self.results.values())

    def to_dict(self):
        return {
            "ring": self.ring,
            "n_max": self.n_max,
            "samples": self.samples,
            "passed": self.passed,
            "axioms": {
                str(k): {"passed": r.passed, "checks": r.checks, "witness": None if r.witness is None else repr(r.witness)}
                for k, r in sorted(self.results.items())
            },
        }


def check_axioms(R, samples, n_max, nm_max=None):
    """Check the six lambda-ring axioms on sample pairs.

    Axiom 5 uses P_n, axiom 6 uses P_{n,m} for n, m <= n_max with
    n*m <= nm_max (default: the configured universal_nm_max). Failures are
    recorded with the first witness found, never raised.
    """
    from .config import get_config

    nm_max = get_config().universal_nm_max if nm_max is None else nm_max
    report = AxiomReport(R.name, n_max, len(samples))
    res = {i: AxiomResult(i) for i in range(1, 7)}
    report.results = res
    one = R.one()
    comp_pairs = [(n, m) for n in range(1, n_max + 1) for m in range(1, n_max + 1) if n * m <= nm_max]
    depth = max([n_max] + [n * m for n, m in comp_pairs])
    P = {n: universal_P(n) for n in range(1, n_max + 1)}
    P2 = {nm: universal_P2(*nm) for nm in comp_pairs}

    for n in range(2, n_max + 1):
        res[3].checks += 1
        if not R.is_zero(R.lambda_n(one, n)):
            res[3].fail(("lambda^n(1)", n))

    cache = {}

    def lam(x):
        if x not in cache:
            cache[x] = R.lambda_t(x, depth).coeffs
        return cache[x]

    for x, y in samples:
        lx, ly = lam(x), lam(y)
        for z, lz in ((x, lx), (y, ly)):
            res[1].checks += 1
            if lz[0] != one:
                res[1].fail((z,))
            res[2].checks += 1
            if lz[1] != z:
                res[2].fail((z,))
        lxy_sum = lam(x + y)
        lxy_prod = lam(x * y)
        for n in range(1, n_max + 1):
            res[4].checks += 1
            rhs = R.zero()
            for i in range(n + 1):
                rhs = rhs + lx[i] * ly[n - i]
            if lxy_sum[n] != rhs:
                res[4].fail((x, y, n))
            res[5].checks += 1
            values = list(lx[1 : n + 1]) + list(ly[1 : n + 1])
            if lxy_prod[n] != P[n].evaluate(values, one):
                res[5].fail((x, y, n))
        for n, m in comp_pairs:
            res[6].checks += 1
            lhs = R.lambda_n(lx[m], n)
            rhs = P2[(n, m)].evaluate(list(lx[1 : n * m + 1]), one)
            if lhs != rhs:
                res[6].fail((x, n, m))
    return report


def sample_pairs(R, count, seed=0, **kw):
    rng = random.Random(seed)
    return [(R.random_element(rng, **kw), R.random_element(rng, **kw)) for _ in range(count)]


def polynomial_ring():
    """Z[x] as the monoid ring Z[N+] (the affine line over F1)."""
    return MonoidRing(FreeAdd())
