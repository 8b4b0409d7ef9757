"""F1-modules with lambda-structure: finite abelian groups M with a family of
endomorphisms lambda_{M,n} (lambda_{M,1} = id, lambda_{M,n} lambda_{M,m} =
lambda_{M,nm}), the square-zero extension Z |> M with its induced
lambda-structure, Hom-counting from the affine line, and the classification
of the simple objects on C_p.

The induced structure follows R |> M -> W(R) |> W(M) -> W(R |> M): the
Z-slot goes through lambda_Z, the M-slot through the family, the two Witt
vectors are added inside W(Z |> M), and the inverse Artin-Hasse map turns the
sum back into lambda_t.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import gcd, prod

from .config import get_config
from .errors import EnumerationError, IntegralityError, NonUnitError, TruncationError
from .exact_algebra import TruncSeries
from .lambda_rings import LambdaRing, binomial
from .witt import WittVector, artin_hasse, artin_hasse_inv, sq_witt_op, witt_add


class SquareZeroElem:
    """(z, m) in Z |> M, M = prod Z/orders (order 0 meaning Z), with M^2 = 0."""

    __slots__ = ("z", "m", "orders")

    def __init__(self, z, m, orders):
        self.orders = tuple(orders)
        if isinstance(m, int):
            m = (m,)
        if len(m) != len(self.orders):
            raise ValueError("carrier element has the wrong number of components")
        self.z = z
        self.m = tuple(x % o if o else x for x, o in zip(m, self.orders))

    @classmethod
    def _make(cls, z, m, orders):
        # trusted constructor for internal arithmetic: orders already a tuple
        out = object.__new__(cls)
        out.z = z
        out.m = tuple([x % o if o else x for x, o in zip(m, orders)])
        out.orders = orders
        return out

    def _coerce(self, other):
        if type(other) is SquareZeroElem:
            if other.orders is not self.orders and other.orders != self.orders:
                raise ValueError("elements of different square-zero extensions")
            return other
        if isinstance(other, int):
            return SquareZeroElem._make(other, (0,) * len(self.orders), self.orders)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return SquareZeroElem._make(self.z + other.z, tuple(a + b for a, b in zip(self.m, other.m)), self.orders)

    __radd__ = __add__

    def __neg__(self):
        return SquareZeroElem._make(-self.z, tuple(-a for a in self.m), self.orders)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return SquareZeroElem._make(self.z * other, tuple(a * other for a in self.m), self.orders)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        m = tuple(self.z * b + other.z * a for a, b in zip(self.m, other.m))
        return SquareZeroElem._make(self.z * other.z, m, self.orders)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return SquareZeroElem._make(1, (0,) * len(self.orders), self.orders)
        zk1 = self.z ** (k - 1)
        return SquareZeroElem._make(zk1 * self.z, tuple(k * zk1 * a for a in self.m), self.orders)

    def __eq__(self, other):
        other = self._coerce(other) if isinstance(other, (int, SquareZeroElem)) else NotImplemented
        if other is NotImplemented:
            return NotImplemented
        return self.z == other.z and self.m == other.m

    def __hash__(self):
        return hash((self.z, self.m, self.orders))

    def is_zero(self):
        return self.z == 0 and not any(self.m)

    def exact_div(self, n):
        if self.z % n or any(o != 0 and a % n for a, o in zip(self.m, self.orders)):
            raise IntegralityError(f"{self} is not divisible by {n}", witness=(self, n))
        if any(o != 0 for o, a in zip(self.orders, self.m) if a):
            raise IntegralityError("division in a torsion carrier; lift first", witness=(self, n))
        return SquareZeroElem(self.z // n, tuple(a // n for a in self.m), self.orders)

    def unit_inverse(self):
        if self.z not in (1, -1):
            raise NonUnitError(f"{self} is not a unit", witness=self)
        return SquareZeroElem._make(self.z, tuple(-a for a in self.m), self.orders)

    def lift(self):
        return SquareZeroElem(self.z, self.m, (0,) * len(self.orders))

    def reduce(self, orders):
        return SquareZeroElem(self.z, self.m, orders)

    def __str__(self):
        m = self.m[0] if len(self.m) == 1 else self.m
        return f"({self.z}, {m})"

    __repr__ = __str__


class F1Module:
    """A carrier prod Z/orders with endomorphisms lambda_{M,n}, 1 <= n <= bound.

    ``family`` maps n to either an integer (a scalar endomorphism) or a square
    integer matrix acting on the carrier coordinates. Missing n default to the
    multiplicative extension from their prime factors; a missing prime index
    means the zero map.
    """

    def __init__(self, orders, family, bound=None):
        self.orders = tuple(orders)
        self.bound = get_config().module_bound if bound is None else bound
        if not self.orders or any(o < 1 for o in self.orders):
            raise ValueError("carrier orders must be positive")
        fam = {1: 1}
        fam.update(family)
        self.family = fam
        self._endo = {}

    @classmethod
    def cyclic(cls, p, scalars, bound=None):
        """C_p with lambda_n given by ``scalars`` (a dict n -> int)."""
        return cls((p,), scalars, bound)

    @property
    def size(self):
        return prod(self.orders)

    def elements(self):
        return list(product(*(range(o) for o in self.orders)))

    def endo(self, n):
        """lambda_{M,n}; an unspecified prime index is the zero map, composites extend multiplicatively."""
        if n in self.family:
            return self.family[n]
        if n not in self._endo:
            q = next((q for q in range(2, int(n**0.5) + 1) if n % q == 0), None)
            self._endo[n] = 0 if q is None else _compose(self.endo(q), self.endo(n // q))
        return self._endo[n]

    def apply(self, n, m):
        f = self.endo(n)
        if isinstance(f, int):
            return tuple((f * x) % o for x, o in zip(m, self.orders))
        return tuple(sum(r * x for r, x in zip(row, m)) % o for row, o in zip(f, self.orders))

    def is_cyclic_prime(self):
        return len(self.orders) == 1 and _is_prime(self.orders[0])

    def to_dict(self):
        return {
            "carrier": [f"Z/{o}" for o in self.orders],
            "bound": self.bound,
            "family": {str(n): f for n, f in sorted(self.family.items()) if n > 1},
        }

    def __repr__(self):
        return f"F1Module({self.orders}, {self.family})"


def _compose(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return a * b
    if isinstance(a, int):
        return [[a * x for x in row] for row in b]
    if isinstance(b, int):
        return [[b * x for x in row] for row in a]
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def validate_module(P):
    """(True, None) or (False, witness): lambda_1 = id and lambda_n lambda_m = lambda_nm."""
    elems = P.elements()
    for m in elems:
        if P.apply(1, m) != m:
            return False, (1, 1)
    for n in range(2, P.bound + 1):
        for k in range(n, P.bound // n + 1):
            for m in elems:
                if P.apply(n, P.apply(k, m)) != P.apply(n * k, m) or P.apply(k, P.apply(n, m)) != P.apply(n * k, m):
                    return False, (n, k)
    return True, None


def _family_vectors(P, m, N):
    """(lambda_{P,k}(m))_{k <= N} as square-zero elements (0, .)."""
    return [SquareZeroElem(0, P.apply(k, m), P.orders) for k in range(1, N + 1)]


@lru_cache(maxsize=8192)
def _sq_lambda_t(orders, z, images, N):
    zero_m = (0,) * len(orders)
    # lambda_t of the Z-slot is (1 + t)^z, factored over the integers
    z_ah = artin_hasse(TruncSeries([binomial(z, k) for k in range(N + 1)], N), N)
    z_vec = WittVector([SquareZeroElem._make(c, zero_m, orders) for c in z_ah.components], "Z|>M")
    if any(any(im) for im in images):
        m_vec = WittVector([SquareZeroElem._make(0, im, orders) for im in images], "Z|>M")
        z_vec = sq_witt_op(witt_add, z_vec, m_vec)
    return artin_hasse_inv(z_vec, N).coeffs


def square_zero_lambda(P, e, n, N=None):
    """lambda^n(e) for e in Z |> M under the structure induced by P."""
    N = n if N is None else N
    if n > N:
        raise TruncationError(f"lambda^{n} needs truncation >= {n}", witness=(n, N))
    if N > P.bound:
        raise TruncationError(f"family known up to {P.bound}, need {N}", witness=(N, P.bound))
    if n == 0:
        return SquareZeroElem(1, (0,) * len(P.orders), P.orders)
    # lambda^n depends only on the first n Witt components
    images = tuple(P.apply(k, e.m) for k in range(1, n + 1))
    return _sq_lambda_t(P.orders, e.z, images, n)[n]


class SquareZeroLambda(LambdaRing):
    """Z |> M as a lambda-ring through the structure induced by an F1-module."""

    def __init__(self, P):
        self.P = P
        self.name = f"Z|>{'x'.join(f'C{o}' for o in P.orders)}"

    def coerce(self, n):
        return SquareZeroElem(n, (0,) * len(self.P.orders), self.P.orders)

    def is_zero(self, x):
        return x.is_zero()

    def lambda_t(self, x, order):
        images = tuple(self.P.apply(k, x.m) for k in range(1, order + 1))
        if order > self.P.bound:
            raise TruncationError(f"family known up to {self.P.bound}, need {order}", witness=(order, self.P.bound))
        return TruncSeries(_sq_lambda_t(self.P.orders, x.z, images, order), order, self.name)

    def random_element(self, rng, bound=3):
        return SquareZeroElem(rng.randint(-bound, bound), tuple(rng.randrange(o) for o in self.P.orders), self.P.orders)


def hom_count(P):
    """#{m : lambda_{P,n}(m) = 0 for 1 < n <= bound}, from the kernels."""
    endos = [P.endo(n) for n in range(2, P.bound + 1)]
    if len(P.orders) == 1 and all(isinstance(f, int) for f in endos):
        p = P.orders[0]
        return sum(1 for m in range(p) if all(f * m % p == 0 for f in endos))
    count = 0
    for m in P.elements():
        if all(not any(P.apply(n, m)) for n in range(2, P.bound + 1)):
            count += 1
    return count


def hom_count_sqzero(P, depth=None):
    """The same count through the induced lambda on Z |> M.

    x -> (0, m) extends to a lambda-map from Z[x] exactly when (0, m) has
    degree <= 1, i.e. lambda^n((0, m)) = 0 for 1 < n <= depth.
    """
    depth = P.bound if depth is None else depth
    if depth > P.bound:
        raise TruncationError(f"family known up to {P.bound}, need {depth}", witness=(depth, P.bound))
    scalars = [P.endo(n) for n in range(1, depth + 1)]
    if len(P.orders) == 1 and all(isinstance(f, int) for f in scalars):
        p = P.orders[0]
        image_lists = [[((f * m) % p,) for f in scalars] for m in range(p)]
    else:
        image_lists = [[P.apply(n, m) for n in range(1, depth + 1)] for m in P.elements()]
    count = 0
    for imgs in image_lists:
        # same computation as square_zero_lambda, growing the image prefix lazily
        images = (imgs[0],)
        for n in range(2, depth + 1):
            images += (imgs[n - 1],)
            if not _sq_lambda_t(P.orders, 0, images, n)[n].is_zero():
                break
        else:
            count += 1
    return count


@dataclass(frozen=True)
class ModuleVerdict:
    simple: bool
    finite: bool
    geometrically_finite: bool
    non_degenerate: bool
    n_count: int

    def to_dict(self):
        return {
            "simple": self.simple,
            "finite": self.finite,
            "geometrically_finite": self.geometrically_finite,
            "non_degenerate": self.non_degenerate,
            "n_count": self.n_count,
        }


def verdict(P, n_count=None):
    n_count = hom_count(P) if n_count is None else n_count
    return ModuleVerdict(
        simple=P.is_cyclic_prime(),
        finite=True,
        geometrically_finite=True,
        non_degenerate=1 < n_count,
        n_count=n_count,
    )


def primes_upto(N):
    return [q for q in range(2, N + 1) if _is_prime(q)]


def _extend(p, bound, prime_values):
    """Multiplicative scalar family a_1..a_bound mod p from values at primes."""
    a = [0, 1] + [0] * (bound - 1)
    for n in range(2, bound + 1):
        if n in prime_values:
            a[n] = prime_values[n] % p
        else:
            q = next(q for q in range(2, n) if n % q == 0)
            a[n] = a[q] * a[n // q] % p
    return a


def iter_simple(p, bound=None):
    """All multiplicative scalar families on C_p, in lexicographic order of the prime values."""
    if not _is_prime(p):
        raise EnumerationError(f"{p} is not prime", witness=p)
    bound = get_config().module_bound if bound is None else bound
    ps = primes_upto(bound)
    for values in product(range(p), repeat=len(ps)):
        a = _extend(p, bound, dict(zip(ps, values)))
        P = F1Module.cyclic(p, {n: a[n] for n in range(2, bound + 1)}, bound)
        yield P, dict(zip(ps, values))


def enumerate_simple(p, bound=None):
    """Every simple object on C_p with its verdict; exactly one is non-degenerate."""
    out = []
    for P, _ in iter_simple(p, bound):
        out.append((P, verdict(P)))
    nondeg = [v for _, v in out if v.non_degenerate]
    if len(nondeg) != 1 or nondeg[0].n_count != p:
        raise EnumerationError(f"expected exactly one non-degenerate object on C_{p}", witness=len(nondeg))
    return out


@dataclass(frozen=True)
class SimpleClass:
    """Families on C_p sharing the same vanishing pattern at the primes."""

    zero_primes: tuple
    size: int
    n_count: int


def simple_classes(p, bound):
    """Group the families on C_p by which prime values vanish.

    A nonzero scalar is injective on C_p, so the common kernel of a family,
    and with it n(P), depends only on the set of primes q with a_q = 0. Each
    class is represented by the family with a_q = 1 at its nonzero primes,
    whose n(P) is counted directly; the class holds (p-1)^(#nonzero primes)
    families. Used where listing all p^pi(bound) families would be too slow.
    """
    if not _is_prime(p):
        raise EnumerationError(f"{p} is not prime", witness=p)
    ps = primes_upto(bound)
    out = []
    for mask in product((True, False), repeat=len(ps)):
        zero = tuple(q for q, z in zip(ps, mask) if z)
        a = _extend(p, bound, {q: 0 if q in zero else 1 for q in ps})
        rep = F1Module.cyclic(p, {n: a[n] for n in range(2, bound + 1)}, bound)
        out.append(SimpleClass(zero, (p - 1) ** (len(ps) - len(zero)), hom_count(rep)))
    return out


def norm(P):
    """|Hom(A[x], P)| = n(P), defined for finite objects."""
    return hom_count(P)


def kernel_gcd(p, a):
    """gcd(p, a_2, ..., a_bound): size of the common kernel on C_p."""
    g = p
    for x in a[2:]:
        g = gcd(g, x)
    return g
