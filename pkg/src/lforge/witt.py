"""Big Witt vectors truncated to indices 1..N.

Arithmetic goes through ghost coordinates w_n = sum_{d|n} d * a_d^(n/d):
the inputs are mapped to ghosts, combined componentwise, and the result is
recovered by the triangular solve a_n = (w_n - sum_{d|n, d<n} d a_d^(n/d)) / n.
Each division must be exact; a remainder means a bug, so it raises
``IntegralityError`` instead of being rounded away.

Series picture: a vector (b_1, b_2, ...) corresponds to the invertible
series prod_i (1 - (-1)^i b_i t^i). With this sign convention the ghost
components are (-1)^(n+1) times the coefficients of t * d/dt log f, so Witt
addition is series multiplication and ghost(lambda_R r) = (psi^1 r, psi^2 r, ...).
"""

from dataclasses import dataclass

from .errors import FeasibilityError, InexactDivisionError, IntegralityError, TruncationError
from .exact_algebra import MPoly, TruncSeries

SYMBOLIC_MAX = 6


def _exact_div(x, n):
    if n == 1:
        return x
    if isinstance(x, int):
        q, r = divmod(x, n)
        if r:
            raise IntegralityError(f"{x} is not divisible by {n}", witness=(x, n))
        return q
    if isinstance(x, MPoly):
        try:
            return x.exact_div(n).to_integer()
        except InexactDivisionError as exc:
            raise IntegralityError(f"polynomial not divisible by {n}", witness=exc.witness) from None
    return x.exact_div(n)


def _zero_like(x):
    return x * 0


def _one_like(x):
    return x * 0 + 1


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


class WittVector:
    """Components a_1..a_N over a base ring (ints or ring-element objects)."""

    __slots__ = ("components", "base")

    def __init__(self, components, base="Z"):
        self.components = tuple(components)
        self.base = base

    @classmethod
    def zero(cls, N, like=0, base="Z"):
        return cls([_zero_like(like)] * N, base)

    @classmethod
    def one(cls, N, like=0, base="Z"):
        z = _zero_like(like)
        return cls([_one_like(like)] + [z] * (N - 1), base)

    @classmethod
    def teichmuller(cls, r, N, base="Z"):
        """(r, 0, 0, ...), the image of a degree-one element."""
        return cls([r] + [_zero_like(r)] * (N - 1), base)

    @property
    def length(self):
        return len(self.components)

    def __getitem__(self, n):
        """1-based component access."""
        if not 1 <= n <= self.length:
            raise IndexError(n)
        return self.components[n - 1]

    def _check(self, other):
        if not isinstance(other, WittVector):
            raise TypeError("expected a WittVector")
        if self.length != other.length:
            raise ValueError(f"truncation lengths differ: {self.length} vs {other.length}")
        if self.base != other.base:
            raise ValueError(f"base rings differ: {self.base} vs {other.base}")

    def __add__(self, other):
        return witt_add(self, other)

    def __mul__(self, other):
        return witt_mul(self, other)

    def __neg__(self):
        return witt_neg(self)

    def __sub__(self, other):
        return witt_add(self, witt_neg(other))

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return self.base == other.base and self.components == other.components

    def __hash__(self):
        return hash((self.base, self.components))

    def to_list(self):
        return [c if isinstance(c, int) else str(c) for c in self.components]

    def __repr__(self):
        return f"WittVector({list(self.components)!r}, base={self.base!r})"


@dataclass(frozen=True)
class GhostVector:
    components: tuple

    def __getitem__(self, n):
        return self.components[n - 1]

    def __len__(self):
        return len(self.components)

    def to_list(self):
        return [c if isinstance(c, int) else str(c) for c in self.components]


class BigWittSeries(TruncSeries):
    """An element of Lambda(R): a truncated series with constant term exactly 1."""

    def __init__(self, coeffs, order, base=None):
        super().__init__(coeffs, order, base)
        if self.coeffs[0] != 1:
            raise ValueError(f"constant term must be 1, got {self.coeffs[0]}")


def ghost_components(components):
    out = []
    for n in range(1, len(components) + 1):
        acc = None
        for d in _divisors(n):
            term = components[d - 1] ** (n // d) * d
            acc = term if acc is None else acc + term
        out.append(acc)
    return tuple(out)


def ghost(a):
    return GhostVector(ghost_components(a.components))


def from_ghost(w, base="Z"):
    """Solve for the Witt components with the given ghost vector (exact division)."""
    comps = []
    for n in range(1, len(w) + 1):
        acc = w[n - 1]
        for d in _divisors(n)[:-1]:
            acc = acc - comps[d - 1] ** (n // d) * d
        comps.append(_exact_div(acc, n))
    return WittVector(comps, base)


def witt_add(a, b):
    a._check(b)
    wa, wb = ghost_components(a.components), ghost_components(b.components)
    return from_ghost([x + y for x, y in zip(wa, wb)], a.base)


def witt_mul(a, b):
    a._check(b)
    wa, wb = ghost_components(a.components), ghost_components(b.components)
    return from_ghost([x * y for x, y in zip(wa, wb)], a.base)


def witt_neg(a):
    return from_ghost([-x for x in ghost_components(a.components)], a.base)


def frobenius_witt(a, n):
    """f_n: ghost(f_n a)_k = ghost(a)_{nk}; the result has length floor(N/n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > a.length:
        raise TruncationError(f"f_{n} needs length >= {n}, have {a.length}", witness=(n, a.length))
    w = ghost_components(a.components)
    return from_ghost([w[n * k - 1] for k in range(1, a.length // n + 1)], a.base)


def verschiebung(a, n):
    """V_n: (V_n a)_{nk} = a_k and zero elsewhere, kept at length N."""
    if n < 1:
        raise ValueError("n must be >= 1")
    N = a.length
    zero = _zero_like(a.components[0]) if N else 0
    comps = [zero] * N
    for k in range(1, N // n + 1):
        comps[n * k - 1] = a.components[k - 1]
    return WittVector(comps, a.base)


def _inverse_binomial(c, i, order, one):
    """1 / (1 + c t^i) truncated at ``order``."""
    coeffs = [one * 0] * (order + 1)
    coeffs[0] = one
    power = one
    for k in range(1, order // i + 1):
        power = power * (-c)
        coeffs[i * k] = power
    return TruncSeries(coeffs, order)


def artin_hasse(f, N=None, base="Z"):
    """Factor f = prod_i (1 - (-1)^i b_i t^i) and return (b_1, ..., b_N)."""
    N = f.order if N is None else N
    if N > f.order:
        raise TruncationError(f"series known to order {f.order}, asked for {N}", witness=(f.order, N))
    one = f[0]
    if one != 1:
        raise ValueError(f"constant term must be 1, got {one}")
    cur = TruncSeries(f.coeffs, N)
    comps = []
    for i in range(1, N + 1):
        c = cur[i]
        if isinstance(c, int) and not isinstance(one, int):
            c = one * 0 + c
        comps.append(c if i % 2 == 1 else -c)
        if c != 0:
            cur = cur * _inverse_binomial(c, i, N, one)
    return WittVector(comps, base)


def artin_hasse_inv(a, order=None):
    """prod_i (1 - (-1)^i b_i t^i) truncated at ``order`` (default: the length)."""
    order = a.length if order is None else order
    if order > a.length:
        raise TruncationError(f"vector has length {a.length}, asked for order {order}", witness=(a.length, order))
    like = a.components[0] if a.length else 0
    one = _one_like(like)
    zero = _zero_like(like)
    result = TruncSeries([one] + [zero] * order, order, a.base)
    for i in range(1, order + 1):
        b = a.components[i - 1]
        if b == 0:
            continue
        coeffs = [one] + [zero] * order
        coeffs[i] = b if i % 2 == 1 else -b
        result = result * TruncSeries(coeffs, order, a.base)
    coeffs = [zero + c if isinstance(c, int) else c for c in result.coeffs]
    return BigWittSeries(coeffs, order, a.base)


def lambda_R_map(R, r, N):
    """lambda_R(r) = E(lambda_t(r)) in W(R) at length N."""
    return artin_hasse(R.lambda_t(r, N), N, base=R.name)


def witt_sym_polys(n):
    """Integer polynomials for the first n components of a+b and a*b.

    Variables 0..n-1 are a_1..a_n and n..2n-1 are b_1..b_n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > SYMBOLIC_MAX:
        raise FeasibilityError(f"symbolic Witt polynomials are capped at n={SYMBOLIC_MAX}", witness=n)
    a = WittVector([MPoly.var(i) for i in range(n)], "sym")
    b = WittVector([MPoly.var(n + i) for i in range(n)], "sym")
    return {"add": list(witt_add(a, b).components), "mul": list(witt_mul(a, b).components)}


def witt_sym_names(n):
    return [f"a{i}" for i in range(1, n + 1)] + [f"b{i}" for i in range(1, n + 1)]


class TrivialRingWitt:
    """W of a finite abelian group M = prod Z/orders with zero multiplication.

    Every Witt polynomial term other than the linear a_n + b_n involves a
    product of components, so addition is componentwise and multiplication
    is identically zero: W(M) is additively M^N. ``verify`` checks this
    against ghost-solved Witt addition inside the square-zero extension Z |> M.
    """

    def __init__(self, orders, N):
        self.orders = tuple(orders)
        self.N = N
        if any(o < 1 for o in self.orders):
            raise ValueError("carrier orders must be positive")

    def _reduce(self, m):
        return tuple(x % o for x, o in zip(m, self.orders))

    def zero(self):
        return tuple((0,) * len(self.orders) for _ in range(self.N))

    def add(self, x, y):
        return tuple(self._reduce(tuple(p + q for p, q in zip(u, v))) for u, v in zip(x, y))

    def mul(self, x, y):
        return self.zero()

    def group_order(self):
        size = 1
        for o in self.orders:
            size *= o
        return size**self.N

    def random_element(self, rng):
        return tuple(tuple(rng.randrange(o) for o in self.orders) for _ in range(self.N))

    def embed(self, x):
        from .f1_modules import SquareZeroElem

        return WittVector([SquareZeroElem(0, m, self.orders) for m in x], f"Z|>M{self.orders}")

    def verify(self, rng, trials=50):
        """Compare componentwise add / zero mul with Witt arithmetic in Z |> M."""
        for _ in range(trials):
            x, y = self.random_element(rng), self.random_element(rng)
            s = sq_witt_op(witt_add, self.embed(x), self.embed(y))
            p = sq_witt_op(witt_mul, self.embed(x), self.embed(y))
            if [c.m for c in s.components] != list(self.add(x, y)):
                return False, (x, y, "add")
            if any(c.z or any(c.m) for c in p.components):
                return False, (x, y, "mul")
        return True, None

    def to_dict(self):
        return {
            "carrier": [f"Z/{o}" for o in self.orders],
            "length": self.N,
            "addition": "componentwise",
            "multiplication": "zero",
            "group_order": self.group_order(),
        }


def witt_nonunital(orders, N):
    return TrivialRingWitt(orders, N)


def sq_witt_op(op, *vectors):
    """Apply a Witt operation to vectors over Z |> M with torsion in M.

    Division by n is not defined in a torsion group, so the components are
    lifted to Z |> Z^k, the operation runs there with exact division, and the
    result is reduced back. Witt polynomials have integer coefficients, so
    reduction commutes with the operation.
    """
    orders = vectors[0].components[0].orders
    lifted = [WittVector([c.lift() for c in v.components], v.base) for v in vectors]
    out = op(*lifted)
    return WittVector([c.reduce(orders) for c in out.components], vectors[0].base)
