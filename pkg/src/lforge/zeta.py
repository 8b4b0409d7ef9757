"""Zeta functions: categorical Euler products over norm lists, Dirichlet
partial sums, the fixed-point zeta of the affine line over F1, and the
geometric zeta of F1-modules built from the enumeration of simple objects.

At integer s the Euler product is exact (a Fraction built by a product
tree) and the partial sums are computed in binary fixed point with enough
guard bits that the rounding error stays far below the requested precision;
both are rendered with mpmath at the end. Non-integer s goes through mpmath
directly. Every truncated value carries a rigorous bound on the neglected
tail for real s > 1.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
import numpy as np

from .config import get_config
from .errors import EnumerationError, ZetaDomainError
from .f1_closure import closure_fixed_count

GUARD_BITS = 32


def sieve(n):
    """Primes <= n (Eratosthenes on a numpy boolean array)."""
    if n < 2:
        return []
    is_p = np.ones(n + 1, dtype=bool)
    is_p[:2] = False
    for q in range(2, int(n**0.5) + 1):
        if is_p[q]:
            is_p[q * q :: q] = False
    return np.flatnonzero(is_p).tolist()


@dataclass(frozen=True)
class ZetaSpec:
    """A named source of norms: primes, monoidcat, f1modules or custom."""

    kind: str
    custom: tuple = ()
    module_bound: int = None

    KINDS = ("primes", "monoidcat", "f1modules", "custom")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown zeta spec {self.kind!r}; expected one of {self.KINDS}")
        if any(n < 2 for n in self.custom):
            raise ValueError("norms must be integers >= 2")

    @classmethod
    def primes(cls):
        return cls("primes")

    @classmethod
    def monoidcat(cls):
        return cls("monoidcat")

    @classmethod
    def f1modules(cls, module_bound=None):
        return cls("f1modules", module_bound=module_bound)

    @classmethod
    def of(cls, norms):
        return cls("custom", tuple(sorted(norms)))

    def norms(self, bound):
        """Sorted multiset of norms <= bound."""
        if self.kind == "primes":
            return sieve(bound)
        if self.kind == "monoidcat":
            # finite simple abelian groups plus one further norm-2 object
            return sorted(sieve(bound) + ([2] if bound >= 2 else []))
        if self.kind == "f1modules":
            return geometric_norms(bound, self.module_bound)
        return [n for n in self.custom if n <= bound]

    def excluded(self, bound):
        """Norms beyond the bound, when the list is finite (custom only)."""
        if self.kind == "custom":
            return [n for n in self.custom if n > bound]
        return None


@dataclass
class EvalResult:
    value: mpmath.mpf
    bound_used: int
    tail_bound: mpmath.mpf
    s: object
    factors: tuple = field(default=(), repr=False)
    exact: Fraction = field(default=None, repr=False)
    precision_bits: int = 80

    def digits(self):
        return max(int(self.precision_bits * 0.30103) - 1, 6)

    def to_dict(self):
        out = {
            "s": self.s if isinstance(self.s, int) else str(self.s),
            "value": mpmath.nstr(self.value, self.digits()),
            "bound_used": self.bound_used,
            "tail_bound": mpmath.nstr(self.tail_bound, 6),
            "precision_bits": self.precision_bits,
        }
        if self.factors:
            out["factor_count"] = len(self.factors)
        return out


def _check_s(s):
    if s <= 1:
        raise ZetaDomainError(f"s must be > 1, got {s}", witness=s)
    if isinstance(s, float) and s.is_integer():
        return int(s)
    return s


def _prec(prec):
    return get_config().zeta_precision_bits if prec is None else prec


def _product_tree(values):
    """Product of a list of Fractions, pairing neighbours for balanced sizes."""
    if not values:
        return Fraction(1)
    nums = [v.numerator for v in values]
    dens = [v.denominator for v in values]
    while len(nums) > 1:
        nums = [nums[i] * nums[i + 1] if i + 1 < len(nums) else nums[i] for i in range(0, len(nums), 2)]
        dens = [dens[i] * dens[i + 1] if i + 1 < len(dens) else dens[i] for i in range(0, len(dens), 2)]
    return Fraction(nums[0], dens[0])


def _euler_tail(value, s, bound, prec):
    """Bound on |full product - truncated product| when every norm > bound is at least bound+1.

    log of the missing factors is at most sum_{n>B} n^-s / (1 - B^-s)
    <= B^(1-s) / ((s-1)(1 - B^-s)) =: L, and the error is at most value*(e^L - 1).
    """
    with mpmath.workprec(prec + GUARD_BITS):
        B = mpmath.mpf(bound)
        L = B ** (1 - s) / ((s - 1) * (1 - B ** (-s)))
        return value * mpmath.expm1(L)


def euler_product(spec, s, bound, prec=None):
    """prod over norms N <= bound of (1 - N^-s)^-1, with a tail bound."""
    s = _check_s(s)
    if bound < 2 and spec.kind != "custom":
        raise ZetaDomainError("bound must be >= 2", witness=bound)
    prec = _prec(prec)
    norms = spec.norms(bound)
    exact = None
    with mpmath.workprec(prec + GUARD_BITS):
        if isinstance(s, int):
            exact = _product_tree([Fraction(n**s, n**s - 1) for n in norms])
            value = mpmath.mpf(exact.numerator) / exact.denominator
        else:
            value = mpmath.mpf(1)
            for n in norms:
                value /= 1 - mpmath.mpf(n) ** (-s)
    excluded = spec.excluded(bound)
    if excluded is None:
        tail = _euler_tail(value, s, bound, prec)
    elif excluded:
        with mpmath.workprec(prec + GUARD_BITS):
            missing = mpmath.mpf(1)
            for n in excluded:
                missing /= 1 - mpmath.mpf(n) ** (-s)
            tail = value * (missing - 1)
    else:
        tail = mpmath.mpf(0)
    return EvalResult(value, bound, tail, s, tuple(norms), exact, prec)


def _fixed_point_sum(bases, s, prec):
    """sum of b^-s over ``bases`` for integer s, in binary fixed point.

    Each term is floor(2^K / b^s); the truncation error is below one unit per
    term, so with K = prec + GUARD_BITS + bitlength(len) the sum is exact to
    well beyond ``prec`` bits. Integer arithmetic keeps it deterministic.
    """
    K = prec + GUARD_BITS + max(len(bases), 1).bit_length()
    one = 1 << K
    total = 0
    for b in bases:
        total += one // b**s
    with mpmath.workprec(K + 8):
        return mpmath.mpf(total) / one


def _float_sum(bases, s, prec):
    with mpmath.workprec(prec + GUARD_BITS):
        ms = mpmath.mpf(s)
        return mpmath.fsum(mpmath.mpf(b) ** (-ms) for b in bases)


def _power_sum(bases, s, prec):
    if isinstance(s, int):
        return _fixed_point_sum(bases, s, prec)
    return _float_sum(bases, s, prec)


def dirichlet_tail(s, X):
    """sum_{n > X} n^-s <= X^(1-s) / (s-1)."""
    with mpmath.workprec(80):
        return mpmath.mpf(X) ** (1 - s) / (s - 1)


def dirichlet_partial(s, X, prec=None):
    """sum_{n <= X} n^-s; the tail bound X^(1-s)/(s-1) is reported separately."""
    s = _check_s(s)
    if X < 1:
        raise ZetaDomainError("X must be >= 1", witness=X)
    prec = _prec(prec)
    value = _power_sum(range(1, X + 1), s, prec)
    return EvalResult(value, X, dirichlet_tail(s, X), s, (), None, prec)


def fixed_point_terms(X):
    """|X(closure of F1)^n| for n = 1..X, from the fixed-point counts."""
    return [closure_fixed_count(n) for n in range(1, X + 1)]


def fixed_point_zeta(s, X, prec=None):
    """sum_{n <= X} |fixed points of psi^n on the affine line|^-s."""
    s = _check_s(s)
    if X < 1:
        raise ZetaDomainError("X must be >= 1", witness=X)
    prec = _prec(prec)
    counts = fixed_point_terms(X)
    value = _power_sum(counts, s, prec)
    return EvalResult(value, X, dirichlet_tail(s, X), s, tuple(counts), None, prec)


def geometric_norms(prime_bound, module_bound=None):
    """n(P) over the non-degenerate simple F1-modules on C_p, p <= prime_bound.

    Small primes are enumerated family by family. For larger p the p^pi(N)
    families are grouped by which prime values vanish (n(P) only sees that
    pattern), which keeps the count exact while avoiding the literal listing.
    """
    from .f1_modules import enumerate_simple, simple_classes

    module_bound = get_config().module_bound if module_bound is None else module_bound
    norms = []
    for p in sieve(prime_bound):
        if p ** len(sieve(module_bound)) <= LITERAL_ENUMERATION_LIMIT:
            found = [v.n_count for _, v in enumerate_simple(p, module_bound) if v.non_degenerate]
        else:
            found = []
            for c in simple_classes(p, module_bound):
                if c.n_count > 1:
                    found.extend([c.n_count] * c.size)
        if found != [p]:
            raise EnumerationError(f"expected one non-degenerate object on C_{p} with n = {p}", witness=found)
        norms.extend(found)
    return norms


LITERAL_ENUMERATION_LIMIT = 20000


def geometric_zeta_f1mod(s, prime_bound, module_bound=None, prec=None):
    """prod over non-degenerate simple F1-modules of (1 - n(P)^-s)^-1."""
    s = _check_s(s)
    spec = ZetaSpec.of(geometric_norms(prime_bound, module_bound)) if prime_bound >= 2 else ZetaSpec.of(())
    result = euler_product(spec, s, max(prime_bound, 1), prec)
    if prime_bound >= 2:
        result.tail_bound = _euler_tail(result.value, s, prime_bound, result.precision_bits)
    return result


def verify_identities(prec=None, euler_bound=10**5, dirichlet_X=10**6, theorem_bound=10**4, f1_primes=100):
    """Numerical agreement checks between the zeta constructions.

    Returns a list of (name, passed, detail) triples.
    """
    prec = _prec(prec)
    out = []
    for s in (2, 3, 4):
        e = euler_product(ZetaSpec.primes(), s, euler_bound, prec)
        d = dirichlet_partial(s, dirichlet_X, prec)
        diff = abs(e.value - (d.value + d.tail_bound))
        out.append((f"euler_vs_dirichlet_s{s}", bool(diff < mpmath.mpf("1e-5")), mpmath.nstr(diff, 6)))
    for s in (2, 3):
        m = euler_product(ZetaSpec.monoidcat(), s, theorem_bound, prec)
        p = euler_product(ZetaSpec.primes(), s, theorem_bound, prec)
        ok = m.exact == p.exact * Fraction(2**s, 2**s - 1)
        out.append((f"monoidcat_extra_factor_s{s}", ok, "exact rational identity"))
    g = geometric_zeta_f1mod(2, f1_primes, prec=prec)
    p = euler_product(ZetaSpec.primes(), 2, f1_primes, prec)
    out.append(("geometric_f1mod_factor_list", g.factors == p.factors and g.exact == p.exact, f"{len(g.factors)} factors"))
    return out
