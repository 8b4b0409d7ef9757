"""Exact integer polynomials, multivariate polynomials and truncated power series.

Coefficients are Python integers (or any object supporting ring arithmetic
with integers: monoid ring elements, square-zero pairs, ``Fraction``), so
nothing here ever overflows or rounds.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import zip_longest

from .errors import InexactDivisionError, NonUnitError


def _is_zero(c):
    return c == 0


def _needs_parens(s):
    return any(ch in s[1:] for ch in "+- ")


class UPoly:
    """Univariate polynomial; ``coeffs[i]`` is the coefficient of x^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, k):
        return cls([0] * k + [c])

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, UPoly):
            return other
        return UPoly((other,))

    def __add__(self, other):
        other = self._coerce(other)
        return UPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return UPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative exponent")
        result, base = UPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        return upoly_divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UPoly", self.coeffs))

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def derivative(self):
        return UPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def format(self, var="x"):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if _is_zero(c):
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if isinstance(c, (int, Fraction)):
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = str(mag) if (mag != 1 or not mono) else ""
                if body and mono:
                    body += "*"
            else:
                sign = "+"
                s = str(c)
                body = f"({s})" if (mono and _needs_parens(s)) else s
                if mono:
                    body += "*"
            parts.append((sign, body + mono))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"UPoly({self.format()})"


def upoly_divrem(f, g):
    """Return ``(q, r)`` with ``f = q*g + r`` and ``deg r < deg g``.

    Division by a monic (or -1 leading) divisor is always exact over the
    integers. Any other divisor is accepted only if the division happens to
    be exact with integer quotient; otherwise ``InexactDivisionError``.
    """
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    lc = g.lc
    unit_lc = lc == 1 or lc == -1
    rem = list(f.coeffs)
    dg = g.degree
    if len(rem) - 1 < dg:
        return UPoly(), UPoly(rem)
    quot = [0] * (len(rem) - dg)
    gcoeffs = [(i, c) for i, c in enumerate(g.coeffs[:-1]) if not _is_zero(c)]
    for k in range(len(rem) - 1, dg - 1, -1):
        c = rem[k]
        if _is_zero(c):
            continue
        if unit_lc:
            q = c if lc == 1 else -c
        else:
            if not isinstance(c, int) or not isinstance(lc, int) or c % lc:
                raise InexactDivisionError(
                    f"inexact division of {f} by non-monic {g}", witness=(k, c, lc)
                )
            q = c // lc
        quot[k - dg] = q
        rem[k] = 0
        for i, gc in gcoeffs:
            rem[k - dg + i] = rem[k - dg + i] - q * gc
    r = UPoly(rem)
    if not unit_lc and not r.is_zero():
        raise InexactDivisionError(f"inexact division of {f} by non-monic {g}", witness=r)
    return UPoly(quot), r


def upoly_gcd(f, g):
    """Monic gcd over the rationals (coefficients may come back as Fractions)."""
    a = UPoly(Fraction(c) for c in f.coeffs)
    b = UPoly(Fraction(c) for c in g.coeffs)
    while not b.is_zero():
        a, b = b, _rational_rem(a, b)
    if a.is_zero():
        return a
    lc = a.lc
    return UPoly(_demote(c / lc) for c in a.coeffs)


def _rational_rem(a, b):
    rem = list(a.coeffs)
    db, lb = b.degree, b.lc
    for k in range(len(rem) - 1, db - 1, -1):
        q = rem[k] / lb
        if q:
            for i, c in enumerate(b.coeffs):
                rem[k - db + i] -= q * c
    return UPoly(rem[:db] if db > 0 else [])


def _demote(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def is_squarefree(f):
    return upoly_gcd(f, f.derivative()).degree <= 0


def substitute_power(f, k):
    """Return f(x^k)."""
    if k < 1:
        raise ValueError("k must be positive")
    if k == 1:
        return f
    out = [0] * (k * f.degree + 1) if f.coeffs else []
    for i, c in enumerate(f.coeffs):
        out[k * i] = c
    return UPoly(out)


@lru_cache(maxsize=None)
def cyclotomic(d):
    """Phi_d, by exact division of x^d - 1 by the lower cyclotomics."""
    if d < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = UPoly.monomial(1, d) - 1
    for e in range(1, d):
        if d % e == 0:
            num, r = upoly_divrem(num, cyclotomic(e))
            if not r.is_zero():
                raise InexactDivisionError(f"Phi_{e} does not divide x^{d}-1")
    return num


class MPoly:
    """Sparse multivariate polynomial: exponent tuple -> coefficient.

    Exponent tuples carry no trailing zeros, so the constant monomial is ``()``.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exps, c in terms.items():
                if _is_zero(c):
                    continue
                exps = tuple(exps)
                while exps and exps[-1] == 0:
                    exps = exps[:-1]
                clean[exps] = clean.get(exps, 0) + c
                if _is_zero(clean[exps]):
                    del clean[exps]
        self.terms = clean

    @classmethod
    def var(cls, i, power=1):
        return cls({(0,) * i + (power,): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    def is_zero(self):
        return not self.terms

    @property
    def nvars(self):
        return max((len(e) for e in self.terms), default=0)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly({(): other})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip_longest(e1, e2, fillvalue=0))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        result, base = MPoly({(): 1}), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == MPoly({(): other}).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, exps):
        exps = tuple(exps)
        while exps and exps[-1] == 0:
            exps = exps[:-1]
        return self.terms.get(exps, 0)

    def exact_div(self, n):
        """Divide every coefficient by ``n`` over the rationals."""
        return MPoly({e: Fraction(c, 1) / n for e, c in self.terms.items()})

    def to_integer(self):
        """Return the same polynomial with int coefficients; raise if any is fractional."""
        out = {}
        for e, c in self.terms.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise InexactDivisionError(f"non-integral coefficient {c} at {e}", witness=e)
            out[e] = c.numerator
        return MPoly(out)

    def evaluate(self, values, one=1):
        """Substitute ``values[i]`` for variable i; values may be any ring elements."""
        cache = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                cache[key] = values[i] if k == 1 else power(i, k - 1) * values[i]
            return cache[key]

        acc = 0
        for exps, c in self.terms.items():
            term = None
            for i, k in enumerate(exps):
                if k:
                    term = power(i, k) if term is None else term * power(i, k)
            if term is None:
                acc = acc + c * one
            else:
                acc = acc + (term if c == 1 else c * term)
        return acc

    def substitute(self, mapping):
        """Replace variable i by the MPoly ``mapping[i]`` (identity when absent)."""
        out = MPoly()
        for exps, c in self.terms.items():
            term = MPoly({(): c})
            for i, k in enumerate(exps):
                if k:
                    term = term * (mapping[i] ** k if i in mapping else MPoly.var(i, k))
            out = out + term
        return out

    def weights(self, weight_of):
        """Set of weighted degrees sum_i weight_of(i)*e_i over all monomials."""
        return {sum(weight_of(i) * k for i, k in enumerate(e)) for e in self.terms}

    def sorted_terms(self):
        n = self.nvars
        return sorted(self.terms.items(), key=lambda t: t[0] + (0,) * (n - len(t[0])), reverse=True)

    def format(self, names=None):
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, k in enumerate(exps):
                if k == 1:
                    factors.append(names[i])
                elif k > 1:
                    factors.append(f"{names[i]}^{k}")
            mono = "*".join(factors)
            mag = abs(c) if isinstance(c, (int, Fraction)) else c
            neg = isinstance(c, (int, Fraction)) and c < 0
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if neg else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self, nvars=None):
        n = self.nvars if nvars is None else nvars
        return [
            {"exponents": list(e) + [0] * (n - len(e)), "coefficient": int(c) if isinstance(c, int) else str(c)}
            for e, c in self.sorted_terms()
        ]

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MPoly({self.format()})"


class TruncSeries:
    """Power series c_0 + c_1 t + ... + c_N t^N, arithmetic modulo t^(N+1).

    ``base`` is an optional tag naming the coefficient ring; series with
    different non-None tags refuse to combine. Mixed truncation orders
    combine at the smaller order.
    """

    __slots__ = ("coeffs", "order", "base")

    def __init__(self, coeffs, order, base=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        coeffs = list(coeffs)[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order
        self.base = base

    @classmethod
    def one(cls, order, base=None):
        return cls([1], order, base)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i <= self.order else 0

    def _check(self, other):
        if self.base is not None and other.base is not None and self.base != other.base:
            raise ValueError(f"base ring mismatch: {self.base} vs {other.base}")
        return min(self.order, other.order), self.base if self.base is not None else other.base

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order, self.base)
        return series_mul(self, other)

    def __rmul__(self, other):
        return TruncSeries([other * c for c in self.coeffs], self.order, self.base)

    def __add__(self, other):
        order, base = self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], order, base)

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order, self.base)

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, k):
        if k < 0:
            return series_inv(self) ** (-k)
        result, base = TruncSeries.one(self.order, self.base), self
        while k:
            if k & 1:
                result = series_mul(result, base)
            base = series_mul(base, base)
            k >>= 1
        return result

    def truncate(self, order):
        return TruncSeries(self.coeffs, min(order, self.order), self.base)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def format(self, var="t"):
        return UPoly(self.coeffs).format(var) + f" + O({var}^{self.order + 1})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"TruncSeries({self.format()})"


def series_mul(a, b):
    order, base = a._check(b)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (order + 1)
    nz_b = [(j, y) for j, y in enumerate(bc[: order + 1]) if not _is_zero(y)]
    for i in range(order + 1):
        x = ac[i]
        if _is_zero(x):
            continue
        for j, y in nz_b:
            if i + j > order:
                break
            out[i + j] = out[i + j] + x * y
    return TruncSeries(out, order, base)


def unit_inverse(c):
    """Multiplicative inverse of a unit of the coefficient ring."""
    if isinstance(c, int):
        if c in (1, -1):
            return c
        raise NonUnitError(f"{c} is not a unit of Z", witness=c)
    if isinstance(c, Fraction):
        if c == 0:
            raise NonUnitError("0 is not a unit", witness=c)
        return 1 / c
    inv = getattr(c, "unit_inverse", None)
    if inv is None:
        raise NonUnitError(f"cannot invert {c!r}", witness=c)
    return inv()


def series_inv(a):
    """Inverse of a series whose constant term is a unit."""
    u = unit_inverse(a.coeffs[0])
    n = a.order
    ac = a.coeffs
    nz = [(i, c) for i, c in enumerate(ac) if i and not _is_zero(c)]
    out = [u] + [0] * n
    for k in range(1, n + 1):
        s = 0
        for i, c in nz:
            if i > k:
                break
            s = s + c * out[k - i]
        out[k] = -(u * s) if not _is_zero(s) else 0
    return TruncSeries(out, n, a.base)
