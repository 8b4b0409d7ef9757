"""Finitely generated commutative monoids, monoid rings and B-points.

Monoid elements are plain hashable values whose meaning is fixed by the
ambient monoid: an exponent for the free monoid N+ and for cyclic groups, a
tuple for products, a reduced ``Fraction`` in [0, 1) for Q/Z. Arithmetic goes
through the monoid object; everything is written multiplicatively even where
the coordinates are additive.

Q/Z is never materialised. ``RootsOfUnity(bound)`` is its ``bound``-torsion
level (1/bound)Z/Z; ``RootsOfUnity()`` with no bound supports arithmetic but
refuses enumeration.

A note on the affine line over the empty-ideal convention: Spec F1 is a
single point, which is why points are maps of pointed monoids M+ -> B+. No
spectrum machinery is implemented.
"""

from fractions import Fraction
from itertools import product as cartesian

from .errors import NonEnumerableError
from .exact_algebra import UPoly


class Monoid:
    finite = False

    @property
    def one(self):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def power(self, a, k):
        result = self.one
        for _ in range(k):
            result = self.mul(result, a)
        return result

    def inverse(self, a):
        if a == self.one:
            return a
        raise TypeError(f"{self} is not a group")

    def elements(self):
        raise NonEnumerableError(f"{self} is infinite")

    def order(self):
        return len(self.elements())

    def generators(self):
        """List of ``(generator, relation_order)``; relation_order None means free."""
        raise NotImplementedError

    def key(self, a):
        return a

    def format(self, a):
        return str(a)

    def __eq__(self, other):
        return type(self) is type(other) and self._ident() == other._ident()

    def __hash__(self):
        return hash((type(self).__name__, self._ident()))

    def _ident(self):
        return ()

    def __repr__(self):
        return self.name


class FreeAdd(Monoid):
    """The additive naturals N+, written multiplicatively as powers of ``x``."""

    def __init__(self, var="x"):
        self.var = var

    name = property(lambda self: "N+")

    def _ident(self):
        return (self.var,)

    one = property(lambda self: 0)

    def mul(self, a, b):
        return a + b

    def power(self, a, k):
        return a * k

    def generators(self):
        return [(1, None)]

    def format(self, a):
        return "1" if a == 0 else (self.var if a == 1 else f"{self.var}^{a}")


class Cyclic(Monoid):
    """mu_n, the cyclic group of order n; the element k stands for g^k."""

    finite = True

    def __init__(self, n, var="g"):
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        self.n = n
        self.var = var

    name = property(lambda self: f"C{self.n}")

    def _ident(self):
        return (self.n, self.var)

    one = property(lambda self: 0)

    def mul(self, a, b):
        return (a + b) % self.n

    def power(self, a, k):
        return (a * k) % self.n

    def inverse(self, a):
        return (-a) % self.n

    def elements(self):
        return list(range(self.n))

    def order(self):
        return self.n

    def generators(self):
        return [(1 % self.n, self.n)]

    def format(self, a):
        return "1" if a == 0 else (self.var if a == 1 else f"{self.var}^{a}")


class RootsOfUnity(Monoid):
    """Q/Z, roots of unity written as exact fractions a/b in [0, 1)."""

    def __init__(self, bound=None):
        self.bound = bound
        self.finite = bound is not None

    name = property(lambda self: "Q/Z" if self.bound is None else f"Q/Z[{self.bound}]")

    def _ident(self):
        return (self.bound,)

    one = property(lambda self: Fraction(0))

    def mul(self, a, b):
        return (a + b) % 1

    def power(self, a, k):
        return (a * k) % 1

    def inverse(self, a):
        return (-a) % 1

    def elements(self):
        if self.bound is None:
            raise NonEnumerableError("Q/Z is infinite; give a torsion bound")
        return sorted({Fraction(a, self.bound) for a in range(self.bound)})

    def order(self):
        if self.bound is None:
            raise NonEnumerableError("Q/Z is infinite; give a torsion bound")
        return self.bound

    def generators(self):
        if self.bound is None:
            raise NonEnumerableError("Q/Z is not finitely generated")
        return [(Fraction(1, self.bound) % 1, self.bound)]

    def format(self, a):
        return f"[{a}]"


class Product(Monoid):
    def __init__(self, factors):
        self.factors = tuple(factors)
        self.finite = all(f.finite for f in self.factors)

    name = property(lambda self: "x".join(f.name for f in self.factors))

    def _ident(self):
        return self.factors

    @property
    def one(self):
        return tuple(f.one for f in self.factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def power(self, a, k):
        return tuple(f.power(x, k) for f, x in zip(self.factors, a))

    def inverse(self, a):
        return tuple(f.inverse(x) for f, x in zip(self.factors, a))

    def elements(self):
        return [tuple(t) for t in cartesian(*(f.elements() for f in self.factors))]

    def order(self):
        out = 1
        for f in self.factors:
            out *= f.order()
        return out

    def generators(self):
        gens = []
        for i, f in enumerate(self.factors):
            for g, rel in f.generators():
                e = list(self.one)
                e[i] = g
                gens.append((tuple(e), rel))
        return gens

    def key(self, a):
        return tuple(f.key(x) for f, x in zip(self.factors, a))

    def _labels(self):
        # cyclic factors print as g, h, then u<order>, matching the element parser
        out = []
        for i, f in enumerate(self.factors):
            out.append(("g", "h")[i] if i < 2 else f"u{f.n}" if isinstance(f, Cyclic) else None)
        return out

    def format(self, a):
        parts = []
        for f, x, label in zip(self.factors, a, self._labels()):
            if x == f.one:
                continue
            if isinstance(f, Cyclic) and label is not None:
                parts.append(label if x == 1 else f"{label}^{x}")
            else:
                parts.append(f.format(x))
        return "*".join(parts) if parts else "1"


class PolyMonoid(Product):
    """M[X] = M x N+; the pair (a, n) is written a*x^n, with (a, 0) = a."""

    def __init__(self, base, var="x"):
        super().__init__((base, FreeAdd(var)))
        self.base = base

    name = property(lambda self: f"{self.base.name}[x]")

    def format(self, a):
        coeff, n = a
        head = self.base.format(coeff)
        if n == 0:
            return head
        tail = self.factors[1].format(n)
        return tail if head == "1" else f"{head}*{tail}"

    def evaluate(self, a, b):
        """Evaluate a*x^n at b in the base monoid: a*b^n."""
        coeff, n = a
        return self.base.mul(coeff, self.base.power(b, n))


class FiniteMonoid(Monoid):
    """An explicitly listed finite monoid (e.g. a multiplicative submonoid of a ring)."""

    finite = True

    def __init__(self, elements, mul, one, name="M"):
        self._elements = list(elements)
        self._mul = mul
        self._one = one
        self._name = name

    name = property(lambda self: self._name)
    one = property(lambda self: self._one)

    def _ident(self):
        return (self._name, frozenset(self._elements))

    def mul(self, a, b):
        return self._mul(a, b)

    def elements(self):
        return list(self._elements)

    def generators(self):
        return [(e, None) for e in self._elements]


def poly_monoid(M, var="x"):
    return PolyMonoid(M, var)


class _Zero:
    """The absorbing element adjoined by M -> M+."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()


class PointedMonoid:
    """M+ : the monoid M with an absorbing zero adjoined."""

    def __init__(self, monoid):
        self.monoid = monoid

    @property
    def one(self):
        return self.monoid.one

    zero = ZERO

    def mul(self, a, b):
        if a is ZERO or b is ZERO:
            return ZERO
        return self.monoid.mul(a, b)

    def power(self, a, k):
        if a is ZERO:
            return self.monoid.one if k == 0 else ZERO
        return self.monoid.power(a, k)

    def elements(self):
        return [ZERO] + self.monoid.elements()

    def order(self):
        return self.monoid.order() + 1

    def format(self, a):
        return "0" if a is ZERO else self.monoid.format(a)

    def __repr__(self):
        return f"{self.monoid.name}+"


def frobenius(monoid, k, m):
    """psi^k(m) = m^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if m is ZERO:
        return ZERO
    return monoid.power(m, k)


def points(M, B):
    """All maps of pointed monoids M+ -> B+, as tuples of generator images.

    A map sends 0 to 0 and 1 to 1 and is fixed by where the generators of M
    go; an image is admissible when it satisfies the generator's relation
    (g^r = 1) inside B+. ``B`` must be finite.
    """
    if not getattr(B, "finite", False):
        raise NonEnumerableError(f"cannot enumerate points with values in infinite {B}")
    target = PointedMonoid(B)
    candidates = []
    for _, rel in M.generators():
        ok = []
        for b in target.elements():
            if rel is None or target.power(b, rel) == B.one:
                ok.append(b)
        candidates.append(ok)
    return [tuple(c) for c in cartesian(*candidates)]


def fixed_point_count(k):
    """|(N+(Q/Z))^k|: points of the affine line over Q/Z fixed by psi^k.

    A point is the image q in (Q/Z)+ of the generator; it is fixed when
    k*q = q, i.e. (k-1)*q = 0, so every fixed point lies in the (k-1)-torsion
    level, which is enumerated and tested. At k = 1 every point is fixed; by
    convention the count is 1 there, so the result is k for every k >= 1.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return 1
    level = RootsOfUnity(k - 1)
    count = 0
    for (q,) in points(FreeAdd(), level):
        if frobenius(level, k, q) == q:
            count += 1
    return count


class MonoidRingElem:
    """A finite Z-linear combination of monoid elements."""

    __slots__ = ("monoid", "terms")

    def __init__(self, monoid, terms=None):
        self.monoid = monoid
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = clean.get(m, 0) + c
                    if not clean[m]:
                        del clean[m]
        self.terms = clean

    @classmethod
    def gen(cls, monoid, m, coeff=1):
        return cls(monoid, {m: coeff})

    @classmethod
    def scalar(cls, monoid, c):
        return cls(monoid, {monoid.one: c})

    def _coerce(self, other):
        if isinstance(other, MonoidRingElem):
            return other
        if isinstance(other, int):
            return MonoidRingElem.scalar(self.monoid, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MonoidRingElem(self.monoid, out)

    __radd__ = __add__

    def __neg__(self):
        return MonoidRingElem(self.monoid, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MonoidRingElem(self.monoid, {m: c * other for m, c in self.terms.items()})
        if not isinstance(other, MonoidRingElem):
            return NotImplemented
        mul = self.monoid.mul
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                m = mul(a, b)
                out[m] = out.get(m, 0) + x * y
        return MonoidRingElem(self.monoid, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k):
        result, base = MonoidRingElem.scalar(self.monoid, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MonoidRingElem):
            return self.terms == other.terms
        if isinstance(other, int):
            return self.terms == MonoidRingElem.scalar(self.monoid, other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms, key=self.monoid.key)

    def augmentation(self):
        return sum(self.terms.values())

    def adams(self, k):
        """The ring endomorphism m -> m^k."""
        out = {}
        for m, c in self.terms.items():
            mk = self.monoid.power(m, k)
            out[mk] = out.get(mk, 0) + c
        return MonoidRingElem(self.monoid, out)

    def unit_inverse(self):
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if c in (1, -1):
                return MonoidRingElem(self.monoid, {self.monoid.inverse(m): c})
        from .errors import NonUnitError

        raise NonUnitError(f"{self} is not a unit of Z[{self.monoid.name}]", witness=self)

    def exact_div(self, n):
        out = {}
        for m, c in self.terms.items():
            q, r = divmod(c, n)
            if r:
                from .errors import IntegralityError

                raise IntegralityError(f"{self} is not divisible by {n}", witness=(m, c))
            out[m] = q
        return MonoidRingElem(self.monoid, out)

    def format(self):
        if not self.terms:
            return "0"
        pieces = []
        for m in self.support():
            c = self.terms[m]
            name = self.monoid.format(m)
            mag = abs(c)
            if name == "1":
                body = str(mag)
            else:
                body = name if mag == 1 else f"{mag}*{name}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"MonoidRingElem({self.format()})"


def monoid_ring_iso(e):
    """Z[M x N+] -> Z[M][X]: sum z_i (a_i, n_i) maps to sum z_i a_i X^{n_i}."""
    pm = e.monoid
    if not isinstance(pm, Product) or len(pm.factors) != 2 or not isinstance(pm.factors[1], FreeAdd):
        raise TypeError(f"ambient monoid {pm} is not of the form M x N+")
    base = pm.factors[0]
    by_degree = {}
    for (a, n), z in e.terms.items():
        by_degree.setdefault(n, {})[a] = by_degree.setdefault(n, {}).get(a, 0) + z
    deg = max(by_degree, default=-1)
    coeffs = [MonoidRingElem(base, by_degree.get(i, {})) for i in range(deg + 1)]
    return UPoly(coeffs)


def monoid_ring_iso_inv(p, pm):
    """Inverse of ``monoid_ring_iso`` into Z[pm] with pm = M x N+."""
    out = {}
    for n, c in enumerate(p.coeffs):
        if isinstance(c, int):
            c = MonoidRingElem.scalar(pm.factors[0], c)
        for a, z in c.terms.items():
            out[(a, n)] = z
    return MonoidRingElem(pm, out)
