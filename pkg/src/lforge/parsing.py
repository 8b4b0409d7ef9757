"""Parsers for the CLI's textual inputs: ring specifications, ring elements,
univariate polynomials and truncated series.

Grammar for elements (whitespace ignored, `·` and `−` accepted as `*` and `-`):

    expr   := term (("+" | "-") term)*
    term   := unary ("*"? unary)*          juxtaposition multiplies: 3g, 2(g+h)
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | NAME | "(" expr ")"
    NAME   := g | h | x | t | u<n>

Which names are bound depends on the ring; see ``ring_names``.
"""

import re

from .errors import ParseError
from .exact_algebra import TruncSeries, UPoly
from .lambda_rings import BinomialZ, MonoidRing, polynomial_ring
from .monoid import Cyclic, MonoidRingElem, Product

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(.))")


def tokenize(text):
    text = text.replace("·", "*").replace("−", "-").replace("**", "^")
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        pos = m.end()
        num, name, sym = m.groups()
        if num is not None:
            out.append(("int", int(num)))
        elif name is not None:
            out.append(("name", name))
        elif sym is not None and not sym.isspace():
            if sym not in "+-*^()":
                raise ParseError(f"unexpected character {sym!r}", witness=sym)
            out.append(("sym", sym))
    return out


class _Parser:
    def __init__(self, text, names, one):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.names = names
        self.one = one

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, sym):
        kind, val = self.take()
        if kind != "sym" or val != sym:
            raise ParseError(f"expected {sym!r} in {self.text!r}", witness=val)

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression", witness=self.text)
        value = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input in {self.text!r}", witness=self.peek()[1])
        return value

    def expr(self):
        value = self.term()
        while self.peek() in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("sym", "*"):
                self.take()
            elif not (kind in ("int", "name") or (kind, val) == ("sym", "(")):
                return value
            value = value * self.unary()

    def unary(self):
        kind, val = self.peek()
        if kind == "sym" and val in "+-":
            self.take()
            inner = self.unary()
            return -inner if val == "-" else inner
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("sym", "^"):
            self.take()
            kind, val = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a non-negative integer in {self.text!r}", witness=val)
            return base**val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return self.one * val
        if kind == "name":
            if val not in self.names:
                raise ParseError(f"unknown name {val!r}; known: {', '.join(sorted(self.names)) or 'none'}", witness=val)
            return self.names[val]
        if (kind, val) == ("sym", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {val!r} in {self.text!r}", witness=val)


def parse_expression(text, names, one=1):
    return _Parser(text, names, one).parse()


_CYCLIC = re.compile(r"^C(\d+)$")


def parse_monoid(text):
    """'C5', 'C2xC3' (also '×'), 'trivial' or '1' for the trivial group."""
    text = text.strip().replace("×", "x")
    if text in ("trivial", "1", "C1"):
        return Cyclic(1)
    parts = text.split("x")
    factors = []
    for part in parts:
        m = _CYCLIC.match(part.strip())
        if not m or int(m.group(1)) < 1:
            raise ParseError(f"cannot read monoid {text!r}; use forms like C5 or C2xC3", witness=text)
        factors.append(Cyclic(int(m.group(1))))
    return factors[0] if len(factors) == 1 else Product(factors)


def parse_ring(text):
    """'Z' (binomial), 'Z[x]' or 'Zx' (affine line), or a monoid spec for Z[M]."""
    t = text.strip()
    if t == "Z":
        return BinomialZ()
    if t in ("Zx", "Z[x]", "N+", "Z[N+]"):
        return polynomial_ring()
    if t.startswith("Z[") and t.endswith("]"):
        t = t[2:-1]
    return MonoidRing(parse_monoid(t))


def ring_names(R):
    """Name bindings for elements of R.

    Z[C_n]: g is the generator u, h = u^2, and u<n> is the generator too.
    Z[C_a x C_b x ...]: g, h are the generators of the first two factors and
    u<k> is the generator of the first factor of order k.
    Z[x]: x.  Z: no names.
    """
    if isinstance(R, BinomialZ):
        return {}
    M = R.monoid
    if isinstance(M, Cyclic):
        u = MonoidRingElem.gen(M, 1 % M.n)
        return {"g": u, "h": u * u, f"u{M.n}": u}
    if isinstance(M, Product):
        names = {}
        gens = [MonoidRingElem.gen(M, g) for g, _ in M.generators()]
        for label, gen in zip("gh", gens):
            names[label] = gen
        for f, gen in zip(M.factors, gens):
            names.setdefault(f"u{f.n}", gen)
        return names
    return {"x": MonoidRingElem.gen(M, 1)}


def parse_element(R, text):
    return parse_expression(text, ring_names(R), R.one())


def parse_poly(text, var="x"):
    """A univariate integer polynomial such as 'x^5-1'."""
    p = parse_expression(text, {var: UPoly.x()}, UPoly((1,)))
    return p if isinstance(p, UPoly) else UPoly((p,))


def parse_series(text, order=None, var="t"):
    """A truncated series such as '1+2t+3t^2'; order defaults to the degree."""
    p = parse_poly(text, var)
    order = max(p.degree, 0) if order is None else order
    return TruncSeries(list(p.coeffs), order)


def parse_int_list(text):
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}", witness=text) from None
