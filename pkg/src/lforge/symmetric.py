"""Symmetric functions and the universal lambda-ring polynomials.

The multiplication polynomial P_n is the t^n coefficient of
prod_{i,j} (1 + xi_i eta_j t) rewritten in the elementary symmetric functions
of the xi and eta blocks; the composition polynomial P_{n,m} is the t^n
coefficient of prod_{|S|=m} (1 + xi_S t). Both rewrites use lexicographic
leading-term elimination.

The production path never materialises the full expansion: a polynomial that
is symmetric in each block is determined by its coefficients at exponent
vectors sorted in non-increasing order (partitions), and those coefficients,
for both the product and every product of elementary functions, are counts
of 0-1 matrices with prescribed margins.
"""

from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb

from .config import get_config
from .errors import FeasibilityError, NonSymmetricError
from .exact_algebra import MPoly


def elementary_symmetric(k, nvars):
    """e_k in ``nvars`` variables (zero when k > nvars)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > nvars:
        return MPoly()
    terms = {}
    for idx in combinations(range(nvars), k):
        e = [0] * nvars
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return MPoly(terms)


def _pad(e, n):
    return tuple(e) + (0,) * (n - len(e))


def _check_block_symmetry(p, blocks):
    total = sum(blocks)
    start = 0
    for size in blocks:
        for i in range(start, start + size - 1):
            for e, c in p.terms.items():
                e = list(_pad(e, total))
                e[i], e[i + 1] = e[i + 1], e[i]
                if p.coefficient(e) != c:
                    raise NonSymmetricError(
                        f"not symmetric under transposition of variables {i} and {i + 1}",
                        witness=(i, i + 1),
                    )
        start += size


def _e_product(block_exps, blocks):
    """prod_k e_k(block)^(a_k - a_{k+1}) over all blocks, as an MPoly in all variables."""
    total = sum(blocks)
    out = MPoly.constant(1)
    start = 0
    for size, exps in zip(blocks, block_exps):
        for k in range(1, size + 1):
            mult = exps[k - 1] - (exps[k] if k < size else 0)
            if mult:
                e = elementary_symmetric(k, size)
                shifted = MPoly({(0,) * start + ex: c for ex, c in e.terms.items()})
                out = out * shifted**mult
        start += size
    return out


def _e_monomial(block_exps, blocks):
    """Exponent vector, in the e-variables, of the e-product for these block exponents."""
    out = []
    for size, exps in zip(blocks, block_exps):
        for k in range(1, size + 1):
            out.append(exps[k - 1] - (exps[k] if k < size else 0))
    return tuple(out)


def _split(e, blocks):
    e = _pad(e, sum(blocks))
    out, start = [], 0
    for size in blocks:
        out.append(e[start : start + size])
        start += size
    return out


def reduce_to_elementary(p, blocks=None):
    """Rewrite a block-symmetric polynomial in elementary symmetric functions.

    ``blocks`` lists the sizes of consecutive variable blocks (default: one
    block holding every variable). The result is an MPoly whose variables are
    e_1..e_a of the first block, then e_1..e_b of the second, and so on.
    Raises ``NonSymmetricError`` naming a transposition that moves ``p``.
    """
    if blocks is None:
        blocks = [max(p.nvars, 1)]
    total = sum(blocks)
    if p.nvars > total:
        raise ValueError("polynomial has more variables than the blocks cover")
    _check_block_symmetry(p, blocks)
    rest = p
    result = {}
    while not rest.is_zero():
        lead = max(rest.terms, key=lambda e: _pad(e, total))
        c = rest.terms[lead]
        parts = _split(lead, blocks)
        for part in parts:
            if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
                raise NonSymmetricError("leading exponent is not a partition", witness=lead)
        mono = _e_monomial(parts, blocks)
        result[mono] = result.get(mono, 0) + c
        rest = rest - c * _e_product(parts, blocks)
    return MPoly(result)


@lru_cache(maxsize=None)
def count_01_matrices(rows, cols):
    """Number of 0-1 matrices with the given row sums and column sums."""
    cols = tuple(sorted((c for c in cols if c), reverse=True))
    rows = tuple(r for r in rows if r)
    if not rows:
        return 0 if cols else 1
    if sum(rows) != sum(cols):
        return 0
    r, rest = rows[0], rows[1:]
    groups = sorted(Counter(cols).items(), reverse=True)
    total = 0

    def choose(gi, remaining, weight, new_cols):
        nonlocal total
        if gi == len(groups):
            if remaining == 0:
                total += weight * count_01_matrices(rest, tuple(new_cols))
            return
        value, size = groups[gi]
        for j in range(min(size, remaining) + 1):
            choose(
                gi + 1,
                remaining - j,
                weight * comb(size, j),
                new_cols + [value] * (size - j) + [value - 1] * j,
            )

    choose(0, r, 1, [])
    return total


def partitions(n, max_parts, max_part=None):
    """Partitions of n (non-increasing tuples) with at most ``max_parts`` parts."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for tail in partitions(n - first, max_parts - 1, first):
            yield (first,) + tail


def _rows_of(exps):
    """Row sums (e-indices with multiplicity) of the e-product for a partition."""
    size = len(exps)
    rows = []
    for k in range(1, size + 1):
        rows += [k] * (exps[k - 1] - (exps[k] if k < size else 0))
    return tuple(rows)


def _orbit_reduce(coeffs, blocks):
    """Leading-term elimination on orbit representatives.

    ``coeffs`` maps a tuple of per-block partitions (each padded to its block
    size) to the coefficient of that monomial in a block-symmetric polynomial.
    """
    rest = {k: v for k, v in coeffs.items() if v}
    result = {}
    while rest:
        lead = max(rest, key=lambda key: tuple(x for part in key for x in part))
        c = rest[lead]
        result[_e_monomial(lead, blocks)] = c
        # subtract c * e-product, whose partition coefficients are 0-1 matrix counts
        per_block = []
        for size, part in zip(blocks, lead):
            rows = _rows_of(part)
            weight = sum(part)
            entries = {}
            for mu in partitions(weight, size, len(rows)):
                cnt = count_01_matrices(rows, mu)
                if cnt:
                    entries[_pad(mu, size)] = cnt
            per_block.append(entries)
        keys = [()]
        vals = [1]
        for entries in per_block:
            keys, vals = (
                [k + (mu,) for k in keys for mu in entries],
                [v * entries[mu] for v in vals for mu in entries],
            )
        for key, v in zip(keys, vals):
            new = rest.get(key, 0) - c * v
            if new:
                rest[key] = new
            else:
                rest.pop(key, None)
    return MPoly(result)


def _check_feasible_n(n):
    limit = get_config().universal_n_max
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > limit:
        raise FeasibilityError(f"P_{n} exceeds the configured limit universal_n_max={limit}", witness=n)


def _check_feasible_nm(n, m):
    limit = get_config().universal_nm_max
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if n * m > limit:
        raise FeasibilityError(
            f"P_{{{n},{m}}} exceeds the configured limit universal_nm_max={limit}", witness=(n, m)
        )


def universal_P(n):
    """P_n(x_1..x_n; y_1..y_n) with lambda^n(xy) = P_n(lambda^i x; lambda^j y).

    Variables 0..n-1 are x_1..x_n, variables n..2n-1 are y_1..y_n.
    """
    _check_feasible_n(n)
    return _universal_P(n)


@lru_cache(maxsize=None)
def _universal_P(n):
    # t^n coefficient of prod (1 + xi_i eta_j t): choose n of the n*n pairs; the
    # monomial xi^alpha eta^beta counts 0-1 matrices with row sums alpha, column sums beta.
    coeffs = {}
    for alpha in partitions(n, n):
        for beta in partitions(n, n):
            cnt = count_01_matrices(alpha, beta)
            if cnt:
                coeffs[(_pad(alpha, n), _pad(beta, n))] = cnt
    return _orbit_reduce(coeffs, [n, n])


def universal_P2(n, m):
    """P_{n,m}(x_1..x_nm) with lambda^n(lambda^m x) = P_{n,m}(lambda^1 x, ..., lambda^nm x)."""
    _check_feasible_nm(n, m)
    return _universal_P2(n, m)


@lru_cache(maxsize=None)
def _universal_P2(n, m):
    size = n * m
    factors = list(combinations(range(size), m))
    coeffs = {}
    for chosen in combinations(factors, n):
        mult = [0] * size
        for s in chosen:
            for i in s:
                mult[i] += 1
        if all(mult[i] >= mult[i + 1] for i in range(size - 1)):
            key = (tuple(mult),)
            coeffs[key] = coeffs.get(key, 0) + 1
    return _orbit_reduce(coeffs, [size])


def newton_adams(k):
    """psi^k as a polynomial in x_i = lambda^i, from the Newton recursion."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _newton_adams(k)


@lru_cache(maxsize=None)
def _newton_adams(k):
    # psi^k = sum_{i<k} (-1)^(i-1) lambda^i psi^(k-i) + (-1)^(k-1) k lambda^k
    out = MPoly.var(k - 1) * ((-1) ** (k - 1) * k)
    for i in range(1, k):
        out = out + MPoly.var(i - 1) * _newton_adams(k - i) * ((-1) ** (i - 1))
    return out


def universal_names(n):
    return [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]


def is_isobaric(poly, weight_of, expected):
    return poly.is_zero() or poly.weights(weight_of) == {expected}
