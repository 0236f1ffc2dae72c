"""Independent brute-force oracles.

Nothing here performs Gaussian elimination: ranks and intersections are
read off from explicitly enumerated row spaces.
"""

from __future__ import annotations

import itertools
import math

from liftmrd.galois import FieldSpec


def span(rows, field: FieldSpec, n: int | None = None) -> frozenset[tuple[int, ...]]:
    """Every GF(q)-linear combination of ``rows`` (vectors of length ``n``)."""
    rows = [tuple(r) for r in rows]
    if n is None:
        n = len(rows[0])
    out = set()
    for coeffs in itertools.product(range(field.q), repeat=len(rows)):
        v = [0] * n
        for c, r in zip(coeffs, rows):
            if c:
                v = [field.add(x, field.mul(c, y)) for x, y in zip(v, r)]
        out.add(tuple(v))
    return frozenset(out)


def log_q(size: int, q: int) -> int:
    e = round(math.log(size, q))
    assert q**e == size
    return e


def rank(rows, field: FieldSpec) -> int:
    rows = list(rows)
    if not rows or not rows[0]:
        return 0
    return log_q(len(span(rows, field)), field.q)


def intersection_dim(rows_u, rows_v, field: FieldSpec, n: int) -> int:
    return log_q(len(span(rows_u, field, n) & span(rows_v, field, n)), field.q)


def min_injection_distance(bases, field: FieldSpec) -> int:
    spans = [span(b, field) for b in bases]
    k = log_q(len(spans[0]), field.q)
    best = None
    for a, b in itertools.combinations(range(len(spans)), 2):
        if spans[a] == spans[b]:
            continue
        d = k - log_q(len(spans[a] & spans[b]), field.q)
        best = d if best is None else min(best, d)
    return best


def irreducible_count(p: int, m: int) -> int:
    """Number of monic irreducibles of degree m over GF(p) (Gauss's formula)."""

    def mobius(n: int) -> int:
        res, f = 1, 2
        while f * f <= n:
            if n % f == 0:
                n //= f
                if n % f == 0:
                    return 0
                res = -res
            f += 1
        return -res if n > 1 else res

    return sum(mobius(m // d) * p**d for d in range(1, m + 1) if m % d == 0) // m


def has_factor_by_division(f, p: int) -> bool:
    """True when some monic g of degree 1..deg(f)/2 divides f (trial division)."""
    m = len(f) - 1
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            g = list(low) + [1]
            r = list(f)
            while len(r) - 1 >= deg:
                c = r[-1]
                s = len(r) - 1 - deg
                for i, gi in enumerate(g):
                    r[s + i] = (r[s + i] - c * gi) % p
                r.pop()
            if not any(r):
                return True
    return False
