"""Finite fields GF(p^m) with a polynomial basis over the prime field.

An element is encoded as the integer ``sum(c_i * p**i)`` where ``c_i`` is the
coefficient of ``alpha**i`` and ``alpha`` is a root of the field modulus.
For ``m == 1`` the encoding is the residue itself.

Fields up to ``TABLE_LIMIT`` elements carry exp/log/Zech tables built at
construction; fields up to ``KERNEL_TABLE_LIMIT`` additionally carry full
addition and multiplication tables (numpy) used by the compiled kernels.
Larger fields fall back to polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DegreeTooLarge,
    DivisionByZero,
    InvalidBase,
    InvalidParams,
    NotPrime,
    SpecMismatch,
)

ENUMERATION_GUARD = 1 << 20
TABLE_LIMIT = 1 << 16
KERNEL_TABLE_LIMIT = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**e``; raise :class:`InvalidParams` if q is not a prime power."""
    if q < 2:
        raise InvalidParams(f"field size must be >= 2, got {q}")
    p = prime_factors(q)[0]
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise InvalidParams(f"{q} is not a prime power")
    return p, e


# -- polynomials over GF(p): coefficient lists, constant term first ---------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    lead_inv = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * lead_inv % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _ppowmod(a: list[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Ben-Or's test for a monic polynomial ``f`` over GF(p).

    ``f`` of degree m is irreducible iff gcd(x^(p^i) - x, f) = 1 for all
    i <= m/2. Reducible candidates usually fail at small i.
    """
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    if f[0] == 0:
        return False
    if p <= 16:
        for a in range(1, p):
            acc = 0
            for c in reversed(f):
                acc = (acc * a + c) % p
            if acc == 0:
                return False
    x = [0, 1]
    h = x
    for _ in range(m // 2):
        h = _ppowmod(h, p, f, p)
        g = _pgcd(_psub(h, x, p), list(f), p)
        if len(g) > 1:
            return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree m.

    Candidates are compared as coefficient lists, constant term first.
    """
    for low in itertools.product(range(p), repeat=m):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


class FieldSpec:
    """The field GF(p^m); immutable once constructed.

    Arithmetic methods act on integer-encoded elements. Use
    :meth:`element` for operator-friendly :class:`FieldElement` values.
    """

    __slots__ = (
        "p", "m", "modulus", "q", "_exp", "_log", "_zech", "_neg",
        "add_table", "mul_table", "neg_table", "inv_table", "kernel_tables",
    )

    def __init__(self, p: int, m: int, modulus: Sequence[int]) -> None:
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if m < 1:
            raise InvalidParams(f"extension degree must be >= 1, got {m}")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1 or modulus[-1] != 1 or any(not 0 <= c < p for c in modulus):
            raise InvalidParams(f"modulus {modulus} is not monic of degree {m} over GF({p})")
        if not is_irreducible(modulus, p):
            raise InvalidParams(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        self._exp = self._log = self._zech = self._neg = None
        self.add_table = self.mul_table = self.neg_table = self.inv_table = None
        self.kernel_tables = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers -------------------------------------------

    def _build_tables(self) -> None:
        q, p = self.q, self.p
        order = q - 1
        g = self._primitive_element()
        exp = [0] * (2 * order)
        log = [-1] * q
        v = 1
        for i in range(order):
            exp[i] = v
            log[v] = i
            v = self._mul_poly(v, g)
        for i in range(order, 2 * order):
            exp[i] = exp[i - order]
        neg = [self._neg_digits(a) for a in range(q)]
        zech = [-1] * max(order, 1)
        for i in range(order):
            s = self._add_digits(1, exp[i])
            zech[i] = log[s] if s else -1
        self._exp, self._log, self._zech, self._neg = exp, log, zech, neg
        if q <= KERNEL_TABLE_LIMIT:
            self._build_kernel_tables()

    def _build_kernel_tables(self) -> None:
        q, p, m = self.q, self.p, self.m
        vals = np.arange(q)
        digits = np.stack([(vals // p**i) % p for i in range(m)], axis=1)
        weights = p ** np.arange(m)
        add = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        log = np.array(self._log)
        exp = np.array(self._exp)
        mul = exp[(log[:, None] + log[None, :]) % max(q - 1, 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        neg = np.array(self._neg)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = self._exp[(q - 1 - self._log[a]) % (q - 1)]
        self.add_table = np.ascontiguousarray(add, dtype=np.int32)
        self.mul_table = np.ascontiguousarray(mul, dtype=np.int32)
        self.neg_table = np.ascontiguousarray(neg, dtype=np.int32)
        self.inv_table = np.ascontiguousarray(inv, dtype=np.int32)
        for t in (self.add_table, self.mul_table, self.neg_table, self.inv_table):
            t.setflags(write=False)
        self.kernel_tables = (self.add_table, self.mul_table, self.neg_table, self.inv_table)

    def _primitive_element(self) -> int:
        order = self.q - 1
        if order == 1:
            return 1
        factors = prime_factors(order)
        for g in range(2, self.q):
            if all(self._pow_slow(g, order // r) != 1 for r in factors):
                return g
        raise AssertionError("unreachable: the multiplicative group is cyclic")

    # -- encoding ---------------------------------------------------------

    def digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_digits(self, ds: Sequence[int]) -> int:
        if len(ds) != self.m:
            raise InvalidParams(f"expected {self.m} digits, got {len(ds)}")
        v = 0
        for d in reversed(ds):
            if not 0 <= d < self.p:
                raise InvalidParams(f"digit {d} outside GF({self.p})")
            v = v * self.p + d
        return v

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise InvalidParams(f"{a} is not an element of GF({self.q})")
        return a

    # -- slow paths (polynomial arithmetic) ------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(self.digits(a), self.digits(b))])

    def _neg_digits(self, a: int) -> int:
        p = self.p
        return self.from_digits([(-x) % p for x in self.digits(a)])

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _pmod(_pmul(self.digits(a), self.digits(b), self.p), self.modulus, self.p)
        return self.from_digits(prod + [0] * (self.m - len(prod)))

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_poly(result, a)
            a = self._mul_poly(a, a)
            e >>= 1
        return result

    # -- arithmetic on encoded elements ------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self._zech is None:
            return self._add_digits(a, b)
        if a == 0:
            return b
        if b == 0:
            return a
        order = self.q - 1
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % order]
        if z < 0:
            return 0
        return self._exp[la + z]

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        if self._neg is not None:
            return self._neg[a]
        return self._neg_digits(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        if self._log is None:
            return self._mul_poly(a, b)
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self._log is None:
            return self._pow_slow(a, self.q - 2)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        e %= self.q - 1
        if self.m == 1:
            return pow(a, e, self.p)
        if self._log is None:
            return self._pow_slow(a, e)
        return self._exp[self._log[a] * e % (self.q - 1)]

    # -- misc -------------------------------------------------------------

    def element(self, x: int | Sequence[int]) -> FieldElement:
        if isinstance(x, (int, np.integer)):
            return FieldElement(self, self.check(int(x)))
        return FieldElement(self, self.from_digits(list(x)))

    def elements(self) -> Iterable[FieldElement]:
        if self.q > ENUMERATION_GUARD:
            raise DegreeTooLarge(f"GF({self.q}) exceeds enumeration guard")
        return (FieldElement(self, a) for a in range(self.q))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def _key(self) -> tuple:
        return (self.p, self.m, self.modulus)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def field_create(p: int, m: int = 1, guard: int = ENUMERATION_GUARD) -> FieldSpec:
    """Return GF(p^m) built on the smallest monic irreducible of degree m."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise InvalidParams(f"extension degree must be >= 1, got {m}")
    if p**m > guard:
        raise DegreeTooLarge(f"GF({p}^{m}) exceeds the guard {guard}")
    return FieldSpec(p, m, smallest_irreducible(p, m))


def field_of_size(q: int, guard: int = ENUMERATION_GUARD) -> FieldSpec:
    p, e = prime_power(q)
    return field_create(p, e, guard)


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def _other(self, other: object) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {other.spec!r}")
            return other.value
        if isinstance(other, int):
            return self.spec.check(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.sub(self.value, self._other(other)))

    def __mul__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> FieldElement:
        return FieldElement(self.spec, self.spec.mul(self.value, self.spec.inv(self._other(other))))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.spec, self.spec.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.spec, self.spec.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF({self.spec.q})({self.value})"


def _same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec!r} vs {b.spec!r}")
    return a.spec


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.add(a.value, b.value))


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return FieldElement(_same(a, b), a.spec.mul(a.value, b.value))


def neg(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.neg(a.value))


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.spec, a.spec.inv(a.value))


def _check_base(spec: FieldSpec, base_q: int) -> int:
    """Return e with base_q = p**e and e | m, else raise InvalidBase."""
    try:
        p, e = prime_power(base_q)
    except InvalidParams as exc:
        raise InvalidBase(str(exc)) from None
    if p != spec.p or spec.m % e:
        raise InvalidBase(f"GF({base_q}) is not a subfield of GF({spec.q})")
    return e


def frobenius(a: FieldElement, base_q: int, t: int = 1) -> FieldElement:
    """Return ``a ** (base_q ** t)``."""
    spec = a.spec
    _check_base(spec, base_q)
    if a.value == 0:
        return a
    # exponents act modulo the multiplicative order q-1
    e = pow(base_q, t, spec.q - 1) or spec.q - 1
    return FieldElement(spec, spec.pow(a.value, e))


def expand(a: FieldElement) -> tuple[int, ...]:
    """Coordinates of ``a`` over the polynomial basis 1, alpha, ..., alpha^(m-1)."""
    return a.spec.digits(a.value)


def subfield_embedding(big: FieldSpec, small: FieldSpec) -> list[int]:
    """Map each encoded element of ``small`` to its image inside ``big``.

    The image of small's generator is the least (by encoding) root of
    small's modulus in ``big``.
    """
    if big.p != small.p or big.m % small.m:
        raise InvalidBase(f"GF({small.q}) does not embed in GF({big.q})")
    if small.m == 1:
        return list(range(small.q))
    if big.q > ENUMERATION_GUARD:
        raise DegreeTooLarge(f"GF({big.q}) exceeds enumeration guard")

    def evaluate(x: int) -> int:
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, x), c)
        return acc

    theta = next(x for x in range(big.q) if evaluate(x) == 0)
    image = []
    for v in range(small.q):
        acc, power = 0, 1
        for c in small.digits(v):
            acc = big.add(acc, big.mul(c, power))
            power = big.mul(power, theta)
        image.append(acc)
    return image
