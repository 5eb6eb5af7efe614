"""Arithmetic in the prime field F_p and its extensions F_{p^m}.

Field elements are plain Python ints.  The int ``x`` stands for the
polynomial ``sum(c_i * X**i)`` where ``c_i`` is the i-th base-p digit of
``x``; so ``0..p-1`` are exactly the prime-subfield elements.  Most methods
also accept numpy integer arrays and operate elementwise.
"""

from __future__ import annotations

import itertools
import math
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadDivisor,
    DivisionByZero,
    LogOfZero,
    NotIrreducible,
    NotOddPrime,
    NotPrimitive,
)

# Above this field size the log/antilog tables are not built and
# multiplication falls back to polynomial arithmetic.
TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    r = math.isqrt(n)
    return all(n % d for d in range(3, r + 1, 2))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p: coefficient lists, lowest degree first -----------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    deg_f = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= deg_f:
        shift = len(a) - 1 - deg_f
        coef = a[-1] * inv_lead % p
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - coef * fc) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return _poly_mod(result, f, p)


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    b = list(b) + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic ``f`` of degree m >= 1 over F_p."""
    m = len(f) - 1
    x = [0, 1]
    if _poly_sub(_poly_powmod(x, p**m, f, p), _poly_mod(x, f, p), p):
        return False
    for r in prime_factors(m):
        h = _poly_sub(_poly_powmod(x, p ** (m // r), f, p), _poly_mod(x, f, p), p)
        if _poly_gcd(f, h, p) != [1]:
            return False
    return True


def _root_is_primitive(f: Sequence[int], p: int) -> bool:
    m = len(f) - 1
    order = p**m - 1
    x = [0, 1]
    if _poly_powmod(x, order, f, p) != [1]:
        return False
    return all(_poly_powmod(x, order // r, f, p) != [1] for r in prime_factors(order))


class FieldCtx:
    """The field F_{p^m} realised as F_p[X]/(modulus), with alpha = X mod modulus.

    Treat instances as immutable; the cached tables are deterministic
    functions of (p, m, modulus).
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(int(c) for c in modulus)
        self.alpha = self.from_coeffs(_poly_mod([0, 1], self.modulus, p))
        self._log: np.ndarray | None = None
        self._antilog: np.ndarray | None = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    def _build_tables(self) -> None:
        antilog = np.zeros(self.q - 1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        cur = 1
        for i in range(self.q - 1):
            antilog[i] = cur
            log[cur] = i
            cur = self._mul_poly(cur, self.alpha)
        self._antilog = antilog
        self._log = log

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={self.modulus})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    @property
    def has_tables(self) -> bool:
        return self._log is not None

    # -- representation ----------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates of ``x``, lowest degree first."""
        out = []
        for _ in range(self.m):
            x, c = divmod(x, self.p)
            out.append(c)
        return tuple(out)

    def from_coeffs(self, coeffs: Iterable[int]) -> int:
        value, place = 0, 1
        for c in coeffs:
            value += (c % self.p) * place
            place *= self.p
        return value

    def is_prime_subfield(self, x) -> bool:
        return bool(np.all(np.asarray(x) < self.p))

    def to_token(self, x: int):
        """Representation-independent name: the string ``"0"`` for zero, else the integer log.

        Zero is a string so it never collides with log index 0 (the element 1).
        """
        return "0" if x == 0 else self.log(x)

    def from_token(self, token) -> int:
        if isinstance(token, str):
            if token != "0":
                raise ValueError(f"bad element token {token!r}")
            return 0
        return self.exp(int(token))

    @cached_property
    def ordered_elements(self) -> np.ndarray:
        """All elements in canonical order 0, alpha^0, alpha^1, ..., alpha^(q-2)."""
        return np.array([0] + [self.exp(i) for i in range(self.q - 1)], dtype=np.int64)

    @cached_property
    def order_index(self) -> np.ndarray:
        """Inverse of ``ordered_elements``: position of each element."""
        idx = np.empty(self.q, dtype=np.int64)
        idx[self.ordered_elements] = np.arange(self.q)
        return idx

    # -- arithmetic; add/sub/neg work on ints and arrays alike ---------------

    def add(self, x, y):
        out, place = 0, 1
        for _ in range(self.m):
            out = out + ((x // place + y // place) % self.p) * place
            place *= self.p
        return out

    def neg(self, x):
        out, place = 0, 1
        for _ in range(self.m):
            out = out + ((-(x // place)) % self.p) * place
            place *= self.p
        return out

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def _mul_poly(self, x: int, y: int) -> int:
        prod = _poly_mul(self.coeffs(x), self.coeffs(y), self.p)
        return self.from_coeffs(_poly_mod(prod, self.modulus, self.p))

    def _mul_table(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self._antilog[(self._log[x] + self._log[y]) % (self.q - 1)])

    def mul(self, x: int, y: int) -> int:
        if self.has_tables:
            return self._mul_table(x, y)
        return self._mul_poly(x, y)

    def mul_array(self, x, y) -> np.ndarray:
        """Elementwise product of broadcastable integer arrays (needs tables)."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = self._antilog[(self._log[x] + self._log[y]) % (self.q - 1)]
        return np.where((x == 0) | (y == 0), 0, out)

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("0 has no inverse")
        if self.has_tables:
            return int(self._antilog[(-self._log[x]) % (self.q - 1)])
        return self.pow(x, self.q - 2)

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise DivisionByZero("negative power of 0")
            return 1 if e == 0 else 0
        if self.has_tables:
            return int(self._antilog[(self._log[x] * e) % (self.q - 1)])
        e %= self.q - 1
        coeffs = _poly_powmod(self.coeffs(x), e, self.modulus, self.p)
        return self.from_coeffs(coeffs)

    # -- logs, traces, cyclotomy ---------------------------------------------

    def exp(self, i: int) -> int:
        """alpha**i."""
        if self.has_tables:
            return int(self._antilog[i % (self.q - 1)])
        return self.pow(self.alpha, i)

    def log(self, x: int) -> int:
        if x == 0:
            raise LogOfZero("discrete log of 0")
        if self.has_tables:
            return int(self._log[x])
        return self._bsgs(x)

    def _bsgs(self, x: int) -> int:
        n = self.q - 1
        k = math.isqrt(n) + 1
        baby = {}
        cur = 1
        for j in range(k):
            baby.setdefault(cur, j)
            cur = self._mul_poly(cur, self.alpha)
        giant = self.pow(self.inv(self.alpha), k)
        gamma = x
        for i in range(k + 1):
            if gamma in baby:
                return (i * k + baby[gamma]) % n
            gamma = self._mul_poly(gamma, giant)
        raise AssertionError("alpha is not primitive")

    def trace(self, x: int) -> int:
        """Absolute trace x + x^p + ... + x^(p^(m-1)), returned as an int in [0, p)."""
        total, conj = x, x
        for _ in range(self.m - 1):
            conj = self.pow(conj, self.p)
            total = self.add(total, conj)
        if total >= self.p:
            raise AssertionError(f"trace of {x} left the prime subfield")
        return total

    @cached_property
    def trace_table(self) -> np.ndarray:
        """tr(x) for every x, via F_p-linearity from the traces of 1, X, ..., X^(m-1)."""
        basis = np.array([self.trace(self.p**i) for i in range(self.m)], dtype=np.int64)
        digits = (np.arange(self.q)[:, None] // self.p ** np.arange(self.m)) % self.p
        return (digits @ basis) % self.p

    def cyclotomic_class(self, i: int, N: int) -> list[int]:
        """C_i^N = alpha^i <alpha^N>, in increasing exponent order."""
        if N <= 0 or (self.q - 1) % N:
            raise BadDivisor(f"N={N} does not divide p^m - 1 = {self.q - 1}")
        if not 0 <= i < N:
            raise ValueError(f"class index {i} outside [0, {N})")
        return [self.exp(i + j * N) for j in range((self.q - 1) // N)]


def build_field(p: int, m: int, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Construct F_{p^m}.

    Without ``modulus`` the lexicographically smallest primitive monic
    polynomial of degree m is used, comparing coefficients from the
    constant term upward.  A supplied modulus is given lowest degree first
    and must be monic of degree m.
    """
    if not is_prime(p) or p == 2:
        raise NotOddPrime(f"p={p} is not an odd prime")
    if m < 1:
        raise ValueError(f"m={m} must be positive")
    if modulus is None:
        for tail in itertools.product(range(p), repeat=m):
            f = list(tail) + [1]
            if f[0] and _root_is_primitive(f, p) and is_irreducible(f, p):
                return FieldCtx(p, m, f)
        raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")
    f = [int(c) % p for c in modulus]
    if len(f) != m + 1 or f[-1] != 1:
        raise ValueError(f"modulus must be monic of degree {m}, lowest degree first")
    if not is_irreducible(f, p):
        raise NotIrreducible(f"{f} is reducible over F_{p}")
    if not _root_is_primitive(f, p):
        raise NotPrimitive(f"root of {f} is not a primitive element")
    return FieldCtx(p, m, f)


def field_arith(ctx: FieldCtx, op: str, x: int, y: int | None = None) -> int:
    """Dispatch one of add, sub, mul, inv, pow by name."""
    if op == "inv":
        return ctx.inv(x)
    ops = {"add": ctx.add, "sub": ctx.sub, "mul": ctx.mul, "pow": ctx.pow}
    if op not in ops:
        raise ValueError(f"unknown field operation {op!r}")
    return ops[op](x, y)
