"""Defining sets D and L, the trace code C_D and the ring code C(m, p, N).

Coordinates of the ring code are the elements x = t + t'u of L, ordered
with t running over D (outer) and t' over 0, alpha^0, alpha^1, ...
(inner).  Codewords Ev(a) are enumerated with a = r0 + r1 u, r0 outer and
r1 inner, each in the same 0-then-powers-of-alpha order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

import numpy as np

from .errors import BadDivisor, BudgetExceeded
from .field import FieldCtx
from .ring import RingElem, ring_trace

DEFAULT_BUDGET = 1 << 24


@dataclass(frozen=True, eq=False)
class CodeSpec:
    field: FieldCtx
    N: int
    N1: int
    N2: int
    n: int
    D: tuple[int, ...]
    # per-coordinate components of L, in canonical coordinate order
    L_a: np.ndarray = field(repr=False)
    L_b: np.ndarray = field(repr=False)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def m(self) -> int:
        return self.field.m

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def length(self) -> int:
        """|L|, the length of the ring code."""
        return len(self.L_a)

    @property
    def L(self) -> list[RingElem]:
        return [RingElem(self.field, int(a), int(b)) for a, b in zip(self.L_a, self.L_b)]

    def coordinate_index(self, a: int, b: int) -> int:
        """Position of a + bu in L (a must belong to D)."""
        return self.D.index(a) * self.q + int(self.field.order_index[b])

    @cached_property
    def trace_product(self) -> np.ndarray:
        """q x q table of tr(x*y) indexed by the element encodings."""
        F = self.field
        xs = np.arange(self.q)
        return F.trace_table[F.mul_array(xs[:, None], xs[None, :])]


def derive_spec(ctx: FieldCtx, N: int) -> CodeSpec:
    q, p = ctx.q, ctx.p
    if N <= 0 or (q - 1) % N:
        raise BadDivisor(f"N={N} does not divide p^m - 1 = {q - 1}")
    e = (q - 1) // (p - 1)
    N1 = N * e // math.gcd(N, e)
    N2 = math.gcd(N, e)
    n = N1 // N
    assert n * N2 * (p - 1) == q - 1
    D = tuple(ctx.exp(N * j) for j in range(n))
    order = ctx.ordered_elements
    L_a = np.repeat(np.array(D, dtype=np.int64), q)
    L_b = np.tile(order, n)
    return CodeSpec(ctx, N, N1, N2, n, D, L_a, L_b)


def ring_elements(ctx: FieldCtx) -> Iterator[RingElem]:
    """Every element of F_{p^m} + uF_{p^m} in canonical order."""
    order = ctx.ordered_elements
    for r0 in order:
        for r1 in order:
            yield RingElem(ctx, int(r0), int(r1))


def eval_codeword(spec: CodeSpec, a: RingElem) -> list[RingElem]:
    """Ev(a) = (Tr(a x))_{x in L}, computed with ring arithmetic element by element."""
    return [ring_trace(a * x) for x in spec.L]


def eval_arrays(spec: CodeSpec, a: RingElem) -> tuple[np.ndarray, np.ndarray]:
    """Ev(a) as component arrays, using tr(r0 t) + (tr(r0 t') + tr(r1 t))u."""
    P = spec.trace_product
    A = P[a.a, spec.L_a]
    B = (P[a.a, spec.L_b] + P[a.b, spec.L_a]) % spec.p
    return A, B


class RingCode:
    """C(m, p, N) = {Ev(a)}; streams codewords block by block (one block per r0)."""

    def __init__(self, spec: CodeSpec):
        self.spec = spec
        self._matrix: tuple[np.ndarray, np.ndarray] | None = None

    def __len__(self) -> int:
        return self.spec.q ** 2

    def blocks(self) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
        """Yield (r0, A, B) where row i of A, B is Ev(r0 + order[i] u)."""
        spec = self.spec
        P = spec.trace_product
        order = spec.field.ordered_elements
        tail = P[order][:, spec.L_a]
        for r0 in order:
            A = np.broadcast_to(P[r0, spec.L_a], tail.shape)
            B = (P[r0, spec.L_b][None, :] + tail) % spec.p
            yield int(r0), A, B

    def __iter__(self) -> Iterator[tuple[RingElem, np.ndarray, np.ndarray]]:
        F = self.spec.field
        order = F.ordered_elements
        for r0, A, B in self.blocks():
            for i, r1 in enumerate(order):
                yield RingElem(F, r0, int(r1)), A[i], B[i]

    def matrix(self) -> tuple[np.ndarray, np.ndarray]:
        """All codewords as two (q^2, |L|) component arrays, rows in canonical a order."""
        if self._matrix is None:
            As, Bs = [], []
            for _, A, B in self.blocks():
                As.append(np.array(A))
                Bs.append(B)
            self._matrix = (np.vstack(As), np.vstack(Bs))
        return self._matrix

    def gray_matrix(self) -> np.ndarray:
        from .ring import gray_arrays

        A, B = self.matrix()
        return gray_arrays(A, B, self.spec.p)

    @cached_property
    def image_size(self) -> int:
        seen = set()
        for _, A, B in self.blocks():
            rows = np.ascontiguousarray(A + self.spec.p * B).astype(np.int16)
            seen.update(r.tobytes() for r in rows)
        return len(seen)

    def image_report(self) -> dict:
        """Injectivity of Ev and the exponent m' with |image| = p^(2m')."""
        size = self.image_size
        p = self.spec.p
        k = round(math.log(size, p))
        is_power = p**k == size
        report = {
            "evaluations": len(self),
            "image_size": size,
            "injective": size == len(self),
            "anomaly": not (is_power and k % 2 == 0),
        }
        report["m_prime"] = k // 2 if not report["anomaly"] else None
        report["gray_dimension"] = k if is_power else None
        return report


def build_code(spec: CodeSpec, budget: int = DEFAULT_BUDGET) -> RingCode:
    if spec.q ** 2 > budget:
        raise BudgetExceeded(f"{spec.q ** 2} evaluations exceed budget {budget}")
    return RingCode(spec)


def build_CD(spec: CodeSpec) -> np.ndarray:
    """Codewords c_b = (tr(b d_j))_j of C_D, one row per b in canonical order."""
    P = spec.trace_product
    return P[spec.field.ordered_elements][:, list(spec.D)]


def count_N_b(spec: CodeSpec, b: int) -> int:
    """N(b) = #{j : tr(b d_j) = 0}, by direct Frobenius traces."""
    F = spec.field
    return sum(1 for d in spec.D if F.trace(F.mul(b, d)) == 0)


@dataclass
class GroupActionReport:
    closed: bool
    regular: bool
    pure_permutation: bool

    def __bool__(self) -> bool:
        return self.closed and self.regular


def verify_group_action(spec: CodeSpec, code: RingCode) -> GroupActionReport:
    """Check that multiplication by l in L acts regularly on coordinates and preserves the code.

    For l, x in L the product lx equals c*y for a unique y in L and
    c in F_p^*, so l acts on coordinates by x -> y.  The code is preserved
    because Ev(a l)_x = c * Ev(a)_y.  ``pure_permutation`` records whether
    every such scalar c happened to be 1.
    """
    F = spec.field
    p, q = spec.p, spec.q
    # rep[z] = index j of the D element with z in d_j F_p^*, scal[z] = the F_p^* factor
    rep = np.full(q, -1, dtype=np.int64)
    scal = np.zeros(q, dtype=np.int64)
    for j, d in enumerate(spec.D):
        for c in range(1, p):
            z = F.mul(d, c)
            if rep[z] != -1:
                return GroupActionReport(False, False, False)
            rep[z], scal[z] = j, c
    inv_mod_p = np.array([0] + [pow(c, -1, p) for c in range(1, p)], dtype=np.int64)

    A_all, B_all = code.matrix()
    # entries encoded as a + p*b; scaled[c, e] is the encoding of c*(a + bu)
    enc = (A_all + p * B_all).astype(np.uint8 if p * p <= 256 else np.int32)
    ea, eb = np.arange(p * p) % p, np.arange(p * p) // p
    cs = np.arange(p)[:, None]
    scaled = ((cs * ea) % p + p * ((cs * eb) % p)).astype(enc.dtype)
    order_index = F.order_index
    order = F.ordered_elements
    r0s = np.repeat(order, q)
    r1s = np.tile(order, q)

    hits = np.zeros((spec.length, spec.length), dtype=np.int64)
    closed = True
    pure = True
    coords = np.arange(spec.length)
    for la, lb in zip(spec.L_a, spec.L_b):
        prod_a = F.mul_array(la, spec.L_a)
        prod_b = F.add(F.mul_array(la, spec.L_b), F.mul_array(lb, spec.L_a))
        j = rep[prod_a]
        if np.any(j < 0):
            return GroupActionReport(False, False, False)
        c = scal[prod_a]
        y_b = F.mul_array(inv_mod_p[c], prod_b)
        perm = j * q + order_index[y_b]
        hits[coords, perm] += 1
        pure = pure and bool(np.all(c == 1))
        # row index of a*l for every a in canonical order
        al_a = F.mul_array(r0s, la)
        al_b = F.add(F.mul_array(r0s, lb), F.mul_array(r1s, la))
        rows = order_index[al_a] * q + order_index[al_b]
        if closed and not np.array_equal(enc[rows], scaled[c, enc[:, perm]]):
            closed = False
    regular = bool(np.all(hits == 1))
    return GroupActionReport(closed, regular, pure)
