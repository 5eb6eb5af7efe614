"""The chain rings R = F_p + uF_p and F_{p^m} + uF_{p^m} (u^2 = 0), plus the Gray map.

A ring element ``a + bu`` is a :class:`RingElem` over some field context.
Elements of the base ring R are those whose two components lie in the
prime subfield.  Vectors over R are handled either as lists of RingElem
or, on the fast paths, as a pair of integer arrays ``(A, B)`` holding the
``a`` and ``b`` components.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ContextMismatch, NotBaseRing
from .field import FieldCtx


@dataclass(frozen=True)
class RingElem:
    field: FieldCtx
    a: int
    b: int = 0

    def _coerce(self, other) -> "RingElem":
        if isinstance(other, RingElem):
            if other.field != self.field:
                raise ContextMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, np.integer)):
            return RingElem(self.field, int(other), 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        return RingElem(F, F.add(self.a, o.a), F.add(self.b, o.b))

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return RingElem(F, F.neg(self.a), F.neg(self.b))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.field
        return RingElem(F, F.mul(self.a, o.a), F.add(F.mul(self.a, o.b), F.mul(self.b, o.a)))

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"RingElem({self.a}+{self.b}u)"

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_unit(self) -> bool:
        return self.a != 0

    @property
    def in_maximal_ideal(self) -> bool:
        return self.a == 0

    @property
    def is_base(self) -> bool:
        p = self.field.p
        return self.a < p and self.b < p


def unit_u(field: FieldCtx) -> RingElem:
    return RingElem(field, 0, 1)


def ring_trace(x: RingElem) -> RingElem:
    """Tr(a + bu) = tr(a) + tr(b)u."""
    F = x.field
    return RingElem(F, F.trace(x.a), F.trace(x.b))


def gray(x: RingElem) -> tuple[int, int]:
    """Phi(a + bu) = (b, a + b) for x in the base ring."""
    if not x.is_base:
        raise NotBaseRing(repr(x))
    p = x.field.p
    return x.b, (x.a + x.b) % p


def gray_vec(v: Sequence[RingElem]) -> np.ndarray:
    out = np.zeros(2 * len(v), dtype=np.int64)
    for i, x in enumerate(v):
        out[2 * i], out[2 * i + 1] = gray(x)
    return out


def hamming_weight(y) -> int:
    return int(np.count_nonzero(y))


def lee_weight(v: Sequence[RingElem]) -> int:
    """Lee weight, defined as the Hamming weight of the Gray image."""
    return hamming_weight(gray_vec(v))


def gray_arrays(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Gray image of component arrays; the last axis is the coordinate axis."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.size and (A.max() >= p or B.max() >= p or A.min() < 0 or B.min() < 0):
        raise NotBaseRing("component outside [0, p)")
    out = np.empty(A.shape[:-1] + (2 * A.shape[-1],), dtype=np.int64)
    out[..., 0::2] = B
    out[..., 1::2] = (A + B) % p
    return out


def lee_weight_arrays(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Row-wise Lee weights of component arrays, without building the Gray image."""
    return np.count_nonzero(B, axis=-1) + np.count_nonzero((A + B) % p, axis=-1)
