"""The carrier A: elements t(q,T), j(m,S), k(U), with join, smash and order.

``join`` is the coproduct (least upper bound) and ``smash`` the product.
Elements are immutable and always canonical, so ``==`` is element equality.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Optional, Union

from .indexsets import (
    EMPTY,
    FULL,
    INF,
    OMEGA,
    ExtNat,
    IndexSet,
    OmegaNat,
    intersect,
    is_ext_nat,
    is_omega_nat,
    is_subset,
    nat_text,
    union,
)


class ConstraintError(ValueError):
    """An element or construction was requested outside its domain."""


@dataclass(frozen=True)
class T:
    q: ExtNat
    tail: IndexSet

    def __post_init__(self):
        if not is_ext_nat(self.q):
            raise ConstraintError(f"t-head must lie in N_inf, got {self.q!r}")
        if not self.tail.is_cosmall:
            raise ConstraintError(f"t({nat_text(self.q)}, {self.tail}): tail is not cosmall")

    kind = "t"

    def __str__(self):
        return f"t({nat_text(self.q)}, {self.tail})"


@dataclass(frozen=True)
class J:
    m: OmegaNat
    tail: IndexSet

    def __post_init__(self):
        if not is_omega_nat(self.m):
            raise ConstraintError(f"j-head must lie in N_omega, got {self.m!r}")
        if not self.tail.is_small:
            raise ConstraintError(f"j({nat_text(self.m)}, {self.tail}): tail is not small")

    kind = "j"

    def __str__(self):
        return f"j({nat_text(self.m)}, {self.tail})"


@dataclass(frozen=True)
class K:
    tail: IndexSet

    kind = "k"

    def __str__(self):
        return f"k({self.tail})"


Element = Union[T, J, K]


@dataclass(frozen=True)
class Head:
    """Image of an element in the head set: t(q), j(m) or k."""

    kind: str
    value: Optional[OmegaNat] = None

    def __str__(self):
        return self.kind if self.value is None else f"{self.kind}({nat_text(self.value)})"


def t(q: ExtNat, tail: IndexSet) -> T:
    return T(q, tail)


def j(m: Optional[OmegaNat], tail: IndexSet) -> Element:
    """Normalizing j-constructor: ``m=None`` (bottom) or a big tail gives k(tail)."""
    if m is None or tail.is_big:
        return K(tail)
    return J(m, tail)


def k(tail: IndexSet) -> K:
    return K(tail)


ZERO = K(EMPTY)
ONE = T(0, FULL)


def tail_of(x: Element) -> IndexSet:
    return x.tail


def head_of(x: Element) -> Head:
    if isinstance(x, T):
        return Head("t", x.q)
    if isinstance(x, J):
        return Head("j", x.m)
    return Head("k")


@functools.lru_cache(maxsize=1 << 17)
def join(x: Element, y: Element) -> Element:
    if x.kind > y.kind:
        x, y = y, x
    # x.kind <= y.kind in the order "j" < "k" < "t"
    if isinstance(y, T):
        if isinstance(x, T):
            return T(min(x.q, y.q), union(x.tail, y.tail))
        return T(y.q, union(x.tail, y.tail))
    if isinstance(x, J):
        if isinstance(y, J):
            return J(max(x.m, y.m), union(x.tail, y.tail))
        return j(x.m if y.tail.is_small else None, union(x.tail, y.tail))
    return K(union(x.tail, y.tail))


@functools.lru_cache(maxsize=1 << 17)
def smash(x: Element, y: Element) -> Element:
    tail = intersect(x.tail, y.tail)
    if isinstance(x, T) and isinstance(y, T):
        return T(max(x.q, y.q), tail)
    if isinstance(y, T):
        x, y = y, x
    if isinstance(x, T) and isinstance(y, J):
        return J(y.m, tail) if x.q <= y.m else K(tail)
    return K(tail)


def leq(x: Element, y: Element) -> bool:
    """Order decision by the explicit case table."""
    if isinstance(x, T):
        return isinstance(y, T) and x.q >= y.q and is_subset(x.tail, y.tail)
    if isinstance(x, J):
        if isinstance(y, J):
            return x.m <= y.m and is_subset(x.tail, y.tail)
        if isinstance(y, K):
            return y.tail.is_big and is_subset(x.tail, y.tail)
        return is_subset(x.tail, y.tail)
    return is_subset(x.tail, y.tail)


__all__ = [
    "ConstraintError", "Element", "Head", "T", "J", "K", "ONE", "ZERO",
    "t", "j", "k", "join", "smash", "leq", "tail_of", "head_of",
    "INF", "OMEGA",
]
