"""Idempotents, complements, Heyting elements, quotients and sigma signatures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import ONE, ZERO, ConstraintError, Element, J, K, T, j, join, leq, smash
from .ideals import M_EMPTY, M_UNBOUNDED, IdealSummary, MShape, theta
from .indexsets import EMPTY, FULL, INF, NATURALS, OMEGA, IndexSet, complement, union


def is_idempotent(x: Element) -> bool:
    return not isinstance(x, J)


def is_boolean(x: Element) -> bool:
    if isinstance(x, T):
        return x.q == 0
    return isinstance(x, K) and x.tail.is_small


def boolean_complement(x: Element) -> Optional[Element]:
    """The complement of ``x`` when it has one, else ``None``."""
    if isinstance(x, T) and x.q == 0:
        return K(complement(x.tail))
    if isinstance(x, K) and x.tail.is_small:
        return T(0, complement(x.tail))
    return None


@dataclass(frozen=True)
class HeytingResult:
    element: Element
    strong: bool

    def __str__(self):
        return f"{self.element} [{'strong' if self.strong else 'weak'}]"


def _finite_heads(*xs: Element) -> list[int]:
    heads = []
    for x in xs:
        value = x.q if isinstance(x, T) else x.m if isinstance(x, J) else None
        if isinstance(value, int):
            heads.append(value)
    return heads


def heyting_summary(x: Element, z: Element) -> IdealSummary:
    """Summary of the ideal ``{y : x * y <= z}``.

    The ideal is closed downwards, so its t- and j-heads can be found by
    testing the smallest witnesses t(q, [N,inf]) and j(m, {}).  N lies past
    the non-periodic part of both tails, and head values beyond the largest
    finite head of x or z all behave alike, so the probes are finite.
    """
    def admits(y: Element) -> bool:
        return leq(smash(x, y), z)

    A = union(complement(x.tail), z.tail)
    cutoff = max(x.tail.horizon(), z.tail.horizon())
    witness_tail = IndexSet.interval(cutoff, INF)
    top = max(_finite_heads(x, z), default=0) + 1
    finite = range(top + 1)

    q_min = next((q for q in [*finite, INF] if admits(T(q, witness_tail))), None)

    ms = [m for m in [*finite, OMEGA, INF] if admits(J(m, EMPTY))]
    if not ms:
        shape = M_EMPTY
    elif ms[-1] == top:
        shape = M_UNBOUNDED
    else:
        shape = MShape.bounded(ms[-1])
    return IdealSummary(A, q_min, shape)


def heyting(x: Element, z: Element) -> HeytingResult:
    """Largest y with ``x * y <= z``, and whether it is a strong Heyting element."""
    y = theta(heyting_summary(x, z))
    return HeytingResult(y, leq(z, y) and join(x, y) == ONE)


def negation(x: Element) -> Element:
    return heyting(x, ZERO).element


def quotient_project(eps: Element, a: Element) -> Element:
    """Image of ``a`` in the quotient by the idempotent ``eps``."""
    if not is_idempotent(eps):
        raise ConstraintError(f"cannot form a quotient by non-idempotent {eps}")
    return join(a, eps)


@dataclass(frozen=True)
class SigmaTriple:
    s1: IndexSet
    s2: IndexSet
    s3: IndexSet

    def to_wire(self) -> dict:
        return {"s1": self.s1.to_wire(), "s2": self.s2.to_wire(), "s3": self.s3.to_wire()}

    def __str__(self):
        return f"(s1={self.s1}, s2={self.s2}, s3={self.s3})"


def sigma(x: Element) -> SigmaTriple:
    if isinstance(x, T):
        return SigmaTriple(x.tail, IndexSet.interval(x.q, INF) if x.q != INF
                           else IndexSet.of(INF), FULL)
    if isinstance(x, J):
        if x.m == OMEGA:
            s3 = NATURALS
        else:
            s3 = IndexSet.interval(0, x.m)
        return SigmaTriple(x.tail, EMPTY, s3)
    return SigmaTriple(x.tail, EMPTY, FULL if x.tail.is_big else EMPTY)


def reconstruct(u: SigmaTriple) -> Optional[Element]:
    """The element whose signature is ``u``, or ``None`` if there is none."""
    if not u.s2.is_empty:
        if not u.s1.is_cosmall:
            return None
        candidate = T(u.s2.min(), u.s1)
    elif u.s1.is_big or u.s3.is_empty:
        candidate = K(u.s1)
    else:
        candidate = j(u.s3.sup(), u.s1)
    return candidate if sigma(candidate) == u else None
