"""Ideals of A described by the data that determines their least upper bound.

An ideal is summarized by the union ``A`` of its members' tails, the least
``q`` with a t(q)-headed member, and the shape of the set ``M`` of j-heads.
``theta`` turns such a summary into the ideal's join.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

from .core import ZERO, ConstraintError, Element, J, K, T, join
from .indexsets import EMPTY, INF, OMEGA, ExtNat, IndexSet, OmegaNat, intersect, nat_text


@dataclass(frozen=True)
class MShape:
    """Whether the j-heads of an ideal are absent, have a maximum, or have none."""

    kind: str  # "empty" | "bounded" | "unbounded"
    top: Optional[OmegaNat] = None

    @classmethod
    def bounded(cls, top: OmegaNat) -> MShape:
        return cls("bounded", top)

    def to_wire(self):
        if self.kind == "bounded":
            return {"bounded": _wire_nat(self.top)}
        return self.kind

    def __str__(self):
        if self.kind == "bounded":
            return f"bounded({nat_text(self.top)})"
        return self.kind


M_EMPTY = MShape("empty")
M_UNBOUNDED = MShape("unbounded")


@dataclass(frozen=True)
class IdealSummary:
    A: IndexSet
    q_min: Optional[ExtNat] = None
    m_shape: MShape = M_EMPTY

    def to_wire(self) -> dict:
        return {
            "A": self.A.to_wire(),
            "qMin": None if self.q_min is None else _wire_nat(self.q_min),
            "mShape": self.m_shape.to_wire(),
        }

    def __str__(self):
        q = "-" if self.q_min is None else nat_text(self.q_min)
        return f"ideal(A={self.A}; qmin={q}; M={self.m_shape})"


def _wire_nat(value):
    if value == INF:
        return "inf"
    if value == OMEGA:
        return "w"
    return value


def summary_from_generators(gens: Iterable[Element]) -> IdealSummary:
    """Summary of the ideal generated by a finite list of elements.

    A t-headed generator t(q,T) puts j(inf, 0) x t(q,T) = j(inf, 0) into the
    ideal, so any t-generator makes ``inf`` the largest j-head.
    """
    gens = list(gens)
    A = reduce(lambda acc, g: acc | g.tail, gens, EMPTY)
    qs = [g.q for g in gens if isinstance(g, T)]
    ms = [g.m for g in gens if isinstance(g, J)]
    if qs:
        return IdealSummary(A, min(qs), MShape.bounded(INF))
    if ms:
        return IdealSummary(A, None, MShape.bounded(max(ms)))
    return IdealSummary(A, None, M_EMPTY)


def summary_unbounded_j(A: IndexSet) -> IdealSummary:
    """Ideal generated by k(A) and j(m, 0) for infinitely many finite m."""
    return IdealSummary(A, None, M_UNBOUNDED)


def theta(s: IdealSummary) -> Element:
    """Least upper bound of the ideal with summary ``s``."""
    if s.q_min is not None:
        if not s.A.is_cosmall:
            raise ConstraintError(
                f"{s}: an ideal containing t-heads has a cosmall tail union")
        return T(s.q_min, s.A)
    if s.A.is_big or s.m_shape.kind == "empty":
        return K(s.A)
    if s.m_shape.kind == "unbounded":
        return J(OMEGA, s.A)
    return J(s.m_shape.top, s.A)


def join_all(xs: Iterable[Element]) -> Element:
    return reduce(join, xs, ZERO)


def smash_summary(x: Element, s: IdealSummary) -> IdealSummary:
    """Summary of the ideal generated by ``{x * u : u in I}``."""
    A = intersect(x.tail, s.A)
    if isinstance(x, T):
        q_min = None if s.q_min is None else max(x.q, s.q_min)
        shape = s.m_shape
        if shape.kind == "bounded" and not x.q <= shape.top:
            shape = M_EMPTY
        elif shape.kind == "unbounded" and x.q == INF:
            shape = M_EMPTY
        return IdealSummary(A, q_min, shape)
    if isinstance(x, J):
        # t(q) x j(m) keeps the j-head exactly when q <= m
        if s.q_min is not None and s.q_min <= x.m:
            return IdealSummary(A, None, MShape.bounded(x.m))
        return IdealSummary(A, None, M_EMPTY)
    return IdealSummary(A, None, M_EMPTY)


__all__ = [
    "IdealSummary", "MShape", "M_EMPTY", "M_UNBOUNDED", "summary_from_generators",
    "summary_unbounded_j", "theta", "join_all", "smash_summary",
]
