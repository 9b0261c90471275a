"""Eventually periodic subsets of N_inf = {0, 1, 2, ...} u {inf}.

A set is stored as an explicit prefix of membership bits below ``threshold``,
a periodic tail (``period`` and the residues mod ``period`` that are members
from ``threshold`` onwards) and a flag for ``inf``.  Every constructor
canonicalizes, so two sets are equal exactly when their fields are equal.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Iterable, Union


@functools.total_ordering
class Limit:
    """One of the two transfinite values ``OMEGA`` < ``INF``.

    Compares correctly against plain ints, which are always smaller.
    """

    __slots__ = ("_rank", "_name")

    def __init__(self, rank: int, name: str):
        self._rank = rank
        self._name = name

    def _key(self, other):
        if isinstance(other, Limit):
            return other._rank
        if isinstance(other, int) and not isinstance(other, bool):
            return -1
        return None

    def __eq__(self, other):
        return isinstance(other, Limit) and other._rank == self._rank

    def __lt__(self, other):
        key = self._key(other)
        if key is None:
            return NotImplemented
        return self._rank < key

    def __hash__(self):
        return hash(("Limit", self._rank))

    def __repr__(self):
        return self._name

    def __reduce__(self):
        return (_limit, (self._rank,))


OMEGA = Limit(0, "OMEGA")
INF = Limit(1, "INF")


def _limit(rank: int) -> Limit:
    return OMEGA if rank == 0 else INF


ExtNat = Union[int, Limit]  # a natural or INF
OmegaNat = Union[int, Limit]  # a natural, OMEGA or INF


def is_ext_nat(value) -> bool:
    return value is INF or _is_nat(value)


def is_omega_nat(value) -> bool:
    return isinstance(value, Limit) or _is_nat(value)


def _is_nat(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool) and value >= 0


def nat_text(value: OmegaNat) -> str:
    if value == INF:
        return "inf"
    if value == OMEGA:
        return "w"
    return str(value)


class SetClass(enum.Enum):
    SMALL = "small"
    BIG_NOT_COSMALL = "big"
    COSMALL = "cosmall"


@dataclass(frozen=True)
class IndexSet:
    threshold: int
    bits: tuple[bool, ...]
    period: int
    residues: tuple[int, ...]
    infinity: bool

    # -- construction -----------------------------------------------------

    @classmethod
    def build(cls, bits: Iterable[bool], period: int, residues: Iterable[int],
              infinity: bool) -> IndexSet:
        """Canonical set with the given prefix bits and periodic tail.

        The tail starts right after the prefix; residues are taken mod
        ``period`` relative to 0, not to the end of the prefix.
        """
        if period < 1:
            raise ValueError(f"period must be positive, got {period}")
        return _canonical(list(bits), period, {r % period for r in residues},
                          bool(infinity))

    @classmethod
    def of(cls, *items: ExtNat) -> IndexSet:
        """Finite set; ``INF`` may appear among the items."""
        naturals = []
        infinity = False
        for item in items:
            if item == INF:
                infinity = True
            elif _is_nat(item):
                naturals.append(item)
            else:
                raise ValueError(f"not an element of N_inf: {item!r}")
        size = max(naturals) + 1 if naturals else 0
        bits = [False] * size
        for n in naturals:
            bits[n] = True
        return cls.build(bits, 1, (), infinity)

    @classmethod
    def interval(cls, lo: int, hi: ExtNat) -> IndexSet:
        """``[lo, hi]``; an infinite upper end includes ``inf`` itself."""
        if hi == INF:
            return cls.build([False] * lo, 1, (0,), True)
        if hi < lo:
            return EMPTY
        return cls.of(*range(lo, hi + 1))

    @classmethod
    def periodic(cls, start: int, period: int, residues: Iterable[int],
                 infinity: bool = False) -> IndexSet:
        """``{n >= start : n mod period in residues}``, optionally with ``inf``."""
        return cls.build([False] * start, period, residues, infinity)

    # -- queries ----------------------------------------------------------

    def __contains__(self, n) -> bool:
        if n == INF:
            return self.infinity
        if n < self.threshold:
            return self.bits[n]
        return n % self.period in self.residues

    def member(self, n: ExtNat) -> bool:
        return n in self

    def classify(self) -> SetClass:
        if not self.residues and not self.infinity:
            return SetClass.SMALL
        if self.infinity and len(self.residues) == self.period:
            return SetClass.COSMALL
        return SetClass.BIG_NOT_COSMALL

    @property
    def is_small(self) -> bool:
        return not self.residues and not self.infinity

    @property
    def is_big(self) -> bool:
        return not self.is_small

    @property
    def is_cosmall(self) -> bool:
        return self.infinity and len(self.residues) == self.period

    @property
    def is_empty(self) -> bool:
        return self == EMPTY

    def finite_members(self) -> list[int]:
        """Natural members; only meaningful when the tail is empty."""
        if self.residues:
            raise ValueError("set has infinitely many natural members")
        return [n for n, bit in enumerate(self.bits) if bit]

    def min(self) -> ExtNat | None:
        for n, bit in enumerate(self.bits):
            if bit:
                return n
        if self.residues:
            base = self.threshold
            return min(base + (r - base) % self.period for r in self.residues)
        return INF if self.infinity else None

    def sup(self) -> OmegaNat | None:
        """Supremum in N_omega: ``INF`` if present, ``OMEGA`` if unbounded."""
        if self.infinity:
            return INF
        if self.residues:
            return OMEGA
        members = self.finite_members()
        return members[-1] if members else None

    def horizon(self) -> int:
        """A bound past which membership of naturals is purely periodic."""
        return self.threshold + self.period

    # -- algebra ----------------------------------------------------------

    def __or__(self, other: IndexSet) -> IndexSet:
        return union(self, other)

    def __and__(self, other: IndexSet) -> IndexSet:
        return intersect(self, other)

    def __invert__(self) -> IndexSet:
        return complement(self)

    def __sub__(self, other: IndexSet) -> IndexSet:
        return intersect(self, complement(other))

    def __le__(self, other: IndexSet) -> bool:
        return is_subset(self, other)

    # -- rendering --------------------------------------------------------

    def to_text(self) -> str:
        """Literal in the expression language that parses back to this set."""
        if self == FULL:
            return "N"
        prefix = [n for n, bit in enumerate(self.bits) if bit]
        if not self.residues:
            items = [str(n) for n in prefix] + (["inf"] if self.infinity else [])
            return "{" + ",".join(items) + "}"
        if len(self.residues) == self.period and self.infinity:
            tail = f"[{self.threshold},inf]"
        else:
            residues = ",".join(str(r) for r in self.residues)
            flag = ",inf" if self.infinity else ""
            tail = f"per({self.threshold},{self.period},{{{residues}}}{flag})"
        if not prefix:
            return tail
        return "{" + ",".join(str(n) for n in prefix) + "} | " + tail

    def __str__(self):
        return self.to_text()

    def to_wire(self) -> dict:
        return {
            "threshold": self.threshold,
            "bits": [int(b) for b in self.bits],
            "period": self.period,
            "residues": list(self.residues),
            "infinity": self.infinity,
        }

    @classmethod
    def from_wire(cls, data: dict) -> IndexSet:
        bits = [bool(b) for b in data["bits"]]
        if len(bits) != data["threshold"]:
            raise ValueError("bits length must equal threshold")
        result = cls.build(bits, data["period"], data["residues"], data["infinity"])
        if result.to_wire() != {**data, "bits": [int(b) for b in bits],
                                "residues": sorted(data["residues"])}:
            raise ValueError(f"non-canonical IndexSet wire form: {data}")
        return result


def _canonical(bits: list[bool], period: int, residues: set[int],
               infinity: bool) -> IndexSet:
    for d in range(1, period + 1):
        if period % d:
            continue
        if all((r in residues) == ((r + d) % period in residues) for r in range(period)):
            period = d
            residues = {r % d for r in residues}
            break
    threshold = len(bits)
    while threshold and bits[threshold - 1] == ((threshold - 1) % period in residues):
        threshold -= 1
    return IndexSet(threshold, tuple(bits[:threshold]), period,
                    tuple(sorted(residues)), infinity)


def _combine(a: IndexSet, b: IndexSet, op) -> IndexSet:
    period = math.lcm(a.period, b.period)
    threshold = max(a.threshold, b.threshold)
    bits = [op(n in a, n in b) for n in range(threshold)]
    residues = {n % period for n in range(threshold, threshold + period)
                if op(n in a, n in b)}
    return _canonical(bits, period, residues, op(a.infinity, b.infinity))


@functools.lru_cache(maxsize=1 << 16)
def union(a: IndexSet, b: IndexSet) -> IndexSet:
    return _combine(a, b, lambda x, y: x or y)


@functools.lru_cache(maxsize=1 << 16)
def intersect(a: IndexSet, b: IndexSet) -> IndexSet:
    return _combine(a, b, lambda x, y: x and y)


@functools.lru_cache(maxsize=1 << 14)
def complement(a: IndexSet) -> IndexSet:
    residues = set(range(a.period)) - set(a.residues)
    return _canonical([not bit for bit in a.bits], a.period, residues, not a.infinity)


def is_subset(a: IndexSet, b: IndexSet) -> bool:
    return intersect(a, b) == a


def member(s: IndexSet, n: ExtNat) -> bool:
    return n in s


def classify(s: IndexSet) -> SetClass:
    return s.classify()


EMPTY = IndexSet(0, (), 1, (), False)
FULL = IndexSet(0, (), 1, (0,), True)
NATURALS = IndexSet(0, (), 1, (0,), False)
EVENS = IndexSet(0, (), 2, (0,), False)
ODDS = IndexSet(0, (), 2, (1,), False)
