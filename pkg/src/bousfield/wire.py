"""JSON wire forms for sets, elements and the other engine values."""

from __future__ import annotations

from .core import Element, J, K, T
from .indexsets import INF, OMEGA, IndexSet, OmegaNat


def nat_to_wire(value: OmegaNat):
    if value == INF:
        return "inf"
    if value == OMEGA:
        return "w"
    return value


def nat_from_wire(value) -> OmegaNat:
    if value == "inf":
        return INF
    if value == "w":
        return OMEGA
    if isinstance(value, int) and not isinstance(value, bool) and value >= 0:
        return value
    raise ValueError(f"bad head value {value!r}")


def element_to_wire(x: Element) -> dict:
    if isinstance(x, T):
        return {"kind": "t", "q": nat_to_wire(x.q), "tail": x.tail.to_wire()}
    if isinstance(x, J):
        return {"kind": "j", "m": nat_to_wire(x.m), "tail": x.tail.to_wire()}
    return {"kind": "k", "tail": x.tail.to_wire()}


def element_from_wire(data: dict) -> Element:
    tail = IndexSet.from_wire(data["tail"])
    kind = data["kind"]
    if kind == "t":
        return T(nat_from_wire(data["q"]), tail)
    if kind == "j":
        return J(nat_from_wire(data["m"]), tail)
    if kind == "k":
        return K(tail)
    raise ValueError(f"unknown element kind {kind!r}")
