"""Text and JSON rendering of evaluation results."""

from __future__ import annotations

import json

from ..core import Head, J, K, T
from ..indexsets import IndexSet, SetClass
from ..structure import HeytingResult, SigmaTriple
from ..wire import element_to_wire, nat_to_wire
from .evaluate import CatalogListing


def to_text(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, SetClass):
        return value.value
    if isinstance(value, CatalogListing):
        width = max(len(row[0]) for row in value)
        return "\n".join(f"{pattern:<{width}}  {exactness.value:<9}  {relation}"
                         for pattern, exactness, relation in value)
    return str(value)


def to_json(value):
    """JSON-ready structure for ``value``."""
    if value is None or isinstance(value, bool):
        return value
    if isinstance(value, (T, J, K)):
        return element_to_wire(value)
    if isinstance(value, IndexSet):
        return value.to_wire()
    if isinstance(value, SigmaTriple):
        return value.to_wire()
    if isinstance(value, HeytingResult):
        return {"element": element_to_wire(value.element), "strong": value.strong}
    if isinstance(value, Head):
        out = {"kind": value.kind}
        if value.value is not None:
            out["value"] = nat_to_wire(value.value)
        return out
    if isinstance(value, SetClass):
        return value.value
    if isinstance(value, CatalogListing):
        return [{"name": p, "exactness": e.value, "citation": r} for p, e, r in value]
    raise TypeError(f"no JSON form for {type(value).__name__}")


def dumps(data) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def format_value(value, mode: str = "text") -> str:
    if mode == "json":
        return dumps(to_json(value))
    if mode == "text":
        return to_text(value)
    raise ValueError(f"unknown format mode {mode!r}")


__all__ = ["format_value", "to_json", "to_text", "dumps"]
