"""Named p-local spectra and the elements of A representing their classes.

``Exactness.MODULO_TC`` marks identifications that only hold after passing
to the quotient that kills the telescope-conjecture defect classes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import Element, J, K, T
from .wire import element_to_wire, nat_to_wire
from .indexsets import FULL, INF, IndexSet, OmegaNat, is_ext_nat, is_omega_nat, nat_text


class Exactness(enum.Enum):
    EXACT = "exact"
    MODULO_TC = "modulo-TC"


class CatalogError(LookupError):
    pass


# parameter domains
NAT = "n"  # finite natural
EXT = "q"  # natural or inf
OMEGA_EXT = "m"  # natural, w or inf

_DOMAIN_CHECK = {
    NAT: lambda v: isinstance(v, int) and not isinstance(v, bool) and v >= 0,
    EXT: is_ext_nat,
    OMEGA_EXT: is_omega_nat,
}


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    param: Optional[str]
    construct: Callable[..., Element] = field(compare=False)
    exactness: Exactness
    relation: str
    aliases: tuple[str, ...] = ()

    @property
    def pattern(self) -> str:
        return self.name if self.param is None else f"{self.name}({self.param})"

    def element(self, param: Optional[OmegaNat] = None) -> Element:
        if self.param is None:
            if param is not None:
                raise CatalogError(f"{self.name} takes no parameter")
            return self.construct()
        if param is None:
            raise CatalogError(f"{self.pattern} needs a parameter")
        if not _DOMAIN_CHECK[self.param](param):
            raise CatalogError(f"parameter {nat_text(param)} out of domain for {self.pattern}")
        return self.construct(param)


def _s(*items) -> IndexSet:
    return IndexSet.of(*items)


def _upto(n: int) -> IndexSet:
    return IndexSet.interval(0, n)


def _from(n) -> IndexSet:
    return IndexSet.interval(n, INF)


_E, _X = Exactness.EXACT, Exactness.MODULO_TC

ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry("0", None, lambda: K(_s()), _E, "0 = k({})"),
    CatalogEntry("S", None, lambda: T(0, FULL), _E,
                 "S = S^_p = T(0) = t(0, N)", ("S_p",)),
    CatalogEntry("S/p", None, lambda: T(0, _from(1)), _E,
                 "S/p = S/p^inf = t(0, [1,inf])", ("S/p^inf",)),
    CatalogEntry("F", NAT, lambda n: T(0, _from(n)), _E, "F(n) = t(0, [n,inf])"),
    CatalogEntry("HQ", None, lambda: K(_s(0)), _E,
                 "HQ = SQ = I(HQ) = k({0})", ("SQ", "I_HQ")),
    CatalogEntry("H/p", None, lambda: K(_s(INF)), _E,
                 "H/p = H/p^inf = I(H) = I(H/p) = k({inf})",
                 ("H/p^inf", "I_H", "I_H/p")),
    CatalogEntry("I_BPn", NAT, lambda n: K(_s(INF)), _E, "I(BP<n>) = k({inf})"),
    CatalogEntry("H", None, lambda: K(_s(0, INF)), _E, "H = k({0,inf})"),
    CatalogEntry("K'", NAT, lambda n: K(_s(n)), _X,
                 "v_n^-1 F(n) = K'(n) ~ k({n})", ("v_n^-1F",)),
    CatalogEntry("T", EXT, lambda q: T(q, FULL), _E, "T(q) = t(q, N)"),
    CatalogEntry("BP", None, lambda: T(INF, FULL), _E,
                 "BP = BP^_p = T(inf) = t(inf, N)", ("BP_p",)),
    CatalogEntry("P", NAT, lambda n: T(INF, _from(n)), _E,
                 "P(n) = BP/I_n = t(inf, [n,inf])", ("BP/I_n",)),
    CatalogEntry("K", NAT, lambda n: K(_s(n)), _E,
                 "B(n) = v_n^-1 P(n) = K(n) = M_n S = k({n})",
                 ("B", "v_n^-1P", "M_nS")),
    CatalogEntry("IK", NAT, lambda n: K(_s(n)), _E, "IB(n) = IK(n) = k({n})", ("IB",)),
    CatalogEntry("E", NAT, lambda n: K(_upto(n)), _E,
                 "E(n) = v_n^-1 BP<n> = v_n^-1 BP = L_n S = k([0,n])",
                 ("v_n^-1BPn", "v_n^-1BP", "L_nS")),
    CatalogEntry("Ehat", NAT, lambda n: K(_upto(n)), _E,
                 "E(n)^ = L_K(n) S = k([0,n])", ("L_KnS",)),
    CatalogEntry("C_nS", NAT, lambda n: T(0, _from(n + 1)), _X,
                 "C_n S ~ t(0, [n+1,inf])"),
    CatalogEntry("BPn", NAT, lambda n: K(_upto(n) | _s(INF)), _E,
                 "BP<n> = k([0,n] u {inf})"),
    CatalogEntry("BPn/I_n", NAT, lambda n: K(_s(n, INF)), _E,
                 "BP<n>/I_n = k({n,inf})"),
    CatalogEntry("KU", None, lambda: K(_s(0, 1)), _E, "KU = KO = k({0,1})", ("KO",)),
    CatalogEntry("kU", None, lambda: K(_s(0, 1, INF)), _E,
                 "kU = kO = k({0,1,inf})", ("kO",)),
    CatalogEntry("Ell", None, lambda: K(_s(0, 1, 2)), _E,
                 "Ell = TMF = k({0,1,2})", ("TMF",)),
    CatalogEntry("I_S", None, lambda: J(0, _s()), _E,
                 "I(S) = I(T(0)) = I(F(n)) = j(0, {})"),
    CatalogEntry("I_F", NAT, lambda n: J(0, _s()), _E, "I(F(n)) = j(0, {})"),
    CatalogEntry("I_S_p", None, lambda: J(0, _s(0)), _E,
                 "I(S^_p) = I(S/p^inf) = j(0, {0})", ("I_S/p^inf",)),
    CatalogEntry("I_T", EXT, lambda m: J(m, _s()), _E,
                 "I(T(m)) = I(T(m) ^ F(n)) = j(m, {})"),
    CatalogEntry("J", OMEGA_EXT, lambda m: J(m, _s()), _E,
                 "J(m) = I(T(m)); J(w) = join of J(m) = j(w, {})"),
)

_BY_NAME: dict[str, CatalogEntry] = {}
for _entry in ENTRIES:
    for _name in (_entry.name, *_entry.aliases):
        assert _name not in _BY_NAME, _name
        _BY_NAME[_name] = _entry


def entry(name: str) -> CatalogEntry:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise CatalogError(f"unknown catalog name {name!r}") from None


def has_name(name: str) -> bool:
    return name in _BY_NAME


def lookup(name: str, param: Optional[OmegaNat] = None) -> tuple[Element, Exactness]:
    found = entry(name)
    return found.element(param), found.exactness


def list_names() -> list[tuple[str, Exactness, str]]:
    """Every name and alias as ``(pattern, exactness, relation)``, sorted."""
    rows = []
    for name, found in _BY_NAME.items():
        pattern = name if found.param is None else f"{name}({found.param})"
        rows.append((pattern, found.exactness, found.relation))
    return sorted(rows, key=lambda row: row[0])


def dump() -> list[dict]:
    """JSON-ready listing; parametric entries are shown at parameter 0 and 2."""
    rows = []
    for pattern, exactness, relation in list_names():
        name = pattern.split("(")[0]
        found = entry(name)
        params = [None] if found.param is None else [0, 2]
        for p in params:
            rows.append({
                "name": name,
                "params": [] if p is None else [nat_to_wire(p)],
                "element": element_to_wire(found.element(p)),
                "exactness": exactness.value,
                "citation": relation,
            })
    return rows
