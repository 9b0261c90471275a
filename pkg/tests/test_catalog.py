import pytest

from bousfield import EMPTY, FULL, INF, OMEGA, ZERO, IndexSet, j, k, leq, smash, t
from bousfield.wire import element_to_wire

from oracles import ALIAS_GROUPS
from bousfield.catalog import (
    ENTRIES, CatalogError, Exactness, dump, entry, list_names, lookup,
)

S = IndexSet.of
R = IndexSet.interval
EXACT, MOD = Exactness.EXACT, Exactness.MODULO_TC


def el(name, param=None):
    return lookup(name, param)[0]


@pytest.mark.parametrize("name, param, element, exactness", [
    ("TMF", None, k(S(0, 1, 2)), EXACT),
    ("K'", 3, k(S(3)), MOD),
    ("F", 0, t(0, FULL), EXACT),
    ("0", None, ZERO, EXACT),
    ("S", None, t(0, FULL), EXACT),
    ("S/p", None, t(0, R(1, INF)), EXACT),
    ("F", 4, t(0, R(4, INF)), EXACT),
    ("HQ", None, k(S(0)), EXACT),
    ("H/p", None, k(S(INF)), EXACT),
    ("H", None, k(S(0, INF)), EXACT),
    ("T", INF, t(INF, FULL), EXACT),
    ("BP", None, t(INF, FULL), EXACT),
    ("P", 2, t(INF, R(2, INF)), EXACT),
    ("K", 2, k(S(2)), EXACT),
    ("IK", 2, k(S(2)), EXACT),
    ("E", 2, k(R(0, 2)), EXACT),
    ("Ehat", 2, k(R(0, 2)), EXACT),
    ("C_nS", 2, t(0, R(3, INF)), MOD),
    ("BPn", 2, k(R(0, 2) | S(INF)), EXACT),
    ("BPn/I_n", 2, k(S(2, INF)), EXACT),
    ("KU", None, k(S(0, 1)), EXACT),
    ("kU", None, k(S(0, 1, INF)), EXACT),
    ("I_S", None, j(0, EMPTY), EXACT),
    ("I_S_p", None, j(0, S(0)), EXACT),
    ("I_T", 4, j(4, EMPTY), EXACT),
    ("J", OMEGA, j(OMEGA, EMPTY), EXACT),
])
def test_lookup(name, param, element, exactness):
    assert lookup(name, param) == (element, exactness)


def test_f_zero_is_sphere():
    assert el("F", 0) == el("S")


@pytest.mark.parametrize("group", ALIAS_GROUPS)
def test_alias_groups_agree(group):
    values = {el(name, p) for name, p in group}
    assert len(values) == 1


def test_derived_relations():
    for a in range(5):
        for b in range(5):
            expected = k(S(a)) if a == b else ZERO
            assert smash(el("K", a), el("K", b)) == expected
    assert smash(el("E", 1), el("H/p")) == ZERO
    for i in range(5):
        for q in (0, 1, 2, 3, INF):
            assert leq(el("K", i), el("T", q))
    for q in (0, 1, 2, 3, INF):
        for m in (0, 1, 2, 3, INF):
            got = smash(el("T", q), el("I_T", m))
            le = q <= m if m is not INF else True
            assert got == (el("J", m) if le else ZERO)


@pytest.mark.parametrize("name, param", [
    ("F", INF), ("K", OMEGA), ("T", OMEGA), ("S", 1), ("F", None), ("nope", None),
])
def test_lookup_errors(name, param):
    with pytest.raises(CatalogError):
        lookup(name, param)


def test_listing():
    rows = list_names()
    patterns = [r[0] for r in rows]
    assert patterns == sorted(patterns)
    assert ("BP", EXACT) in [(r[0], r[1]) for r in rows]
    assert ("C_nS(n)", MOD) in [(r[0], r[1]) for r in rows]
    assert len(ENTRIES) >= 24
    assert entry("KO").name == "KU"


def test_dump_is_json_ready():
    import json
    rows = dump()
    json.dumps(rows)
    tmf = [r for r in rows if r["name"] == "TMF"]
    assert tmf == [{"name": "TMF", "params": [],
                    "element": element_to_wire(el("TMF")),
                    "exactness": "exact", "citation": "Ell = TMF = k({0,1,2})"}]
