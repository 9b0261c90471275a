"""Independent reference computations used to cross-check the library.

Each oracle avoids the code path it checks: the order table works from
membership probes, the Heyting and ideal oracles enumerate a finite universe.
"""

from bousfield import EMPTY, INF, OMEGA, ZERO, IdealSummary, IndexSet, J, T, join, leq, smash
from bousfield.ideals import M_EMPTY, MShape
from bousfield.lawcheck import GridConfig, enumerate_grid

from conftest import probe_points

S = IndexSet.of
R = IndexSet.interval


def rank(head):
    # heads of j and t compared in the extended order 0 < 1 < ... < w < inf
    return {OMEGA: 10**9, INF: 10**9 + 1}.get(head, head)


def subset_by_probe(a, b):
    return all(n in b for n in probe_points(a, b, extra=8) if n in a)


def order_table(x, y):
    """The eight-bullet order, written against membership probes only."""
    sub = subset_by_probe(x.tail, y.tail)
    if isinstance(x, T):
        return isinstance(y, T) and sub and rank(x.q) >= rank(y.q)
    if isinstance(x, J):
        if isinstance(y, T):
            return sub
        if isinstance(y, J):
            return sub and rank(x.m) <= rank(y.m)
        return sub and y.tail.is_big
    return sub


def brute_heyting(x, z, universe):
    """Maximum of {y in universe : x*y <= z} under the join order, or None."""
    members = [y for y in universe if leq(smash(x, y), z)]
    for y in members:
        if all(join(w, y) == y for w in members):
            return y
    return None


CLOSURE_GRID = enumerate_grid(GridConfig(
    head_qs=(0, 1, 2, 3, 5, INF),
    head_ms=(0, 1, 2, 3, 4, 5, OMEGA, INF),
    tail_atoms=(EMPTY, S(0), S(1, 2), R(3, INF)),
))


def closure_summary(gens, universe=CLOSURE_GRID):
    """Summary of the ideal generated by gens, by enumerating g*u and closing under join."""
    members = {ZERO} | {smash(g, u) for g in gens for u in universe}
    frontier = set(members)
    while frontier:
        fresh = {join(a, b) for a in frontier for b in members} - members
        members |= fresh
        frontier = fresh
    A = EMPTY
    for x in members:
        A = A | x.tail
    qs = [x.q for x in members if isinstance(x, T)]
    ms = [x.m for x in members if isinstance(x, J)]
    q_min = min(qs, key=rank) if qs else None
    shape = MShape.bounded(max(ms, key=rank)) if ms else M_EMPTY
    return IdealSummary(A, q_min, shape), members


ALIAS_GROUPS = [
    [("KU", None), ("KO", None)],
    [("Ell", None), ("TMF", None)],
    [("BP", None), ("BP_p", None), ("T", INF)],
    [("E", 3), ("L_nS", 3), ("Ehat", 3), ("L_KnS", 3), ("v_n^-1BPn", 3), ("v_n^-1BP", 3)],
    [("K", 3), ("B", 3), ("IK", 3), ("IB", 3), ("M_nS", 3), ("v_n^-1P", 3)],
    [("I_S", None), ("I_F", 2), ("I_T", 0)],
    [("H/p", None), ("H/p^inf", None), ("I_H", None), ("I_H/p", None), ("I_BPn", 1)],
    [("HQ", None), ("SQ", None), ("I_HQ", None)],
    [("S", None), ("S_p", None), ("T", 0), ("F", 0)],
    [("S/p", None), ("S/p^inf", None)],
    [("I_S_p", None), ("I_S/p^inf", None)],
    [("J", 3), ("I_T", 3)],
    [("kU", None), ("kO", None)],
    [("P", 2), ("BP/I_n", 2)],
    [("K'", 2), ("v_n^-1F", 2)],
]
