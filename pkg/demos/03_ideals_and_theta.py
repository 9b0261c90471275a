"""Least upper bounds of ideals from their (A, qMin, mShape) summaries."""
from __future__ import annotations

from bousfield import (
    INF, IndexSet, j, join_all, smash, summary_from_generators, summary_unbounded_j,
    t, theta,
)
from bousfield.ideals import smash_summary

gens = [t(2, IndexSet.interval(3, INF)), j(5, IndexSet.of(0))]
s = summary_from_generators(gens)
print("summary:", s.to_wire())
print("theta =", theta(s), "  join of generators =", join_all(gens))

u = summary_unbounded_j(IndexSet.of(0))
print("unbounded j-heads over {0}: theta =", theta(u))
print("same over the evens:", theta(summary_unbounded_j(IndexSet.periodic(0, 2, [0]))))

x = t(1, IndexSet.interval(0, INF))
print(f"{x} * theta(u) = {smash(x, theta(u))}; theta(x.u) = {theta(smash_summary(x, u))}")
