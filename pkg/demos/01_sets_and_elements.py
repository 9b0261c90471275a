"""Walk through index sets and the three element families.

Run:  python3 demos/01_sets_and_elements.py
"""
from __future__ import annotations

from bousfield import EVENS, INF, ONE, ZERO, IndexSet, j, join, k, leq, smash, t

evens_from_two = IndexSet.periodic(2, 2, [0])
print("evens from 2:", evens_from_two, "->", evens_from_two.classify().value)
print("complement of {1}:", ~IndexSet.of(1))
print("[3,inf] is cosmall:", IndexSet.interval(3, INF).is_cosmall)

# j collapses to k when its tail is big
print("j(3, evens) =", j(3, EVENS))

x = t(2, IndexSet.interval(3, INF))
y = j(5, IndexSet.of(0))
print(f"{x} + {y} = {join(x, y)}")
print(f"{x} * {y} = {smash(x, y)}")
print(f"t(5,[2,inf]) * j(3,{{2,4}}) = {smash(t(5, IndexSet.interval(2, INF)), j(3, IndexSet.of(2, 4)))}")

print("0 <= x <= 1:", leq(ZERO, x) and leq(x, ONE))
print("j(0,{}) <= k({0}):", leq(j(0, IndexSet.of()), k(IndexSet.of(0))))
