"""Complements, negation and Heyting elements on a few hand-picked cases."""
from __future__ import annotations

from bousfield import (
    EVENS, FULL, ONE, ZERO, IndexSet, boolean_complement, heyting, is_boolean, j, join,
    k, negation, smash, t,
)

for x in (k(IndexSet.of(0)), ONE, k(EVENS)):
    print(f"complement of {x}: {boolean_complement(x)}")

# j(2,{0}) has no complement, but it still has a largest annihilator
x = j(2, IndexSet.of(0))
nx = negation(x)
print(f"neg {x} = {nx}; product = {smash(x, nx)}; complemented: {is_boolean(x)}")

r = heyting(k(IndexSet.of(0, 1)), k(IndexSet.of(0)))
print("heyting(k({0,1}), k({0})) =", r)

r = heyting(t(3, FULL), ZERO)
print("heyting(t(3,N), 0) =", r)
print("  and t(3,N) + that =", join(t(3, FULL), r.element))
