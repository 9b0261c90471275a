"""Signatures that pin down elements, and quotients by idempotents."""
from __future__ import annotations

from bousfield import INF, OMEGA, IndexSet, j, k, quotient_project, reconstruct, sigma, t

for x in (t(2, IndexSet.of(0) | IndexSet.interval(5, INF)), j(OMEGA, IndexSet.of(1)), k(IndexSet.of(3))):
    u = sigma(x)
    print(f"sigma({x}) = {u}  ->  {reconstruct(u)}")

eps = k(IndexSet.interval(5, INF))
for a in (j(1, IndexSet.of(0)), t(2, IndexSet.interval(3, INF))):
    print(f"project {a} by {eps}: {quotient_project(eps, a)}")
