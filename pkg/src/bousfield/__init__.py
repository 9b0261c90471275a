"""Symbolic computation in the combinatorial model A of p-local Bousfield classes.

Elements are ``t(q, T)``, ``j(m, S)`` and ``k(U)`` with ``T`` cosmall, ``S``
small and ``U`` arbitrary eventually periodic subsets of ``N u {inf}``.
``join`` is the coproduct and ``smash`` the product.
"""

from .core import (
    ONE, ZERO, ConstraintError, Element, Head, J, K, T,
    head_of, j, join, k, leq, smash, t, tail_of,
)
from .ideals import (
    IdealSummary, MShape, join_all, smash_summary,
    summary_from_generators, summary_unbounded_j, theta,
)
from .indexsets import EMPTY, EVENS, FULL, INF, NATURALS, ODDS, OMEGA, IndexSet, SetClass
from .structure import (
    HeytingResult,
    SigmaTriple,
    boolean_complement,
    heyting,
    is_boolean,
    is_idempotent,
    negation,
    quotient_project,
    reconstruct,
    sigma,
)

__all__ = [
    "ONE", "ZERO", "ConstraintError", "Element", "Head", "J", "K", "T",
    "head_of", "j", "join", "k", "leq", "smash", "t", "tail_of",
    "IdealSummary", "MShape", "join_all", "smash_summary", "summary_from_generators",
    "summary_unbounded_j", "theta",
    "EMPTY", "EVENS", "FULL", "INF", "NATURALS", "ODDS", "OMEGA", "IndexSet", "SetClass",
    "HeytingResult", "SigmaTriple", "boolean_complement", "heyting", "is_boolean",
    "is_idempotent", "negation", "quotient_project", "reconstruct", "sigma",
]
