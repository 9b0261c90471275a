"""Bottom-up evaluation of parsed expressions."""

from __future__ import annotations

from typing import Union

from .. import structure
from ..catalog import CatalogError, list_names, lookup
from ..core import ConstraintError, Element, Head, J, K, T, head_of, join, leq, smash
from ..ideals import M_EMPTY, M_UNBOUNDED, IdealSummary, MShape, summary_from_generators, theta
from ..indexsets import FULL, IndexSet, SetClass, complement, intersect, union
from ..structure import HeytingResult, SigmaTriple
from . import parser as P


class CatalogListing(tuple):
    """Rows of ``(pattern, exactness, relation)``."""


Value = Union[Element, IndexSet, bool, SigmaTriple, HeytingResult, Head, SetClass,
              CatalogListing, None]

ELEMENT_TYPES = (T, J, K)


class EvalError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(message)
        self.message = message
        self.pos = pos

    def __str__(self):
        return f"evaluation error at offset {self.pos}: {self.message}"


def _describe(value) -> str:
    if isinstance(value, ELEMENT_TYPES):
        return "an element"
    if isinstance(value, IndexSet):
        return "a set"
    if isinstance(value, bool):
        return "a boolean"
    return type(value).__name__ if value is not None else "none"


def _want_set(value, pos: int) -> IndexSet:
    if not isinstance(value, IndexSet):
        raise EvalError(f"expected a set, got {_describe(value)}", pos)
    return value


def _want_element(value, pos: int) -> Element:
    if not isinstance(value, ELEMENT_TYPES):
        raise EvalError(f"expected an element, got {_describe(value)}", pos)
    return value


def evaluate(node) -> Value:
    try:
        return _eval(node)
    except (ConstraintError, CatalogError) as exc:
        raise EvalError(str(exc).strip("'\""), getattr(node, "pos", 0)) from None


def _eval(node) -> Value:
    if isinstance(node, P.SetItems):
        return IndexSet.of(*node.items)
    if isinstance(node, P.SetInterval):
        return IndexSet.interval(node.lo, node.hi)
    if isinstance(node, P.SetFull):
        return FULL
    if isinstance(node, P.SetPeriodic):
        return IndexSet.periodic(node.start, node.period, node.residues, node.infinity)
    if isinstance(node, P.SetOp):
        sets = [_want_set(_eval(arg), arg.pos) for arg in node.args]
        if node.op == "~":
            return complement(sets[0])
        return union(*sets) if node.op == "|" else intersect(*sets)
    if isinstance(node, P.ElemLit):
        return _element_literal(node)
    if isinstance(node, P.CatalogRef):
        try:
            return lookup(node.name, node.param)[0]
        except CatalogError as exc:
            raise EvalError(str(exc.args[0]), node.pos) from None
    if isinstance(node, P.BinOp):
        left = _want_element(_eval(node.left), node.left.pos)
        right = _want_element(_eval(node.right), node.right.pos)
        return join(left, right) if node.op == "join" else smash(left, right)
    if isinstance(node, P.Rel):
        return _relation(node)
    if isinstance(node, P.Call):
        return _call(node)
    raise EvalError(f"cannot evaluate {type(node).__name__}", getattr(node, "pos", 0))


def _element_literal(node: P.ElemLit) -> Element:
    tail = _want_set(_eval(node.tail), node.tail.pos)
    try:
        if node.kind == "t":
            return T(node.head, tail)
        if node.kind == "j":
            return J(node.head, tail)
        return K(tail)
    except ConstraintError as exc:
        raise EvalError(str(exc), node.pos) from None


def _relation(node: P.Rel) -> bool:
    left, right = _eval(node.left), _eval(node.right)
    if node.op == "eq":
        return left == right
    if isinstance(left, IndexSet) and isinstance(right, IndexSet):
        return left <= right
    return leq(_want_element(left, node.left.pos), _want_element(right, node.right.pos))


def _call(node: P.Call) -> Value:
    fn = node.fn
    if fn == "theta":
        return _theta(node.args[0])
    args = [_eval(arg) for arg in node.args]

    def element(i: int) -> Element:
        return _want_element(args[i], node.args[i].pos)

    if fn == "neg":
        return structure.negation(element(0))
    if fn == "heyting":
        return structure.heyting(element(0), element(1))
    if fn == "comp":
        return structure.boolean_complement(element(0))
    if fn == "idem":
        return structure.is_idempotent(element(0))
    if fn == "bool":
        return structure.is_boolean(element(0))
    if fn == "sigma":
        return structure.sigma(element(0))
    if fn == "reconstruct":
        return structure.reconstruct(_sigma_argument(node, args))
    if fn == "proj":
        try:
            return structure.quotient_project(element(0), element(1))
        except ConstraintError as exc:
            raise EvalError(str(exc), node.pos) from None
    if fn == "sup":
        gens = [element(i) for i in range(len(args))]
        return theta(summary_from_generators(gens))
    if fn == "tail":
        return element(0).tail
    if fn == "head":
        return head_of(element(0))
    if fn == "catalog":
        return CatalogListing(tuple(list_names()))
    if fn == "classify":
        return _want_set(args[0], node.args[0].pos).classify()
    raise EvalError(f"unknown function {fn!r}", node.pos)


def _sigma_argument(node: P.Call, args: list) -> SigmaTriple:
    if len(args) == 1:
        if not isinstance(args[0], SigmaTriple):
            raise EvalError("reconstruct expects a sigma triple or three sets", node.pos)
        return args[0]
    if len(args) != 3:
        raise EvalError("reconstruct expects a sigma triple or three sets", node.pos)
    return SigmaTriple(*(_want_set(a, n.pos) for a, n in zip(args, node.args)))


def _theta(node: P.ThetaArgs) -> Element:
    A = _want_set(_eval(node.A), node.A.pos)
    if node.shape == "empty":
        shape = M_EMPTY
    elif node.shape == "unbounded":
        shape = M_UNBOUNDED
    else:
        shape = MShape.bounded(node.shape)
    try:
        return theta(IdealSummary(A, node.q_min, shape))
    except ConstraintError as exc:
        raise EvalError(str(exc), node.pos) from None


def run(text: str) -> Value:
    return evaluate(P.parse(text))


__all__ = ["EvalError", "Value", "evaluate", "run"]
