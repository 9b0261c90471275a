"""Exhaustive and randomized verification of the algebraic laws of A.

Every check compares two canonical values; a mismatch is recorded as data
in the report rather than raised.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .core import ONE, ZERO, Element, J, K, T, join, leq, smash
from .ideals import (
    IdealSummary,
    join_all,
    smash_summary,
    summary_from_generators,
    summary_unbounded_j,
    theta,
)
from .indexsets import EMPTY, FULL, INF, OMEGA, ExtNat, IndexSet, OmegaNat
from .structure import (
    boolean_complement,
    heyting,
    is_boolean,
    is_idempotent,
    negation,
    quotient_project,
    reconstruct,
    sigma,
)


@dataclass(frozen=True)
class GridConfig:
    head_qs: tuple[ExtNat, ...]
    head_ms: tuple[OmegaNat, ...]
    tail_atoms: tuple[IndexSet, ...]
    size_cap: Optional[int] = None


SMALL_GRID = GridConfig(
    head_qs=(0, 1, 2, 3, INF),
    head_ms=(0, 1, 2, 3, OMEGA, INF),
    tail_atoms=(
        EMPTY,
        IndexSet.of(0),
        IndexSet.of(1),
        IndexSet.of(INF),
        IndexSet.interval(2, INF),
        IndexSet.periodic(2, 2, [0]),
    ),
)

FULL_GRID = GridConfig(
    head_qs=(0, 1, 2, 3, 4, 5, INF),
    head_ms=(0, 1, 2, 3, 4, 5, OMEGA, INF),
    tail_atoms=SMALL_GRID.tail_atoms + (
        IndexSet.periodic(1, 3, [1]),
        IndexSet.periodic(0, 4, [0, 1]) - IndexSet.of(0),
    ),
)


def grid_tails(atoms: Sequence[IndexSet]) -> list[IndexSet]:
    seen = {}
    for r in range(len(atoms) + 1):
        for combo in itertools.combinations(atoms, r):
            tail = EMPTY
            for atom in combo:
                tail = tail | atom
            seen.setdefault(tail, None)
    return list(seen)


def enumerate_grid(cfg: GridConfig = SMALL_GRID) -> list[Element]:
    """All valid elements with heads and tails drawn from ``cfg``.

    Ordered k-elements first, then j, then t, so that a size cap keeps the
    simplest elements (including 0; 1 is kept explicitly).
    """
    tails = grid_tails(cfg.tail_atoms)
    grid: list[Element] = [K(u) for u in tails]
    grid += [J(m, s) for s in tails if s.is_small for m in cfg.head_ms]
    grid += [T(q, c) for c in tails if c.is_cosmall for q in cfg.head_qs]
    if cfg.size_cap is not None and len(grid) > cfg.size_cap:
        grid = grid[:cfg.size_cap]
        if ONE not in grid:
            grid[-1] = ONE
    return grid


# -- report types -------------------------------------------------------------


def element_size(x: Element) -> tuple:
    head = getattr(x, "q", getattr(x, "m", -1))
    rank = head if isinstance(head, int) else 10 ** 6 + (0 if head == OMEGA else 1)
    return (len(str(x.tail)), rank)


@dataclass
class Violation:
    inputs: tuple
    lhs: object
    rhs: object

    def size(self) -> tuple:
        return tuple(sorted((element_size(v) for v in self.inputs
                             if isinstance(v, (T, J, K))), reverse=True))

    def to_wire(self) -> dict:
        return {"inputs": [str(v) for v in self.inputs], "lhs": str(self.lhs),
                "rhs": str(self.rhs)}


@dataclass
class LawResult:
    name: str
    cases: int = 0
    violations: int = 0
    smallest: Optional[Violation] = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def check(self, inputs: tuple, lhs, rhs) -> bool:
        self.cases += 1
        if lhs == rhs:
            return True
        self.violations += 1
        found = Violation(inputs, lhs, rhs)
        if self.smallest is None or found.size() < self.smallest.size():
            self.smallest = found
        return False

    def holds(self, inputs: tuple, condition: bool) -> bool:
        return self.check(inputs, condition, True)


@dataclass
class LawReport:
    results: list[LawResult] = field(default_factory=list)
    grid_size: int = 0
    seed: int = 0

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def __getitem__(self, name: str) -> LawResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    def to_text(self) -> str:
        lines = [f"grid={self.grid_size} seed={self.seed}"]
        width = max((len(r.name) for r in self.results), default=4)
        for r in self.results:
            status = "ok" if r.ok else "FAIL"
            lines.append(f"{r.name:<{width}}  {status:<4}  cases={r.cases:<8} "
                         f"violations={r.violations:<4} {r.elapsed:6.2f}s")
            if r.smallest is not None:
                v = r.smallest
                lines.append(f"    e.g. inputs={', '.join(map(str, v.inputs))}: "
                             f"{v.lhs} != {v.rhs}")
        return "\n".join(lines)

    def to_wire(self) -> dict:
        return {
            "grid": self.grid_size,
            "seed": self.seed,
            "ok": self.ok,
            "laws": [{
                "name": r.name,
                "cases": r.cases,
                "violations": r.violations,
                "counterexample": None if r.smallest is None else r.smallest.to_wire(),
                "elapsed": round(r.elapsed, 3),
            } for r in self.results],
        }


# -- laws -----------------------------------------------------------------------

LAWS: dict[str, Callable] = {}


def law(name: str):
    def register(fn):
        LAWS[name] = fn
        return fn
    return register


@law("semiring")
def _semiring(ctx) -> Iterable[LawResult]:
    grid = ctx.grid
    comm_j, comm_s = LawResult("join-commutative"), LawResult("smash-commutative")
    assoc_j, assoc_s = LawResult("join-associative"), LawResult("smash-associative")
    dist = LawResult("distributive")
    units = LawResult("units-and-absorption")
    for x in grid:
        units.check((x,), join(ZERO, x), x)
        units.check((x,), smash(ONE, x), x)
        units.check((x,), smash(ZERO, x), ZERO)
        units.check((x,), join(ONE, x), ONE)
        units.check((x,), join(x, x), x)
        for y in grid:
            comm_j.check((x, y), join(x, y), join(y, x))
            comm_s.check((x, y), smash(x, y), smash(y, x))
    for x, y in itertools.product(grid, repeat=2):
        xy_j, xy_s = join(x, y), smash(x, y)
        for z in grid:
            assoc_j.check((x, y, z), join(xy_j, z), join(x, join(y, z)))
            assoc_s.check((x, y, z), smash(xy_s, z), smash(x, smash(y, z)))
            dist.check((z, x, y), smash(z, join(x, y)), join(smash(z, x), smash(z, y)))
    return [comm_j, assoc_j, comm_s, assoc_s, dist, units]


def _probe_points(*sets: IndexSet) -> list:
    horizon = max(s.horizon() for s in sets)
    return [*range(horizon + 1), INF]


@law("tail")
def _tail(ctx) -> Iterable[LawResult]:
    hom = LawResult("tail-homomorphism")
    probes = LawResult("tail-by-k-probes")
    hom.check((ZERO,), ZERO.tail, EMPTY)
    hom.check((ONE,), ONE.tail, FULL)
    for x, y in itertools.product(ctx.grid, repeat=2):
        hom.check((x, y), join(x, y).tail, x.tail | y.tail)
        hom.check((x, y), smash(x, y).tail, x.tail & y.tail)
    for x in ctx.grid:
        for i in _probe_points(x.tail):
            ki = K(IndexSet.of(i))
            probes.check((x, ki), leq(ki, x), i in x.tail)
            probes.check((x, ki), smash(ki, x) == ki, i in x.tail)
    return [hom, probes]


@law("order")
def _order(ctx) -> Iterable[LawResult]:
    agree = LawResult("order-vs-join")
    poset = LawResult("order-partial-order")
    grid = ctx.grid
    for x, y in itertools.product(grid, repeat=2):
        agree.check((x, y), leq(x, y), join(x, y) == y)
        if leq(x, y) and leq(y, x):
            poset.check((x, y), x, y)
    for x in grid:
        poset.holds((x,), leq(x, x) and leq(ZERO, x) and leq(x, ONE))
    for x, y, z in ctx.sample_triples():
        if leq(x, y) and leq(y, z):
            poset.holds((x, y, z), leq(x, z))
    return [agree, poset]


@law("lattice")
def _lattice(ctx) -> Iterable[LawResult]:
    idem = LawResult("latt-idempotents")
    meet = LawResult("latt-meet")
    for x in ctx.grid:
        idem.check((x,), is_idempotent(x), smash(x, x) == x)
    lat = [x for x in ctx.grid if is_idempotent(x)]
    for x, y in itertools.product(lat, repeat=2):
        for z in lat:
            meet.check((x, y, z), leq(x, smash(y, z)), leq(x, y) and leq(x, z))
    return [idem, meet]


@law("boolean")
def _boolean(ctx) -> Iterable[LawResult]:
    member = LawResult("bool-membership")
    pair = LawResult("bool-complement-pair")
    unique = LawResult("bool-uniqueness")
    closed = LawResult("bool-closure")
    grid = ctx.grid
    for x in grid:
        comp = boolean_complement(x)
        member.check((x,), comp is not None, is_boolean(x))
        witnesses = [y for y in grid if join(x, y) == ONE and smash(x, y) == ZERO]
        if comp is not None:
            pair.check((x,), (join(x, comp), smash(x, comp)), (ONE, ZERO))
            unique.check((x,), witnesses, [comp])
        else:
            unique.check((x,), witnesses, [])
    bools = [x for x in grid if is_boolean(x)]
    for x, y in itertools.product(bools, repeat=2):
        closed.holds((x, y), is_boolean(join(x, y)) and is_boolean(smash(x, y)))
    for x in bools:
        closed.holds((x,), is_boolean(boolean_complement(x)))
    return [member, pair, unique, closed]


@law("heyting")
def _heyting(ctx) -> Iterable[LawResult]:
    inside = LawResult("heyting-membership")
    maximal = LawResult("heyting-maximality")
    strong = LawResult("heyting-strong")
    comp = LawResult("heyting-complemented")
    grid = ctx.grid
    for x in grid:
        products = [(y, smash(x, y)) for y in grid]
        complement = boolean_complement(x)
        for z in grid:
            result = heyting(x, z)
            h = result.element
            inside.holds((x, z), leq(smash(x, h), z))
            for y, xy in products:
                if leq(xy, z):
                    maximal.holds((x, z, y), leq(y, h))
            if result.strong:
                strong.holds((x, z), leq(z, h) and join(x, h) == ONE)
            if complement is not None:
                comp.check((x, z), (h, result.strong), (join(z, complement), True))
        if complement is not None:
            comp.check((x,), negation(x), complement)
    return [inside, maximal, strong, comp]


@law("theta")
def _theta(ctx) -> Iterable[LawResult]:
    finite = LawResult("theta-finite-generation")
    bound = LawResult("theta-upper-bound")
    unbounded = LawResult("theta-unbounded")
    for gens in ctx.generator_lists():
        top = theta(summary_from_generators(gens))
        finite.check(tuple(gens), top, join_all(gens))
        for g in gens:
            bound.holds((g, top), leq(g, top))
    finite_ms = [m for m in ctx.head_ms() if isinstance(m, int)] + [OMEGA]
    for A in ctx.tails():
        top = theta(summary_unbounded_j(A))
        if A.is_small:
            unbounded.check((A,), top, J(OMEGA, A))
            for m in finite_ms:
                unbounded.holds((A, m), leq(J(m, A), top))
        else:
            unbounded.check((A,), top, K(A))
    return [finite, bound, unbounded]


@law("distributivity")
def _distributivity(ctx) -> Iterable[LawResult]:
    result = LawResult("complete-distributivity")
    for s in ctx.sample_summaries():
        top = theta(s)
        for x in ctx.grid:
            result.check((x, s), smash(x, top), theta(smash_summary(x, s)))
    return [result]


@law("sigma")
def _sigma(ctx) -> Iterable[LawResult]:
    injective = LawResult("sigma-injective")
    roundtrip = LawResult("sigma-roundtrip")
    seen: dict = {}
    for x in ctx.grid:
        u = sigma(x)
        injective.check((x,), seen.setdefault(u, x), x)
        roundtrip.check((x,), reconstruct(u), x)
    return [injective, roundtrip]


@law("quotient")
def _quotient(ctx) -> Iterable[LawResult]:
    hom = LawResult("quotient-homomorphism")
    struct = LawResult("quotient-structure")
    grid = ctx.grid
    for eps in (e for e in grid if is_idempotent(e)):
        def pi(a):
            return quotient_project(eps, a)

        image = {pi(a) for a in grid}
        upper = {a for a in grid if leq(eps, a)}
        struct.check((eps,), image, upper)
        struct.check((eps,), (pi(ONE), pi(ZERO)), (ONE, eps))
        for u in upper:
            struct.check((eps, u), (pi(u), join(eps, u), smash(eps, u)), (u, u, eps))
        for a, b in itertools.product(grid, repeat=2):
            hom.check((eps, a, b), pi(join(a, b)), join(pi(a), pi(b)))
            hom.check((eps, a, b), pi(smash(a, b)), smash(pi(a), pi(b)))
        ups = sorted(upper, key=str)
        for _ in range(ctx.samples // 10 or 1):
            a, b, c = (ctx.rng.choice(ups) for _ in range(3))
            struct.check((eps, a, b, c), smash(a, join(b, c)),
                         join(smash(a, b), smash(a, c)))
    return [hom, struct]


@law("random")
def _random(ctx) -> Iterable[LawResult]:
    axioms = LawResult("random-semiring")
    order = LawResult("random-order")
    hey = LawResult("random-heyting")
    pool = [random_element(ctx.rng) for _ in range(max(ctx.samples // 10, 10))]
    for _ in range(ctx.samples):
        x, y, z = (random_element(ctx.rng) for _ in range(3))
        axioms.check((x, y, z), join(join(x, y), z), join(x, join(y, z)))
        axioms.check((x, y, z), smash(smash(x, y), z), smash(x, smash(y, z)))
        axioms.check((x, y, z), smash(x, join(y, z)), join(smash(x, y), smash(x, z)))
        axioms.check((x, y), (join(x, y), smash(x, y)), (join(y, x), smash(y, x)))
        order.check((x, y), leq(x, y), join(x, y) == y)
        order.check((x, y), join(x, y).tail, x.tail | y.tail)
    for x, z in zip(pool, reversed(pool)):
        h = heyting(x, z).element
        hey.holds((x, z), leq(smash(x, h), z))
        for y in pool + ctx.grid:
            if leq(smash(x, y), z):
                hey.holds((x, z, y), leq(y, h))
    return [axioms, order, hey]


# -- random generation and driver ---------------------------------------------


def random_index_set(rng: random.Random, max_threshold: int = 6,
                     periods: Sequence[int] = (1, 2, 3, 4)) -> IndexSet:
    threshold = rng.randrange(max_threshold + 1)
    period = rng.choice(periods)
    residues = [r for r in range(period) if rng.random() < 0.5]
    bits = [rng.random() < 0.5 for _ in range(threshold)]
    return IndexSet.build(bits, period, residues, rng.random() < 0.5)


def random_element(rng: random.Random) -> Element:
    heads: list = [*range(8), OMEGA, INF]
    kind = rng.choice("tjk")
    tail = random_index_set(rng)
    if kind == "t":
        q = rng.choice([*range(8), INF])
        return T(q, tail | IndexSet.interval(rng.randrange(8), INF))
    if kind == "j":
        bits = [rng.random() < 0.5 for _ in range(rng.randrange(7))]
        return J(rng.choice(heads), IndexSet.build(bits, 1, (), False))
    return K(tail)


class _Context:
    def __init__(self, grid: list[Element], seed: int, samples: int,
                 cfg: Optional[GridConfig], exhaustive_triples: bool):
        self.grid = grid
        self.seed = seed
        self.samples = samples
        self.cfg = cfg
        self.rng = random.Random(seed)
        self.exhaustive_triples = exhaustive_triples

    def tails(self) -> list[IndexSet]:
        return list(dict.fromkeys(x.tail for x in self.grid))

    def head_ms(self) -> list:
        return sorted({x.m for x in self.grid if isinstance(x, J)})

    def sample_triples(self):
        if self.exhaustive_triples:
            return itertools.product(self.grid, repeat=3)
        return ([self.rng.choice(self.grid) for _ in range(3)] for _ in range(self.samples))

    def generator_lists(self):
        if self.exhaustive_triples:
            for r in range(4):
                yield from (list(c) for c in itertools.combinations(self.grid, r))
        else:
            yield []
            for _ in range(self.samples):
                yield self.rng.sample(self.grid, self.rng.randrange(1, 4))

    def sample_summaries(self) -> list[IdealSummary]:
        count = max(self.samples, 1000)
        tails = self.tails()
        out = []
        for i in range(count):
            if i % 4 == 3:
                out.append(summary_unbounded_j(self.rng.choice(tails)))
            else:
                gens = self.rng.sample(self.grid, self.rng.randrange(0, 4))
                out.append(summary_from_generators(gens))
        return out


def check_laws(grid: list[Element], laws: Optional[Iterable[str]] = None,
               seed: int = 0, samples: int = 2000,
               exhaustive_triples: Optional[bool] = None) -> LawReport:
    """Run the selected law suites (all by default) over ``grid``."""
    selected = list(LAWS) if laws is None else list(laws)
    unknown = [name for name in selected if name not in LAWS]
    if unknown:
        raise KeyError(f"unknown law suites: {unknown}")
    if exhaustive_triples is None:
        exhaustive_triples = len(grid) <= 100
    report = LawReport(grid_size=len(grid), seed=seed)
    for name in selected:
        ctx = _Context(grid, seed, samples, None, exhaustive_triples)
        if name == "semiring" and not exhaustive_triples:
            results = _semiring_sampled(ctx)
        else:
            start = time.perf_counter()
            results = list(LAWS[name](ctx))
            elapsed = (time.perf_counter() - start) / max(len(results), 1)
            for r in results:
                r.elapsed = elapsed
        report.results.extend(results)
    return report


def _semiring_sampled(ctx) -> list[LawResult]:
    start = time.perf_counter()
    assoc = LawResult("semiring-sampled")
    for x, y, z in ctx.sample_triples():
        assoc.check((x, y, z), join(join(x, y), z), join(x, join(y, z)))
        assoc.check((x, y, z), smash(smash(x, y), z), smash(x, smash(y, z)))
        assoc.check((x, y, z), smash(x, join(y, z)), join(smash(x, y), smash(x, z)))
        assoc.check((x, y), (join(x, y), smash(x, y)), (join(y, x), smash(y, x)))
    for x in ctx.grid:
        assoc.check((x,), (join(ZERO, x), smash(ONE, x), smash(ZERO, x), join(ONE, x),
                           join(x, x)), (x, x, ZERO, ONE, x))
    assoc.elapsed = time.perf_counter() - start
    return [assoc]
