"""Executable checks for each numbered result about Bin(X) and its center.

Every check runs at a stated order and mode.  Exhaustive mode walks the
whole tuple space; sampled mode draws ``budget`` uniform tuples from a
seeded generator.  A check stops at its first counterexample, so
``cases_checked`` is the number of tuples actually tested.

``product`` is injectable so that a mutated box can be run through the
same checks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product as _cartesian
from math import comb
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from . import center as C
from . import linear as L
from .groupoid import (
    Groupoid,
    all_groupoids,
    associativity_witness,
    count_groupoids,
    extract_digraph,
    has_orientation_property,
    is_commutative,
    is_idempotent,
    is_left_zero,
    is_right_zero,
    is_travel_groupoid,
    left_zero,
    orientation_groupoids,
    right_zero,
)
from .groupoid import box as _box

Product = Callable[[Groupoid, Groupoid], Groupoid]


class TheoremId(str, Enum):
    T1_1_ASSOC = "T1.1-assoc"
    T1_1_IDENTITY = "T1.1-identity"
    E1_2_LINEAR = "E1.2-linear"
    E1_3_OP_CLOSURE = "E1.3-op-closure"
    E1_3_TRAVEL_COMPLETE = "E1.3-travel-complete"
    P2_1 = "P2.1"
    P2_2 = "P2.2"
    T2_3 = "T2.3"
    P2_4 = "P2.4"
    P2_5 = "P2.5"
    E2_6 = "E2.6"
    P2_7 = "P2.7"
    T3_1 = "T3.1"
    C3_2 = "C3.2"
    C3_3 = "C3.3"
    P3_4 = "P3.4"
    P3_5 = "P3.5"
    P3_6 = "P3.6"
    RZ_INVOLUTION = "RZ-involution"

    def __str__(self) -> str:
        return self.value


class Mode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"

    def __str__(self) -> str:
        return self.value


class InfeasibleCheck(ValueError):
    """The requested (id, order, mode) lies outside the feasibility table."""


@dataclass
class Counterexample:
    law: str
    inputs: Dict[str, Any]
    lhs: Any
    rhs: Any


@dataclass
class TheoremReport:
    id: TheoremId
    order: int
    mode: Mode
    cases_checked: int
    passed: bool
    seed: Optional[int] = None
    counterexample: Optional[Counterexample] = None
    details: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed report must carry a counterexample")
        if self.mode is Mode.SAMPLED and self.seed is None:
            raise ValueError("a sampled report must record its seed")


# The table of the three-element example: pairs {0,1}, {1,2} left-zero and
# {0,2} right-zero, yet not a left- or right-zero semigroup.
EXAMPLE_TABLE = Groupoid(3, [0, 0, 2, 1, 1, 1, 0, 2, 2])

# id -> (exhaustive orders, sampled orders)
FEASIBLE: Dict[TheoremId, Tuple[range, range]] = {
    TheoremId.T1_1_ASSOC: (range(1, 3), range(1, 17)),
    TheoremId.T1_1_IDENTITY: (range(1, 4), range(1, 17)),
    TheoremId.E1_2_LINEAR: (range(1, 6), range(1, 65)),
    TheoremId.E1_3_OP_CLOSURE: (range(1, 4), range(1, 17)),
    TheoremId.E1_3_TRAVEL_COMPLETE: (range(1, 5), range(0)),
    TheoremId.P2_1: (range(1, 4), range(1, 17)),
    TheoremId.P2_2: (range(1, 4), range(0)),
    TheoremId.T2_3: (range(1, 6), range(0)),
    TheoremId.P2_4: (range(1, 4), range(0)),
    TheoremId.P2_5: (range(1, 4), range(0)),
    TheoremId.E2_6: (range(3, 4), range(0)),
    TheoremId.P2_7: (range(1, 4), range(1, 17)),
    TheoremId.T3_1: (range(1, 4), range(0)),
    TheoremId.C3_2: (range(1, 6), range(0)),
    TheoremId.C3_3: (range(1, 5), range(1, 17)),
    TheoremId.P3_4: (range(3, 4), range(0)),
    TheoremId.P3_5: (range(1, 6), range(0)),
    TheoremId.P3_6: (range(1, 6), range(1, 17)),
    TheoremId.RZ_INVOLUTION: (range(1, 17), range(0)),
}

DEFAULT_BUDGET: Dict[TheoremId, int] = {
    TheoremId.T1_1_ASSOC: 100_000,
    TheoremId.C3_3: 10_000,
}
FALLBACK_BUDGET = 1_000


def _feasible(tid: TheoremId, n: int, mode: Mode) -> bool:
    exhaustive, sampled = FEASIBLE[tid]
    return n in (exhaustive if mode is Mode.EXHAUSTIVE else sampled)


def _random_tables(rng, n: int, count: int) -> List[Groupoid]:
    rows = rng.integers(0, n, size=(count, n * n)).tolist()
    return [Groupoid._trusted(n, tuple(r)) for r in rows]


def _random_masks(rng, n: int, count: int) -> List[C.PairMask]:
    k = comb(n, 2)
    bits = rng.integers(0, 2, size=(count, k)).tolist()
    return [C.PairMask(n, sum(b << i for i, b in enumerate(row))) for row in bits]


# Each check returns (passed, cases, counterexample, details).
Outcome = Tuple[bool, int, Optional[Counterexample], Dict[str, Any]]


def _ok(cases: int, **details) -> Outcome:
    return True, cases, None, details


def _fail(cases: int, cx: Counterexample, **details) -> Outcome:
    return False, cases, cx, details


def _check_assoc(n, mode, budget, rng, product) -> Outcome:
    law = "box(box(f,g),h) == box(f,box(g,h))"
    if mode is Mode.EXHAUSTIVE:
        tables = list(all_groupoids(n))
        pairs = {(i, j): product(f, g) for i, f in enumerate(tables) for j, g in enumerate(tables)}
        triples = ((i, j, k) for i in range(len(tables)) for j in range(len(tables))
                   for k in range(len(tables)))
        lookup = lambda i, j, k: (tables[i], tables[j], tables[k],
                                  product(pairs[i, j], tables[k]),
                                  product(tables[i], pairs[j, k]))
    else:
        flat = _random_tables(rng, n, 3 * budget)
        triples = ((3 * t, 3 * t + 1, 3 * t + 2) for t in range(budget))
        lookup = lambda i, j, k: (flat[i], flat[j], flat[k],
                                  product(product(flat[i], flat[j]), flat[k]),
                                  product(flat[i], product(flat[j], flat[k])))
    cases = 0
    for i, j, k in triples:
        f, g, h, lhs, rhs = lookup(i, j, k)
        cases += 1
        if lhs != rhs:
            return _fail(cases, Counterexample(law, {"f": f, "g": g, "h": h}, lhs, rhs))
    return _ok(cases)


def _check_identity(n, mode, budget, rng, product) -> Outcome:
    lz = left_zero(n)
    source = all_groupoids(n) if mode is Mode.EXHAUSTIVE else _random_tables(rng, n, budget)
    cases = 0
    for g in source:
        cases += 1
        for law, got in (("box(lz,g) == g", product(lz, g)), ("box(g,lz) == g", product(g, lz))):
            if got != g:
                return _fail(cases, Counterexample(law, {"g": g}, got, g))
    return _ok(cases)


def _check_rz_involution(n, mode, budget, rng, product) -> Outcome:
    for k in range(1, n + 1):
        got = product(right_zero(k), right_zero(k))
        if got != left_zero(k):
            return _fail(k, Counterexample("box(rz,rz) == lz", {"order": k}, got, left_zero(k)))
    return _ok(n)


def _compose_np(p, q, m):
    # p, q: integer arrays with last axis (a, b, c); broadcasts like compose()
    a, b, c = p[..., 0], p[..., 1], p[..., 2]
    d, e, f = q[..., 0], q[..., 1], q[..., 2]
    return np.stack([(d * a + e * b) % m, (d * b + e * a) % m, ((d + e) * c + f) % m], axis=-1)


def _check_linear(n, mode, budget, rng, product) -> Outcome:
    m = n
    if mode is Mode.EXHAUSTIVE:
        coeffs = [L.LinearCoeffs(m, a, b, c) for a, b, c in _cartesian(range(m), repeat=3)]
        hom_pairs = ((p, q) for p in coeffs for q in coeffs)
        ids = coeffs
    else:
        raw = rng.integers(0, m, size=(3 * budget, 3)).tolist()
        rand = [L.LinearCoeffs(m, *t) for t in raw]
        hom_pairs = ((rand[2 * i], rand[2 * i + 1]) for i in range(budget))
        ids = rand[2 * budget:3 * budget]
    tables: Dict[L.LinearCoeffs, Groupoid] = {}

    def table(p):
        t = tables.get(p)
        if t is None:
            t = tables[p] = L.to_table(p)
        return t

    cases = 0
    for p, q in hom_pairs:
        cases += 1
        lhs = L.to_table(L.compose(p, q))
        rhs = product(table(p), table(q))
        if lhs != rhs:
            return _fail(cases, Counterexample(
                "to_table(compose(p,q)) == box(to_table(p),to_table(q))",
                {"p": p, "q": q}, lhs, rhs))

    one = L.identity(m)
    for q in ids:
        cases += 1
        for law, got in (("compose(1,q) == q", L.compose(one, q)),
                         ("compose(q,1) == q", L.compose(q, one))):
            if got != q:
                return _fail(cases, Counterexample(law, {"q": q}, got, q))

    # associativity of compose, vectorised over the last two slots
    if mode is Mode.EXHAUSTIVE:
        P = np.array([x.triple() for x in coeffs], dtype=np.int64)
        for i in range(len(P)):
            pq = _compose_np(P[i][None, :], P, m)                  # (K, 3)
            lhs = _compose_np(pq[:, None, :], P[None, :, :], m)    # (K, K, 3)
            qr = _compose_np(P[:, None, :], P[None, :, :], m)
            rhs = _compose_np(P[i][None, None, :], qr, m)
            bad = np.argwhere((lhs != rhs).any(axis=-1))
            if len(bad):
                j, k = bad[0].tolist()
                cases += j * len(P) + k + 1
                return _fail(cases, _linear_assoc_cx(coeffs[i], coeffs[j], coeffs[k]))
            cases += len(P) * len(P)
    else:
        trip = rng.integers(0, m, size=(budget, 3, 3))
        lhs = _compose_np(_compose_np(trip[:, 0], trip[:, 1], m), trip[:, 2], m)
        rhs = _compose_np(trip[:, 0], _compose_np(trip[:, 1], trip[:, 2], m), m)
        bad = np.flatnonzero((lhs != rhs).any(axis=-1))
        if len(bad):
            t = int(bad[0])
            p, q, r = (L.LinearCoeffs(m, *map(int, trip[t, s])) for s in range(3))
            return _fail(cases + t + 1, _linear_assoc_cx(p, q, r))
        cases += budget
    return _ok(cases)


def _linear_assoc_cx(p, q, r) -> Counterexample:
    return Counterexample("compose(compose(p,q),r) == compose(p,compose(q,r))",
                          {"p": p, "q": q, "r": r},
                          L.compose(L.compose(p, q), r), L.compose(p, L.compose(q, r)))


def _random_op(rng, n: int, count: int) -> List[Groupoid]:
    coins = rng.integers(0, 2, size=(count, n * n)).tolist()
    out = []
    for row in coins:
        out.append(Groupoid._trusted(n, tuple(
            (i % n if row[i] else i // n) for i in range(n * n))))
    return out


def _check_op_closure(n, mode, budget, rng, product) -> Outcome:
    if mode is Mode.EXHAUSTIVE:
        ops = list(orientation_groupoids(n))
        pairs = ((f, g) for f in ops for g in ops)
    else:
        flat = _random_op(rng, n, 2 * budget)
        pairs = ((flat[2 * i], flat[2 * i + 1]) for i in range(budget))
    cases = 0
    for f, g in pairs:
        cases += 1
        fg = product(f, g)
        if not has_orientation_property(fg):
            bad = next((x, y) for x in range(n) for y in range(n) if fg(x, y) not in (x, y))
            return _fail(cases, Counterexample(
                "box(f,g) has the orientation property", {"f": f, "g": g, "cell": bad},
                fg(*bad), set(bad)))
    return _ok(cases)


def _check_travel(n, mode, budget, rng, product) -> Outcome:
    cases = travel = 0
    for g in orientation_groupoids(n):
        cases += 1
        if not is_travel_groupoid(g):
            continue
        travel += 1
        d = extract_digraph(g)
        if not (d.is_symmetric() and d.is_complete()):
            return _fail(cases, Counterexample(
                "OP travel groupoid has a complete symmetric digraph", {"g": g},
                sorted(d.edges), n * (n - 1)), travel_groupoids=travel)
    return _ok(cases, travel_groupoids=travel)


def _check_zeros_central(n, mode, budget, rng, product) -> Outcome:
    cases = 0
    for name, g in (("left_zero", left_zero(n)), ("right_zero", right_zero(n))):
        if mode is Mode.EXHAUSTIVE:
            h, k = C.center_witness(g, product)
        else:
            h, k = C.sampled_center_witness(g, budget, int(rng.integers(2**31)), product)
        cases += k
        if h is not None:
            return _fail(cases, _commute_cx(g, h, product, name))
    return _ok(cases)


def _commute_cx(g, h, product, name="g") -> Counterexample:
    return Counterexample("box(g,h) == box(h,g)", {name: g, "h": h}, product(g, h), product(h, g))


def _center_members(n, product):
    return sorted(C.center_bruteforce(n, product))


def _check_center_idempotent(n, mode, budget, rng, product) -> Outcome:
    members = _center_members(n, product)
    for g in members:
        if not is_idempotent(g):
            x = next(x for x in range(n) if g(x, x) != x)
            return _fail(count_groupoids(n), Counterexample(
                "central g has g(x,x) == x", {"g": g, "x": x}, g(x, x), x))
    return _ok(count_groupoids(n), center_size=len(members))


def _check_pairs_swap(n, mode, budget, rng, product) -> Outcome:
    if n <= C.BRUTEFORCE_MAX_ORDER:
        family, source = _center_members(n, product), "bruteforce-center"
    else:
        family, source = list(C.enumerate_locally_zero(n)), "locally-zero"
    cases = 0
    for g in family:
        for x, y in C.pairs(n):
            cases += 1
            got = {g(x, y), g(y, x)}
            if got != {x, y}:
                return _fail(cases, Counterexample(
                    "{g(x,y), g(y,x)} == {x, y}", {"g": g, "x": x, "y": y}, got, {x, y}),
                    family=source)
    return _ok(cases, family=source, family_size=len(family))


def _check_center_pairs(n, mode, budget, rng, product) -> Outcome:
    cases = 0
    for g in _center_members(n, product):
        for x, y in C.pairs(n):
            cases += 1
            kind = C.subtable_kind(g, x, y)
            if kind is C.SubtableKind.NEITHER:
                return _fail(cases, Counterexample(
                    "central g restricted to {x,y} is L or R", {"g": g, "x": x, "y": y},
                    (g(x, y), g(y, x)), "L or R"))
    return _ok(cases)


def _check_masks_central(n, mode, budget, rng, product) -> Outcome:
    cases = 0
    for m in C.enumerate_masks(n):
        g = C.from_mask(m)
        h, k = C.center_witness(g, product)
        cases += k
        if h is not None:
            return _fail(cases, _commute_cx(g, h, product), mask=str(m))
    return _ok(cases)


def _check_example(n, mode, budget, rng, product) -> Outcome:
    g = EXAMPLE_TABLE
    expected = {(0, 1): C.SubtableKind.LEFT_ZERO, (0, 2): C.SubtableKind.RIGHT_ZERO,
                (1, 2): C.SubtableKind.LEFT_ZERO}
    cases = 0
    for law, ok, got in (("not left-zero", not is_left_zero(g), is_left_zero(g)),
                         ("not right-zero", not is_right_zero(g), is_right_zero(g))):
        cases += 1
        if not ok:
            return _fail(cases, Counterexample(law, {"g": g}, got, False))
    for (x, y), kind in expected.items():
        cases += 1
        got = C.subtable_kind(g, x, y)
        if got is not kind:
            return _fail(cases, Counterexample(
                "subtable kind", {"g": g, "x": x, "y": y}, got.value, kind.value))
    h, k = C.center_witness(g, product)
    cases += k
    if h is not None:
        return _fail(cases, _commute_cx(g, h, product), mask=str(C.to_mask(g)))
    return _ok(cases, mask=str(C.to_mask(g)))


def _random_commutative(rng, n: int, count: int) -> List[Groupoid]:
    out = []
    for row in rng.integers(0, n, size=(count, n * n)).tolist():
        t = list(row)
        for x in range(n):
            for y in range(x):
                t[x * n + y] = t[y * n + x]
        out.append(Groupoid._trusted(n, tuple(t)))
    return out


def _check_ab_ideal(n, mode, budget, rng, product) -> Outcome:
    # outer operations range over every locally-zero groupoid, which contains
    # the brute-force center
    if mode is Mode.EXHAUSTIVE:
        central = C.center_bruteforce(n, product)
        family = list(C.enumerate_locally_zero(n))
        missing = [g for g in central if g not in set(family)]
        if missing:
            return _fail(0, Counterexample("center is contained in locally-zero", {"g": missing[0]},
                                           False, True))
        ab = [g for g in all_groupoids(n) if is_commutative(g)]
        pairs = ((s, t) for s in ab for t in family)
        details = {"commutative": len(ab), "outer": len(family), "center_size": len(central)}
    else:
        stars = _random_commutative(rng, n, budget)
        dots = [C.from_mask(m) for m in _random_masks(rng, n, budget)]
        pairs = zip(stars, dots)
        details = {}
    cases = 0
    for star, dot in pairs:
        cases += 1
        got = product(star, dot)
        if got != star:
            return _fail(cases, Counterexample("box(star,dot) == star", {"star": star, "dot": dot},
                                               got, star), **details)
        if not is_commutative(got):
            return _fail(cases, Counterexample("box(star,dot) is commutative", {"star": star, "dot": dot},
                                               got, "commutative"), **details)
    return _ok(cases, **details)


def _check_characterization(n, mode, budget, rng, product) -> Outcome:
    central = C.center_bruteforce(n, product)
    local = set(C.enumerate_locally_zero(n))
    details = {"center_size": len(central), "locally_zero": len(local)}
    cases = count_groupoids(n)
    for g in sorted(local - central):
        h, _ = C.center_witness(g, product)
        cx = _commute_cx(g, h, product)
        cx.inputs["mask"] = str(C.to_mask(g))
        return _fail(cases, cx, **details)
    for g in sorted(central - local):
        return _fail(cases, Counterexample("central g is locally-zero", {"g": g},
                                           False, True), **details)
    return _ok(cases, **details)


def _check_count(n, mode, budget, rng, product) -> Outcome:
    seen = set()
    for g in C.enumerate_locally_zero(n):
        if not C.is_locally_zero(g):
            return _fail(len(seen) + 1, Counterexample("enumerated g is locally-zero",
                                                       {"g": g}, False, True))
        seen.add(g)
    expected = 2 ** comb(n, 2)
    details = {"count": len(seen)}
    if n <= C.ISO_CLASSES_MAX_ORDER:
        details["iso_classes"] = C.count_iso_classes(n)
    if len(seen) != expected:
        return _fail(len(seen), Counterexample("count == 2^C(n,2)", {"n": n},
                                               len(seen), expected), **details)
    return _ok(len(seen), **details)


def _check_mask_square(n, mode, budget, rng, product) -> Outcome:
    if mode is Mode.EXHAUSTIVE:
        masks = list(C.enumerate_masks(n))
        pairs = ((a, b) for a in masks for b in masks)
    else:
        flat = _random_masks(rng, n, 2 * budget)
        pairs = ((flat[2 * i], flat[2 * i + 1]) for i in range(budget))
    cases = 0
    for m1, m2 in pairs:
        cases += 1
        g = product(C.from_mask(m1), C.from_mask(m2))
        want = C.mask_box(m1, m2)
        if not C.is_locally_zero(g):
            return _fail(cases, Counterexample("box(g,h) is locally-zero", {"m1": m1, "m2": m2},
                                               g, str(want)))
        got = C.to_mask(g)
        if got != want:
            return _fail(cases, Counterexample("to_mask(box(g,h)) == mask_box(m1,m2)",
                                               {"m1": m1, "m2": m2}, str(got), str(want)))
    return _ok(cases)


def _check_nonassoc_example(n, mode, budget, rng, product) -> Outcome:
    g = EXAMPLE_TABLE
    if not C.is_locally_zero(g):
        return _fail(1, Counterexample("example is locally-zero", {"g": g}, False, True))
    failing = [(x, y, z) for x, y, z in _cartesian(range(3), repeat=3)
               if g(g(x, y), z) != g(x, g(y, z))]
    w = associativity_witness(g)
    if w is None:
        return _fail(27, Counterexample("example is not associative", {"g": g}, True, False))
    x, y, z = w
    return _ok(27, witness=w, lhs=g(g(x, y), z), rhs=g(x, g(y, z)),
               failing_triples=len(failing))


def _check_assoc_masks(n, mode, budget, rng, product) -> Outcome:
    ends = {C.PairMask.all_left(n), C.PairMask.all_right(n)}
    cases = assoc = 0
    for m in C.enumerate_masks(n):
        cases += 1
        w = associativity_witness(C.from_mask(m))
        if w is None:
            assoc += 1
        if (w is None) != (m in ends):
            return _fail(cases, Counterexample(
                "associative <=> all-L or all-R", {"mask": str(m)},
                w is None, m in ends), associative=assoc)
    return _ok(cases, associative=assoc)


def _check_self_square(n, mode, budget, rng, product) -> Outcome:
    masks = C.enumerate_masks(n) if mode is Mode.EXHAUSTIVE else _random_masks(rng, n, budget)
    lz = left_zero(n)
    cases = 0
    for m in masks:
        cases += 1
        sq = C.mask_box(m, m)
        if sq != C.PairMask.all_left(n):
            return _fail(cases, Counterexample("mask_box(m,m) == all-L", {"mask": str(m)},
                                               str(sq), str(C.PairMask.all_left(n))))
        g = C.from_mask(m)
        got = product(g, g)
        if got != lz:
            return _fail(cases, Counterexample("box(g,g) == left_zero", {"g": g}, got, lz))
    return _ok(cases)


CHECKS = {
    TheoremId.T1_1_ASSOC: _check_assoc,
    TheoremId.T1_1_IDENTITY: _check_identity,
    TheoremId.E1_2_LINEAR: _check_linear,
    TheoremId.E1_3_OP_CLOSURE: _check_op_closure,
    TheoremId.E1_3_TRAVEL_COMPLETE: _check_travel,
    TheoremId.P2_1: _check_zeros_central,
    TheoremId.P2_2: _check_center_idempotent,
    TheoremId.T2_3: _check_pairs_swap,
    TheoremId.P2_4: _check_center_pairs,
    TheoremId.P2_5: _check_masks_central,
    TheoremId.E2_6: _check_example,
    TheoremId.P2_7: _check_ab_ideal,
    TheoremId.T3_1: _check_characterization,
    TheoremId.C3_2: _check_count,
    TheoremId.C3_3: _check_mask_square,
    TheoremId.P3_4: _check_nonassoc_example,
    TheoremId.P3_5: _check_assoc_masks,
    TheoremId.P3_6: _check_self_square,
    TheoremId.RZ_INVOLUTION: _check_rz_involution,
}


def run_check(tid, n: int, mode=Mode.EXHAUSTIVE, budget: Optional[int] = None,
              seed: int = 0, product: Product = _box) -> TheoremReport:
    tid = TheoremId(tid)
    mode = Mode(mode)
    if not _feasible(tid, n, mode):
        exhaustive, sampled = FEASIBLE[tid]
        allowed = exhaustive if mode is Mode.EXHAUSTIVE else sampled
        scope = f"orders {allowed.start}..{allowed.stop - 1}" if len(allowed) else "not supported"
        raise InfeasibleCheck(f"{tid} {mode} at order {n} is infeasible ({mode}: {scope})")
    if budget is None:
        budget = DEFAULT_BUDGET.get(tid, FALLBACK_BUDGET)
    if mode is Mode.SAMPLED and budget < 1:
        raise InfeasibleCheck("sampled mode needs budget >= 1")
    rng = np.random.default_rng(seed)
    passed, cases, cx, details = CHECKS[tid](n, mode, budget, rng, product)
    return TheoremReport(tid, n, mode, cases, passed,
                         seed=seed if mode is Mode.SAMPLED else None,
                         counterexample=cx, details=details)


def plan(tid: TheoremId, n_max: int) -> Optional[Tuple[int, Mode]]:
    """The widest feasible scope for ``tid`` at orders up to ``n_max``."""
    exhaustive, sampled = FEASIBLE[tid]
    if n_max in exhaustive:
        return n_max, Mode.EXHAUSTIVE
    if n_max in sampled:
        return n_max, Mode.SAMPLED
    below = [k for k in exhaustive if k <= n_max]
    return (below[-1], Mode.EXHAUSTIVE) if below else None


def run_all(n_max: int, seed: int = 0, budget: Optional[int] = None,
            product: Product = _box) -> List[TheoremReport]:
    if n_max < 2:
        raise InfeasibleCheck("run_all needs n_max >= 2")
    reports = []
    for tid in TheoremId:
        scope = plan(tid, n_max)
        if scope is None:
            continue
        n, mode = scope
        reports.append(run_check(tid, n, mode, budget, seed, product))
    return reports
