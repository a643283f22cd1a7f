"""Locally-zero groupoids, their pair-mask coordinates, and the center ZBin(X).

A locally-zero groupoid of order n is determined by choosing, for each
unordered pair ``x < y``, whether ``{x, y}`` is a left-zero (L) or right-zero
(R) subsemigroup.  Those choices are packed into an int (bit ``i`` set = R on
pair ``i``), and the box product becomes xor on the packed bits.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import islice, permutations
from itertools import product as _cartesian
from math import comb
from typing import Callable, FrozenSet, Iterator, List, Optional, Tuple

import numpy as np

from .groupoid import (
    Groupoid,
    GroupoidError,
    all_groupoids,
    box,
    constant_groupoid,
    count_groupoids,
    is_idempotent,
    max_groupoid,
    min_groupoid,
    random_groupoid,
)

__all__ = [
    "SubtableKind",
    "PairMask",
    "CenterError",
    "pair_index",
    "pairs",
    "subtable_kind",
    "is_locally_zero",
    "to_mask",
    "from_mask",
    "mask_box",
    "enumerate_locally_zero",
    "enumerate_masks",
    "is_in_center_bruteforce",
    "is_in_center_sampled",
    "sampled_center_witness",
    "center_bruteforce",
    "center_witness",
    "are_isomorphic",
    "count_iso_classes",
    "iso_class_representatives",
    "permute_mask",
    "default_workers",
]

Product = Callable[[Groupoid, Groupoid], Groupoid]

BRUTEFORCE_MAX_ORDER = 3
ENUMERATE_MAX_PAIRS = 30
ISOMORPHISM_MAX_ORDER = 8
ISO_CLASSES_MAX_ORDER = 5

WORKERS_ENV = "ZBIN_WORKERS"


class CenterError(ValueError):
    pass


class SubtableKind(Enum):
    LEFT_ZERO = "L"
    RIGHT_ZERO = "R"
    NEITHER = "N"


def pair_index(x: int, y: int, n: int) -> int:
    """Position of the unordered pair ``{x, y}`` (``x < y``) in canonical order."""
    if x > y:
        x, y = y, x
    return x * n - x * (x + 1) // 2 + (y - x - 1)


@lru_cache(maxsize=None)
def pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    """All pairs ``x < y`` in canonical (pair-index) order."""
    return tuple((x, y) for x in range(n) for y in range(x + 1, n))


@dataclass(frozen=True, order=True)
class PairMask:
    """One L/R orientation per unordered pair, packed into ``bits``."""

    order: int
    bits: int

    def __post_init__(self):
        if self.order < 1:
            raise CenterError(f"order must be positive, got {self.order}")
        if not 0 <= self.bits < (1 << self.size):
            raise CenterError(f"mask bits {self.bits} do not fit {self.size} pairs")

    @property
    def size(self) -> int:
        return comb(self.order, 2)

    def __getitem__(self, i: int) -> SubtableKind:
        if not 0 <= i < self.size:
            raise IndexError(i)
        return SubtableKind.RIGHT_ZERO if self.bits >> i & 1 else SubtableKind.LEFT_ZERO

    def __str__(self) -> str:
        return "".join("R" if self.bits >> i & 1 else "L" for i in range(self.size))

    @classmethod
    def from_string(cls, n: int, text: str) -> "PairMask":
        if len(text) != comb(n, 2):
            raise CenterError(f"order {n} needs {comb(n, 2)} L/R flags, got {len(text)}")
        bits = 0
        for i, ch in enumerate(text):
            if ch == "R":
                bits |= 1 << i
            elif ch != "L":
                raise CenterError(f"bad mask character {ch!r} at position {i}")
        return cls(n, bits)

    @classmethod
    def all_left(cls, n: int) -> "PairMask":
        return cls(n, 0)

    @classmethod
    def all_right(cls, n: int) -> "PairMask":
        return cls(n, (1 << comb(n, 2)) - 1)


def subtable_kind(g: Groupoid, x: int, y: int) -> SubtableKind:
    if x == y:
        raise CenterError("subtable_kind needs two distinct elements")
    n = g.order
    if not (0 <= x < n and 0 <= y < n):
        raise GroupoidError(f"pair ({x},{y}) out of range for order {n}")
    xy = g.table[x * n + y]
    yx = g.table[y * n + x]
    if xy == x and yx == y:
        return SubtableKind.LEFT_ZERO
    if xy == y and yx == x:
        return SubtableKind.RIGHT_ZERO
    return SubtableKind.NEITHER


def is_locally_zero(g: Groupoid) -> bool:
    return is_idempotent(g) and all(
        subtable_kind(g, x, y) is not SubtableKind.NEITHER for x, y in pairs(g.order))


def to_mask(g: Groupoid) -> PairMask:
    if not is_idempotent(g):
        raise CenterError("not locally-zero: diagonal is not idempotent")
    bits = 0
    for i, (x, y) in enumerate(pairs(g.order)):
        kind = subtable_kind(g, x, y)
        if kind is SubtableKind.NEITHER:
            raise CenterError(f"not locally-zero: pair ({x},{y}) is neither L nor R")
        if kind is SubtableKind.RIGHT_ZERO:
            bits |= 1 << i
    return PairMask(g.order, bits)


def from_mask(m: PairMask) -> Groupoid:
    n = m.order
    table = [0] * (n * n)
    for x in range(n):
        table[x * n + x] = x
    for i, (x, y) in enumerate(pairs(n)):
        if m.bits >> i & 1:
            table[x * n + y], table[y * n + x] = y, x
        else:
            table[x * n + y], table[y * n + x] = x, y
    return Groupoid._trusted(n, tuple(table))


def mask_box(m1: PairMask, m2: PairMask) -> PairMask:
    """Box product in mask coordinates: L is the identity, R squares to L."""
    if m1.order != m2.order:
        raise CenterError(f"order mismatch: {m1.order} vs {m2.order}")
    return PairMask(m1.order, m1.bits ^ m2.bits)


def _enumerate_guard(n: int) -> None:
    if n < 1:
        raise CenterError(f"order must be positive, got {n}")
    if comb(n, 2) > ENUMERATE_MAX_PAIRS:
        raise CenterError(
            f"order {n} has {comb(n, 2)} pairs; enumeration is capped at {ENUMERATE_MAX_PAIRS}")


def enumerate_masks(n: int) -> Iterator[PairMask]:
    _enumerate_guard(n)
    for bits in range(1 << comb(n, 2)):
        yield PairMask(n, bits)


def enumerate_locally_zero(n: int) -> Iterator[Groupoid]:
    """All ``2**C(n,2)`` locally-zero groupoids, by ascending mask value."""
    for m in enumerate_masks(n):
        yield from_mask(m)


# --- brute-force center -----------------------------------------------------

def _probes(n: int) -> List[Groupoid]:
    # constants expose non-idempotence; min/max expose pairs outside {x, y}
    return [constant_groupoid(n, a) for a in range(n)] + [min_groupoid(n), max_groupoid(n)]


def center_witness(g: Groupoid, product: Product = box) -> Tuple[Optional[Groupoid], int]:
    """Scan Bin(X) for some ``h`` with ``g □ h != h □ g``.

    Probe tables go first, then every other table in lexicographic order.
    Returns ``(witness or None, number of partners tested)``.
    """
    n = g.order
    if n > BRUTEFORCE_MAX_ORDER:
        raise CenterError(
            f"brute-force center needs order <= {BRUTEFORCE_MAX_ORDER}, got {n}; "
            "use is_in_center_sampled")
    probes = _probes(n)
    seen = set()
    checked = 0
    for h in probes:
        if h in seen:
            continue
        seen.add(h)
        checked += 1
        if product(g, h) != product(h, g):
            return h, checked
    for h in all_groupoids(n):
        if h in seen:
            continue
        checked += 1
        if product(g, h) != product(h, g):
            return h, checked
    return None, checked


def is_in_center_bruteforce(g: Groupoid) -> bool:
    return center_witness(g)[0] is None


def sampled_center_witness(g: Groupoid, trials: int = 100, seed: int = 0,
                           product: Product = box) -> Tuple[Optional[Groupoid], int]:
    """Probe tables, then ``trials`` seeded uniform random tables.

    Returns ``(witness or None, number of partners tested)``.
    """
    if trials < 0:
        raise CenterError("trials must be non-negative")
    n = g.order
    checked = 0
    for h in _probes(n):
        checked += 1
        if product(g, h) != product(h, g):
            return h, checked
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        h = random_groupoid(n, rng)
        checked += 1
        if product(g, h) != product(h, g):
            return h, checked
    return None, checked


def is_in_center_sampled(g: Groupoid, trials: int = 100, seed: int = 0) -> bool:
    """Necessary-condition screen for centrality at any order.

    False is definitive.  True only means neither the probe tables nor
    ``trials`` seeded random tables produced a witness.
    """
    return sampled_center_witness(g, trials, seed)[0] is None


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise CenterError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def _scan_range(args) -> List[Tuple[int, ...]]:
    n, start, stop, product = args
    found = []
    for table in islice(_cartesian(range(n), repeat=n * n), start, stop):
        g = Groupoid._trusted(n, table)
        if center_witness(g, product)[0] is None:
            found.append(table)
    return found


def _center_bruteforce(n: int, product: Product, workers: int) -> FrozenSet[Groupoid]:
    if not 1 <= n <= BRUTEFORCE_MAX_ORDER:
        raise CenterError(f"brute-force center needs 1 <= order <= {BRUTEFORCE_MAX_ORDER}, got {n}")
    total = count_groupoids(n)
    if workers <= 1 or total < 1000:
        tables = _scan_range((n, 0, total, product))
    else:
        step = -(-total // workers)
        jobs = [(n, lo, min(lo + step, total), product) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            tables = [t for chunk in pool.map(_scan_range, jobs) for t in chunk]
    return frozenset(Groupoid._trusted(n, t) for t in tables)


@lru_cache(maxsize=None)
def _center_cached(n: int) -> FrozenSet[Groupoid]:
    return _center_bruteforce(n, box, default_workers())


def center_bruteforce(n: int, product: Product = box, workers: Optional[int] = None) -> FrozenSet[Groupoid]:
    """Every order-n groupoid commuting under ``product`` with all of Bin(X)."""
    if product is box and workers is None:
        return _center_cached(n)
    return _center_bruteforce(n, product, default_workers() if workers is None else workers)


# --- isomorphism ------------------------------------------------------------

def are_isomorphic(g: Groupoid, h: Groupoid) -> bool:
    """Search all ``n!`` relabelings for one carrying ``g`` onto ``h``."""
    n = g.order
    if h.order != n:
        raise CenterError(f"order mismatch: {n} vs {h.order}")
    if n > ISOMORPHISM_MAX_ORDER:
        raise CenterError(f"isomorphism search capped at order {ISOMORPHISM_MAX_ORDER}, got {n}")
    gt, ht = g.table, h.table
    cells = [(x, y, gt[x * n + y]) for x in range(n) for y in range(n)]
    for phi in permutations(range(n)):
        if all(phi[v] == ht[phi[x] * n + phi[y]] for x, y, v in cells):
            return True
    return False


@lru_cache(maxsize=None)
def _pair_permutations(n: int) -> Tuple[Tuple[int, ...], ...]:
    # for each relabeling, where each pair index lands
    out = []
    for phi in permutations(range(n)):
        out.append(tuple(pair_index(phi[x], phi[y], n) for x, y in pairs(n)))
    return tuple(out)


def permute_mask(m: PairMask, phi) -> PairMask:
    """Relabel elements by ``phi``.

    L and R are both symmetric in the two elements of a pair, so a pair's
    flag travels with it unchanged.
    """
    n = m.order
    bits = 0
    for i, (x, y) in enumerate(pairs(n)):
        if m.bits >> i & 1:
            bits |= 1 << pair_index(phi[x], phi[y], n)
    return PairMask(n, bits)


def iso_class_representatives(n: int) -> List[PairMask]:
    """The least mask of every orbit under relabeling, ascending."""
    if not 1 <= n <= ISO_CLASSES_MAX_ORDER:
        raise CenterError(f"orbit enumeration needs 1 <= order <= {ISO_CLASSES_MAX_ORDER}, got {n}")
    size = 1 << comb(n, 2)
    seen = bytearray(size)
    reps = []
    moves = _pair_permutations(n)
    for bits in range(size):
        if seen[bits]:
            continue
        reps.append(PairMask(n, bits))
        set_bits = [i for i in range(comb(n, 2)) if bits >> i & 1]
        for dest in moves:
            image = 0
            for i in set_bits:
                image |= 1 << dest[i]
            seen[image] = 1
    return reps


def count_iso_classes(n: int) -> int:
    return len(iso_class_representatives(n))
