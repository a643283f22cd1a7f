"""Finite groupoids as flat Cayley tables, and the box product on Bin(X).

Elements of an order-n groupoid are the integers ``0..n-1``; the entry for
``x * y`` lives at position ``x*n + y`` of the table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from typing import Iterable, Iterator, Optional, Sequence, Tuple

__all__ = [
    "Groupoid",
    "DigraphEdges",
    "GroupoidError",
    "make_groupoid",
    "apply",
    "box",
    "left_zero",
    "right_zero",
    "constant_groupoid",
    "min_groupoid",
    "max_groupoid",
    "is_idempotent",
    "is_commutative",
    "is_associative",
    "associativity_witness",
    "is_left_zero",
    "is_right_zero",
    "equal",
    "has_orientation_property",
    "is_travel_groupoid",
    "extract_digraph",
    "all_groupoids",
    "count_groupoids",
    "orientation_groupoids",
    "random_groupoid",
]


class GroupoidError(ValueError):
    """Raised for malformed tables and out-of-range elements."""


class Groupoid:
    """An immutable order-n Cayley table."""

    __slots__ = ("order", "table")

    order: int
    table: Tuple[int, ...]

    def __init__(self, order: int, table: Iterable[int]):
        table = tuple(table)
        if order < 1:
            raise GroupoidError(f"order must be positive, got {order}")
        if len(table) != order * order:
            raise GroupoidError(
                f"order {order} needs {order * order} entries, got {len(table)}")
        for pos, v in enumerate(table):
            if not 0 <= v < order:
                raise GroupoidError(
                    f"entry {v} at ({pos // order},{pos % order}) is out of range [0,{order})")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "table", table)

    @classmethod
    def _trusted(cls, order: int, table: Tuple[int, ...]) -> "Groupoid":
        # skips validation; callers guarantee shape and range
        g = object.__new__(cls)
        object.__setattr__(g, "order", order)
        object.__setattr__(g, "table", table)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Groupoid is immutable")

    def __call__(self, x: int, y: int) -> int:
        return self.table[x * self.order + y]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Groupoid):
            return NotImplemented
        return self.order == other.order and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.order, self.table))

    def __lt__(self, other: "Groupoid") -> bool:
        return (self.order, self.table) < (other.order, other.table)

    def __reduce__(self):
        return (Groupoid, (self.order, self.table))

    def rows(self) -> list:
        n = self.order
        return [list(self.table[i * n:(i + 1) * n]) for i in range(n)]

    def __repr__(self) -> str:
        return f"Groupoid({self.order}, {list(self.table)})"


@dataclass(frozen=True)
class DigraphEdges:
    order: int
    edges: frozenset

    def is_symmetric(self) -> bool:
        return all((v, u) in self.edges for u, v in self.edges)

    def is_complete(self) -> bool:
        return len(self.edges) == self.order * (self.order - 1)


def make_groupoid(n: int, entries: Sequence[int]) -> Groupoid:
    return Groupoid(n, entries)


def _check_element(g: Groupoid, x: int) -> None:
    if not 0 <= x < g.order:
        raise GroupoidError(f"element {x} out of range for order {g.order}")


def apply(g: Groupoid, x: int, y: int) -> int:
    """Evaluate ``x * y`` in ``g``."""
    _check_element(g, x)
    _check_element(g, y)
    return g.table[x * g.order + y]


@lru_cache(maxsize=None)
def _pair_positions(n: int) -> Tuple[Tuple[int, int], ...]:
    # (position of x*y, position of y*x) for every cell in row-major order
    return tuple((x * n + y, y * n + x) for x in range(n) for y in range(n))


def box(first: Groupoid, second: Groupoid) -> Groupoid:
    """The product ``first □ second``: ``x □ y = (x first y) second (y first x)``.

    ``first`` is the inner operation and ``second`` the outer one.
    """
    n = first.order
    if second.order != n:
        raise GroupoidError(f"order mismatch: {n} vs {second.order}")
    f = first.table
    s = second.table
    return Groupoid._trusted(n, tuple(s[f[i] * n + f[j]] for i, j in _pair_positions(n)))


def left_zero(n: int) -> Groupoid:
    return Groupoid(n, (x for x in range(n) for _ in range(n)))


def right_zero(n: int) -> Groupoid:
    return Groupoid(n, (y for _ in range(n) for y in range(n)))


def constant_groupoid(n: int, a: int) -> Groupoid:
    if not 0 <= a < n:
        raise GroupoidError(f"constant {a} out of range for order {n}")
    return Groupoid(n, (a,) * (n * n))


def min_groupoid(n: int) -> Groupoid:
    return Groupoid(n, (min(x, y) for x in range(n) for y in range(n)))


def max_groupoid(n: int) -> Groupoid:
    return Groupoid(n, (max(x, y) for x in range(n) for y in range(n)))


def is_idempotent(g: Groupoid) -> bool:
    n = g.order
    return all(g.table[x * n + x] == x for x in range(n))


def is_commutative(g: Groupoid) -> bool:
    t = g.table
    return all(t[i] == t[j] for i, j in _pair_positions(g.order))


def associativity_witness(g: Groupoid) -> Optional[Tuple[int, int, int]]:
    """First triple ``(x, y, z)`` in lexicographic order with
    ``(xy)z != x(yz)``, or None for a semigroup."""
    n = g.order
    t = g.table
    for x, y, z in _cartesian(range(n), repeat=3):
        if t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]:
            return (x, y, z)
    return None


def is_associative(g: Groupoid) -> bool:
    return associativity_witness(g) is None


def is_left_zero(g: Groupoid) -> bool:
    return g.table == left_zero(g.order).table


def is_right_zero(g: Groupoid) -> bool:
    return g.table == right_zero(g.order).table


def equal(g: Groupoid, h: Groupoid) -> bool:
    if g.order != h.order:
        raise GroupoidError(f"order mismatch: {g.order} vs {h.order}")
    return g.table == h.table


def has_orientation_property(g: Groupoid) -> bool:
    n = g.order
    t = g.table
    return all(t[x * n + y] in (x, y) for x in range(n) for y in range(n))


def is_travel_groupoid(g: Groupoid) -> bool:
    """Check ``(u*v)*u = u`` and ``(u*v)*v = u  =>  u = v`` for all pairs."""
    n = g.order
    t = g.table
    for u in range(n):
        for v in range(n):
            w = t[u * n + v]
            if t[w * n + u] != u:
                return False
            if t[w * n + v] == u and u != v:
                return False
    return True


def extract_digraph(g: Groupoid) -> DigraphEdges:
    """Edges ``(u, v)``, ``u != v``, with ``u * v = v``.

    Only meaningful for groupoids with the orientation property.
    """
    if not has_orientation_property(g):
        raise GroupoidError("digraph extraction needs the orientation property")
    n = g.order
    edges = frozenset((u, v) for u in range(n) for v in range(n)
                      if u != v and g.table[u * n + v] == v)
    return DigraphEdges(n, edges)


def count_groupoids(n: int) -> int:
    return n ** (n * n)


def all_groupoids(n: int) -> Iterator[Groupoid]:
    """Every groupoid of order ``n`` in lexicographic table order."""
    for table in _cartesian(range(n), repeat=n * n):
        yield Groupoid._trusted(n, table)


def orientation_groupoids(n: int) -> Iterator[Groupoid]:
    """Every groupoid with the orientation property; ``2**(n(n-1))`` of them."""
    off = [(x, y) for x in range(n) for y in range(n) if x != y]
    for choice in _cartesian((0, 1), repeat=len(off)):
        table = [0] * (n * n)
        for x in range(n):
            table[x * n + x] = x
        for (x, y), c in zip(off, choice):
            table[x * n + y] = y if c else x
        yield Groupoid._trusted(n, tuple(table))


def random_groupoid(n: int, rng) -> Groupoid:
    """Uniform random table; ``rng`` is a numpy Generator."""
    return Groupoid._trusted(n, tuple(rng.integers(0, n, size=n * n).tolist()))
