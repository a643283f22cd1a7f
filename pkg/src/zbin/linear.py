"""Linear groupoids ``x * y = a x + b y + c`` over the integers mod m."""

from __future__ import annotations

from dataclasses import dataclass

from .groupoid import Groupoid

__all__ = ["LinearCoeffs", "LinearError", "to_table", "compose", "identity"]


class LinearError(ValueError):
    pass


@dataclass(frozen=True)
class LinearCoeffs:
    modulus: int
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.modulus < 1:
            raise LinearError(f"modulus must be >= 1, got {self.modulus}")
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not 0 <= v < self.modulus:
                raise LinearError(f"{name}={v} is not reduced mod {self.modulus}")

    @classmethod
    def reduced(cls, modulus: int, a: int, b: int, c: int) -> "LinearCoeffs":
        if modulus < 1:
            raise LinearError(f"modulus must be >= 1, got {modulus}")
        return cls(modulus, a % modulus, b % modulus, c % modulus)

    def triple(self):
        return (self.a, self.b, self.c)


def identity(m: int) -> LinearCoeffs:
    """The left-zero semigroup ``x * y = x`` as coefficients."""
    return LinearCoeffs.reduced(m, 1, 0, 0)


def to_table(p: LinearCoeffs) -> Groupoid:
    m, a, b, c = p.modulus, p.a, p.b, p.c
    return Groupoid._trusted(m, tuple((a * x + b * y + c) % m for x in range(m) for y in range(m)))


def compose(inner: LinearCoeffs, outer: LinearCoeffs) -> LinearCoeffs:
    """Coefficients of ``to_table(inner) □ to_table(outer)``.

    With inner ``(a, b, c)`` and outer ``(d, e, f)``:
    ``d(ax+by+c) + e(ay+bx+c) + f = (da+eb)x + (db+ea)y + (d+e)c + f``.
    """
    m = inner.modulus
    if outer.modulus != m:
        raise LinearError(f"modulus mismatch: {m} vs {outer.modulus}")
    a, b, c = inner.a, inner.b, inner.c
    d, e, f = outer.a, outer.b, outer.c
    return LinearCoeffs(m, (d * a + e * b) % m, (d * b + e * a) % m, ((d + e) * c + f) % m)
