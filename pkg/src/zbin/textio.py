"""Plain-text formats for Cayley tables and pair masks.

Table text::

    # comment lines and blank lines are ignored
    3
    0 0 2
    1 1 1
    0 2 2

Mask text is ``n:`` followed by one L/R flag per pair, e.g. ``3:LRL``.
Letter names map to indices in order: a=0, b=1, c=2, ...
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator, List, Tuple

from .center import CenterError, PairMask
from .groupoid import Groupoid


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _content_lines(text: str) -> Iterator[Tuple[int, str]]:
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield lineno, stripped


def _ints(lineno: int, line: str) -> List[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {line!r}") from None


def _read_table(lines: Iterator[Tuple[int, str]], lineno: int, header: str) -> Groupoid:
    head = _ints(lineno, header)
    if len(head) != 1 or head[0] < 1:
        raise ParseError(lineno, f"expected a positive order, got {header!r}")
    n = head[0]
    entries: List[int] = []
    last = lineno
    for r in range(n):
        try:
            last, line = next(lines)
        except StopIteration:
            raise ParseError(last, f"expected {n} rows, found {r}") from None
        row = _ints(last, line)
        if len(row) != n:
            raise ParseError(last, f"row has {len(row)} entries, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise ParseError(last, f"entry {v} out of range [0,{n})")
        entries.extend(row)
    return Groupoid(n, entries)


def parse_tables(text: str) -> List[Groupoid]:
    """Every table in ``text``, back to back."""
    lines = _content_lines(text)
    out = []
    for lineno, header in lines:
        out.append(_read_table(lines, lineno, header))
    return out


def parse_table(text: str) -> Groupoid:
    lines = _content_lines(text)
    try:
        lineno, header = next(lines)
    except StopIteration:
        raise ParseError(1, "empty table file") from None
    g = _read_table(lines, lineno, header)
    extra = next(lines, None)
    if extra is not None:
        raise ParseError(extra[0], "unexpected content after table")
    return g


def render_table(g: Groupoid) -> str:
    rows = "\n".join(" ".join(map(str, row)) for row in g.rows())
    return f"{g.order}\n{rows}\n"


def render_tables(gs: Iterable[Groupoid]) -> str:
    return "\n".join(render_table(g) for g in gs)


def inline_table(g: Groupoid) -> str:
    """One-line form, rows separated by ``/``."""
    return " / ".join(" ".join(map(str, row)) for row in g.rows())


def parse_mask(text: str) -> PairMask:
    text = text.strip()
    head, sep, flags = text.partition(":")
    if not sep:
        raise ParseError(1, f"mask must look like 'n:LR...', got {text!r}")
    try:
        n = int(head)
    except ValueError:
        raise ParseError(1, f"bad order {head!r}") from None
    if n < 1:
        raise ParseError(1, f"order must be positive, got {n}")
    if len(flags) != comb(n, 2):
        raise ParseError(1, f"order {n} needs {comb(n, 2)} flags, got {len(flags)}")
    try:
        return PairMask.from_string(n, flags)
    except CenterError as e:
        raise ParseError(1, str(e)) from None


def render_mask(m: PairMask) -> str:
    return f"{m.order}:{m}"
