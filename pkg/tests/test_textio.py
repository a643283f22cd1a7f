import pytest

from zbin.center import PairMask, enumerate_locally_zero, enumerate_masks
from zbin.groupoid import Groupoid, all_groupoids, left_zero
from zbin.textio import (
    ParseError,
    inline_table,
    parse_mask,
    parse_table,
    parse_tables,
    render_mask,
    render_table,
    render_tables,
)


def test_render_exact():
    assert render_table(Groupoid(3, [0, 0, 2, 1, 1, 1, 0, 2, 2])) == "3\n0 0 2\n1 1 1\n0 2 2\n"
    assert inline_table(left_zero(2)) == "0 0 / 1 1"


def test_parse_ignores_comments_and_blanks():
    text = "# the example\n\n3\n0 0 2\n  # mid comment\n1 1 1\n\n0 2 2\n"
    assert parse_table(text) == Groupoid(3, [0, 0, 2, 1, 1, 1, 0, 2, 2])


@pytest.mark.parametrize("n", [1, 2])
def test_round_trip_all(n):
    for g in all_groupoids(n):
        assert parse_table(render_table(g)) == g


def test_round_trip_listed_tables(lz_eight):
    text = render_tables(lz_eight)
    assert parse_tables(text) == lz_eight
    assert set(parse_tables(render_tables(enumerate_locally_zero(3)))) == set(lz_eight)


@pytest.mark.parametrize("text, lineno", [
    ("2\n0 0\n1 2\n", 3),           # out of range
    ("2\n0 0\n1\n", 3),             # short row
    ("2\n0 0\n", 2),                # missing row
    ("2\n0 x\n1 1\n", 2),           # not an integer
    ("0\n", 1),                     # bad order
    ("# only\n2 2\n0 0\n1 1\n", 2),  # header with two ints
    ("2\n0 0\n1 1\n5\n", 4),        # trailing content
])
def test_parse_errors_carry_line_numbers(text, lineno):
    with pytest.raises(ParseError) as err:
        parse_table(text)
    assert err.value.lineno == lineno
    assert f"line {lineno}" in str(err.value)


def test_empty():
    with pytest.raises(ParseError):
        parse_table("\n# nothing\n")


def test_mask_text():
    m = parse_mask("3:LRL")
    assert m == PairMask(3, 0b010)
    assert render_mask(m) == "3:LRL"
    assert render_mask(PairMask(1, 0)) == "1:"
    for n in range(1, 5):
        for m in enumerate_masks(n):
            assert parse_mask(render_mask(m)) == m


@pytest.mark.parametrize("text", ["LRL", "3:LR", "3:LRQ", "x:L", "0:"])
def test_mask_errors(text):
    with pytest.raises(ParseError):
        parse_mask(text)
