import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from zbin.center import (
    PairMask,
    enumerate_masks,
    from_mask,
    is_locally_zero,
    mask_box,
    pairs,
    to_mask,
)
from zbin.groupoid import (
    Groupoid,
    box,
    has_orientation_property,
    left_zero,
    make_groupoid,
    right_zero,
)
from zbin.linear import LinearCoeffs, compose, to_table


@st.composite
def tables(draw, n=None, count=1):
    if n is None:
        n = draw(st.integers(1, 4))
    gs = [Groupoid(n, draw(st.lists(st.integers(0, n - 1), min_size=n * n, max_size=n * n)))
          for _ in range(count)]
    return gs


@st.composite
def op_tables(draw, count=2):
    n = draw(st.integers(1, 5))
    out = []
    for _ in range(count):
        t = [draw(st.sampled_from((x, y))) for x in range(n) for y in range(n)]
        out.append(Groupoid(n, t))
    return out


@st.composite
def masks(draw, count=2, max_order=12):
    n = draw(st.integers(1, max_order))
    k = n * (n - 1) // 2
    return [PairMask(n, draw(st.integers(0, (1 << k) - 1))) for _ in range(count)]


@st.composite
def linear(draw, count=2):
    m = draw(st.integers(1, 9))
    return [LinearCoeffs(m, *(draw(st.integers(0, m - 1)) for _ in range(3))) for _ in range(count)]


@given(tables(count=3))
def test_box_is_associative(gs):
    f, g, h = gs
    assert box(box(f, g), h) == box(f, box(g, h))


@given(tables())
def test_left_zero_is_two_sided_identity(gs):
    (g,) = gs
    lz = left_zero(g.order)
    assert box(lz, g) == g == box(g, lz)


@given(tables())
def test_make_round_trip(gs):
    (g,) = gs
    assert make_groupoid(g.order, list(g.table)) == g


@given(st.integers(1, 16))
def test_right_zero_involution(n):
    assert box(right_zero(n), right_zero(n)) == left_zero(n)


@given(op_tables())
def test_orientation_closed_under_box(gs):
    f, g = gs
    assert has_orientation_property(box(f, g))


@given(masks())
def test_mask_box_tracks_table_box(ms):
    m1, m2 = ms
    g = box(from_mask(m1), from_mask(m2))
    assert is_locally_zero(g)
    assert to_mask(g) == mask_box(m1, m2)


@given(masks(count=1))
def test_self_square_is_left_zero(ms):
    (m,) = ms
    assert box(from_mask(m), from_mask(m)) == left_zero(m.order)


@given(masks(count=1))
def test_locally_zero_pairs_swap(ms):
    (m,) = ms
    g = from_mask(m)
    for x, y in pairs(m.order):
        assert {g(x, y), g(y, x)} == {x, y}


@given(linear())
def test_compose_tracks_table_box(ps):
    p, q = ps
    assert to_table(compose(p, q)) == box(to_table(p), to_table(q))


@given(linear(count=3))
def test_compose_associative(ps):
    p, q, r = ps
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(st.permutations(range(5)), masks(count=1, max_order=5))
@settings(max_examples=50)
def test_locally_zero_is_relabelling_invariant(phi, ms):
    (m,) = ms
    n = m.order
    phi = [v for v in phi if v < n]
    g = from_mask(m)
    t = [0] * (n * n)
    for x in range(n):
        for y in range(n):
            t[phi[x] * n + phi[y]] = phi[g(x, y)]
    assert is_locally_zero(Groupoid(n, t))


def test_masks_form_an_elementary_abelian_group():
    for n in range(1, 5):
        ms = list(enumerate_masks(n))
        e = PairMask.all_left(n)
        for a in ms:
            assert mask_box(a, e) == a == mask_box(e, a)
            assert mask_box(a, a) == e
        for a, b, c in itertools.product(ms, repeat=3):
            assert mask_box(mask_box(a, b), c) == mask_box(a, mask_box(b, c))
