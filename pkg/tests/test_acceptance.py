"""Acceptance criteria, one test per criterion.

A per-criterion PASS/FAIL summary is printed at the end of the pytest run.
"""

import time
from math import comb

import pytest

from zbin import center as C
from zbin.cli import main
from zbin.groupoid import (
    Groupoid,
    all_groupoids,
    box,
    extract_digraph,
    has_orientation_property,
    is_associative,
    is_travel_groupoid,
    left_zero,
    orientation_groupoids,
    right_zero,
)
from zbin.linear import LinearCoeffs, compose, to_table
from zbin.textio import parse_tables, render_table
from zbin.verify import run_check


def cli(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.criterion(1)
def test_center_order_three(capsys, lz_eight):
    start = time.perf_counter()
    fresh = C.center_bruteforce(3, workers=C.default_workers())
    elapsed = time.perf_counter() - start
    assert elapsed < 10.0

    scan = run_check("T3.1", 3)
    assert scan.cases_checked == 3 ** 9 == 19683

    code, out, _ = cli(capsys, "center", "bruteforce", "3")
    assert code == 0
    printed = set(parse_tables(out))
    assert printed == set(fresh)
    code, out, _ = cli(capsys, "center", "enumerate", "3")
    enumerated = set(parse_tables(out))

    assert len(printed) == 8, (
        f"brute force finds {len(printed)} central tables: "
        f"{sorted(str(C.to_mask(g)) for g in printed)}; counterexample {scan.counterexample}")
    assert printed == set(lz_eight)
    assert printed == enumerated


@pytest.mark.criterion(2)
def test_center_order_two():
    center = C.center_bruteforce(2)
    assert center == {left_zero(2), right_zero(2)}
    assert len(center) == 2 == 2 ** comb(2, 2)
    assert run_check("T3.1", 2).cases_checked == 16


@pytest.mark.criterion(3)
def test_box_associativity_and_identity():
    r = run_check("T1.1-assoc", 2, "exhaustive")
    assert r.passed and r.cases_checked == 16 ** 3 == 4096
    r = run_check("T1.1-assoc", 3, "sampled", budget=100_000, seed=2024)
    assert r.passed and r.cases_checked >= 100_000
    r = run_check("T1.1-identity", 2, "exhaustive")
    assert r.passed and r.cases_checked == 16
    r = run_check("T1.1-identity", 3, "sampled", budget=100_000, seed=2024)
    assert r.passed and r.cases_checked >= 100_000


@pytest.mark.criterion(4)
def test_mask_homomorphism():
    r = run_check("C3.3", 4, "exhaustive")
    assert r.passed and r.cases_checked == 64 * 64
    r = run_check("C3.3", 16, "sampled", budget=10_000, seed=2024)
    assert r.passed and r.cases_checked >= 10_000
    for n in range(1, 6):
        for m in C.enumerate_masks(n):
            assert C.mask_box(m, m) == C.PairMask.all_left(n)
        assert run_check("P3.6", n).passed


@pytest.mark.criterion(5)
def test_associative_locally_zero():
    for n, total in ((3, 8), (4, 64), (5, 1024)):
        assoc = [m for m in C.enumerate_masks(n) if is_associative(C.from_mask(m))]
        assert len(list(C.enumerate_masks(n))) == total
        assert assoc == [C.PairMask.all_left(n), C.PairMask.all_right(n)]
        assert run_check("P3.5", n).passed


@pytest.mark.criterion(6)
def test_commutative_box_center():
    r = run_check("P2.7", 2)
    assert r.passed and r.cases_checked == 8 * 2
    r = run_check("P2.7", 3)
    assert r.passed and r.cases_checked == 729 * 8


@pytest.mark.criterion(7)
def test_linear():
    cs5 = [LinearCoeffs(5, a, b, c) for a in range(5) for b in range(5) for c in range(5)]
    tables = {p: to_table(p) for p in cs5}
    pairs = 0
    for p in cs5:
        for q in cs5:
            assert to_table(compose(p, q)) == box(tables[p], tables[q])
            pairs += 1
    assert pairs == 15625

    cs3 = [LinearCoeffs(3, a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    triples = 0
    for p in cs3:
        for q in cs3:
            pq = compose(p, q)
            for r in cs3:
                assert compose(pq, r) == compose(p, compose(q, r))
                triples += 1
    assert triples == 19683

    rz = LinearCoeffs(3, 0, 1, 0)
    assert compose(rz, rz) == LinearCoeffs(3, 1, 0, 0)


@pytest.mark.criterion(8)
def test_iso_class_counts():
    assert [C.count_iso_classes(n) for n in range(1, 6)] == [1, 2, 4, 11, 34]
    reps = []
    for g in C.enumerate_locally_zero(3):
        if not any(C.are_isomorphic(g, h) for h in reps):
            reps.append(g)
    assert len(reps) == 4


@pytest.mark.criterion(9)
def test_example_golden(capsys, tmp_path):
    path = tmp_path / "example.txt"
    path.write_text(render_table(Groupoid(3, [0, 0, 2, 1, 1, 1, 0, 2, 2])))
    code, out, _ = cli(capsys, "classify", str(path))
    assert code == 0
    lines = out.splitlines()
    assert "locally-zero: yes" in lines
    assert any(ln.startswith("associative: no (witness 0 1 2") for ln in lines)
    assert "center: yes (brute force)" in lines, out


@pytest.mark.criterion(10)
def test_orientation_and_travel():
    ops = list(orientation_groupoids(3))
    assert len(ops) == 64
    assert set(ops) == {g for g in all_groupoids(3) if has_orientation_property(g)}
    pairs = 0
    for f in ops:
        for g in ops:
            assert has_orientation_property(box(f, g))
            pairs += 1
    assert pairs == 4096
    travel = [g for g in ops if is_travel_groupoid(g)]
    assert travel
    for g in travel:
        d = extract_digraph(g)
        assert d.is_symmetric() and d.is_complete()


@pytest.mark.criterion(11)
def test_swapped_box_is_caught():
    def swapped(first, second):
        return box(second, first)

    for n in (2, 3):
        r = run_check("P2.7", n, product=swapped)
        assert not r.passed, f"P2.7 still passes at n={n} with operands swapped"
        assert r.counterexample is not None
