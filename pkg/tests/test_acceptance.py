"""Acceptance criteria. Each test prints one PASS/FAIL line (see conftest)."""
import csv
import io
import itertools
import json
import os
import random
import subprocess
import sys
import time
from pathlib import Path

import numpy as np
import pytest

from ornated import (
    build,
    central_cluster,
    degree_sequence,
    degrees,
    generalized_kyle,
    kyle,
    parity_split,
    recover,
    relative_degrees,
    underlying_matrix,
)
from ornated.cli import main
from ornated.laws import PARTIAL_COMMUTATIVE_ORDERS
from oracles import brute_degrees

SRC = str(Path(__file__).resolve().parents[1] / "src")

# Per-entry table of the Kyle graph O_17(1,3,5,1,2,8): columns a_1..a_6, then d(v_i).
PAPER_TABLE = [
    [1, 3, 5, 1, 2, 8, 20],
    [2, 4, 6, 2, 3, 9, 26],
    [2, 5, 7, 2, 4, 10, 30],
    [2, 6, 8, 2, 4, 11, 33],
    [2, 6, 9, 2, 4, 12, 35],
    [2, 6, 10, 2, 4, 13, 37],
    [2, 6, 10, 2, 4, 14, 38],
    [2, 6, 10, 2, 4, 15, 39],
    [2, 6, 10, 2, 4, 16, 40],
    [2, 6, 10, 2, 4, 15, 39],
    [2, 6, 10, 2, 4, 14, 38],
    [2, 6, 10, 2, 4, 13, 37],
    [2, 6, 9, 2, 4, 12, 35],
    [2, 6, 8, 2, 4, 11, 33],
    [2, 5, 7, 2, 4, 10, 30],
    [2, 4, 6, 2, 3, 9, 26],
    [1, 3, 5, 1, 2, 8, 20],
]

FAMILY = [s for length in range(1, 5) for s in itertools.product(range(1, 6), repeat=length)]


def test_family_size():
    assert len(FAMILY) == 780


@pytest.mark.criterion("1 paper table reproduction (17x6 per-entry values + totals, exact, < 1 s)")
@pytest.mark.usefixtures("criterion")
def test_c1_paper_table(capsys):
    start = time.perf_counter()
    status = main(["degrees", "--string", "1,3,5,1,2,8", "--n", "17", "--format", "csv"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert status == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["v_i", "a_1", "a_2", "a_3", "a_4", "a_5", "a_6", "d(v_i)"]
    assert [r[0] for r in rows[1:]] == [f"v{i}" for i in range(1, 18)]
    assert [[int(x) for x in r[1:]] for r in rows[1:]] == PAPER_TABLE
    assert elapsed < 1.0


@pytest.mark.criterion("2 Kyle extremals over 780 strings (exact, < 30 s)")
@pytest.mark.usefixtures("criterion")
def test_c2_kyle_extremals():
    start = time.perf_counter()
    for s in FAMILY:
        g = kyle(s)
        k, total = max(s), sum(s)
        d = [int(x) for x in g.total_degrees]
        top, low = max(d), min(d)
        assert top == 2 * total
        assert [i for i, x in enumerate(d, 1) if x == top] == [k + 1]
        assert low == total
        assert [i for i, x in enumerate(d, 1) if x == low] == [1, g.n]
        assert top == 2 * low
    assert time.perf_counter() - start < 30


@pytest.mark.criterion("3 central-cluster law, r in 0..5 (exact, < 60 s)")
@pytest.mark.usefixtures("criterion")
def test_c3_central_cluster():
    start = time.perf_counter()
    for s in FAMILY:
        k = max(s)
        for r in range(6):
            n = 2 * k + 1 + r
            g = build(n, s)
            d = g.total_degrees
            block = tuple(range(k + 1, n - k + 1))
            assert tuple(int(i) + 1 for i in np.flatnonzero(d == d.max())) == block
            assert central_cluster(g) == block
            assert len(block) == r + 1
    assert time.perf_counter() - start < 60


@pytest.mark.criterion("4 closed form vs brute-force enumeration, 36413 cases (exact)")
@pytest.mark.usefixtures("criterion")
def test_c4_closed_form_vs_brute_force():
    # exhaustive rather than sampled: n <= 13, entries 0..6, length 0..4
    cases = 0
    for n in range(1, 14):
        for length in range(5):
            for s in itertools.product(range(7), repeat=length):
                assert list(degree_sequence(n, s).totals) == brute_degrees(n, s), (n, s)
                cases += 1
    assert cases >= 10_000


@pytest.mark.criterion("5 construction laws on 1000 random strings per law, n <= 13 (exact)")
@pytest.mark.usefixtures("criterion")
def test_c5_law_suite():
    rng = random.Random(20261018)
    for _ in range(1000):
        n = rng.randint(1, 13)
        a1, a2, a3, a4 = (rng.randint(0, 8) for _ in range(4))

        whole = build(n, (a1, a2, a3))
        assert whole == build(n, (a1, 0, 0)) + build(n, (0, a2, a3))
        assert whole == build(n, (0, a2, 0)) + build(n, (a1, 0, a3))
        assert whole == build(n, (0, 0, a3)) + build(n, (a1, a2, 0))
        assert whole == build(n, (a1, 0, 0)) + build(n, (0, a2, 0)) + build(n, (0, 0, a3))

        four = (a1, a2, a3, a4)
        ref = build(n, four)
        for order in PARTIAL_COMMUTATIVE_ORDERS:
            assert build(n, tuple(four[p] for p in order)) == ref

        length = rng.randint(0, 6)
        s = [rng.choice([0, 0, rng.randint(1, 8)]) for _ in range(length)]
        reduced = [a for a in s if a]
        assert np.array_equal(underlying_matrix(build(n, s)), underlying_matrix(build(n, reduced)))


@pytest.mark.criterion("6 recovery round trip, n in {2k+1, 2k+3} (exact, < 60 s)")
@pytest.mark.usefixtures("criterion")
def test_c6_round_trip():
    start = time.perf_counter()
    for s in FAMILY:
        k = max(s)
        F, B = parity_split(s)
        for n in (2 * k + 1, 2 * k + 3):
            arcs = build(n, s).arcs
            r = recover(arcs)
            assert sorted(r.forward) == sorted(F)
            assert sorted(r.backward) == sorted(B)
            assert np.array_equal(build(n, r.canonical).arcs, arcs)
            assert r.kyle == (n == 2 * k + 1)
    assert time.perf_counter() - start < 60


@pytest.mark.criterion("7 relative degrees equal (even count, odd count) (exact)")
@pytest.mark.usefixtures("criterion")
def test_c7_relative_degrees():
    for s in FAMILY:
        k = max(s)
        t, m = len(s[0::2]), len(s[1::2])
        for n in (2 * k + 1, 2 * k + 3):
            g = build(n, s)
            assert all(relative_degrees(g, i) == (m, t) for i in range(1, n))


@pytest.mark.criterion("8 generalised Kyle graphs on 200 random string lists (exact)")
@pytest.mark.usefixtures("criterion")
def test_c8_generalized_kyle():
    rng = random.Random(4)
    for _ in range(200):
        strings = [
            tuple(rng.randint(0, 4) for _ in range(rng.randint(1, 4)))
            for _ in range(rng.randint(1, 3))
        ]
        g = generalized_kyle(strings)
        n = 2 * max(max(s) for s in strings) + 1
        assert g.n == n
        for i in range(1, n + 1):
            assert degrees(g, i)[2] == sum(brute_degrees(n, s)[i - 1] for s in strings)
        assert int(g.total_degrees.max()) == sum(2 * sum(s) for s in strings)


def _scan(workers):
    proc = subprocess.run(
        [sys.executable, "-m", "ornated", "scan", "necessity", "--max-k", "4", "--max-l", "3",
         "--workers", str(workers)],
        capture_output=True, env={**os.environ, "PYTHONPATH": SRC}, check=True,
    )
    return proc.stdout


@pytest.mark.criterion("9 necessity scan: 84 reports, byte-identical across runs/workers, < 2 min")
@pytest.mark.usefixtures("criterion")
def test_c9_necessity_scan():
    start = time.perf_counter()
    first = _scan(1)
    elapsed = time.perf_counter() - start
    assert elapsed < 120
    assert _scan(1) == first
    assert _scan(4) == first

    lines = first.decode().splitlines()
    reports = [json.loads(line) for line in lines[:-1]]
    assert len(reports) == 4 + 16 + 64
    assert all(r["report"]["is_kyle_actual"] for r in reports)
    summary = json.loads(lines[-1])["summary"]
    assert summary["strings"] == 84
    table = summary["conditions"]
    for name in ("cond_i", "cond_ii", "cond_iii", "cond_iv", "cond_v", "is_symmetric", "agreement"):
        assert table[name]["holds"] + table[name]["fails"] == 84
    assert table["is_kyle_actual"]["verdict"] == "all"
    print("\nper-condition tally:", json.dumps(table))
