"""The ten acceptance criteria, one test each, at their stated tolerances."""

import subprocess
import sys
import time

import pytest

from fibtri import golden
from fibtri.cli import OutputFormat, parse_csv_rows, render_rows
from fibtri.delannoy import count_restricted_delannoy, enumerate_restricted_delannoy
from fibtri.fibfacts import even_partition_sum, fib, odd_partition_sum
from fibtri.identities import (
    check_corollary3,
    check_corollary4,
    check_knight_moves,
    check_operators,
    check_theorem,
    knight_move,
    se_difference_table,
)
from fibtri.polyfit import diagonal_polynomial
from fibtri.triangles import (
    check_even_oracles,
    check_odd_oracles,
    even_lookup,
    even_table,
    odd_lookup_prime,
    odd_table,
)
from fibtri.verify import run_verification


def _clean(checks):
    return {c.id: [str(x) for x in c.counterexamples[:3]] for c in checks if not c.passed}


def test_criterion_01_even_partition_formula():
    start = time.perf_counter()
    tbl = even_table(300)
    bad = [t for t in range(301) if even_partition_sum(tbl, t) != fib(2 * t + 2)]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert even_partition_sum(tbl, 5) == fib(12) == 144
    assert even_partition_sum(tbl, 6) == fib(14) == 377
    assert elapsed < 5.0


def test_criterion_02_odd_partition_formula():
    tbl = odd_table(300)
    assert [t for t in range(301) if odd_partition_sum(tbl, t) != fib(2 * t + 1)] == []
    assert odd_partition_sum(tbl, 5) == fib(11) == 89
    assert odd_partition_sum(tbl, 6) == fib(13) == 233


def test_criterion_03_golden_rows():
    even, odd = even_table(12), odd_table(9)
    assert even.rows == golden.EVEN_ROWS
    assert odd.rows == golden.ODD_ROWS
    assert even.rows[12] == (1, 12, 75, 313, 943, 2062, 2965)
    assert odd.rows[9] == (1, 8, 34, 93, 162, 117, 41, 9, 1)


def test_criterion_04_oracle_triple_agreement():
    start = time.perf_counter()
    checks = [check_even_oracles(even_table(100)), check_odd_oracles(odd_table(100))]
    elapsed = time.perf_counter() - start
    assert _clean(checks) == {}
    assert checks[0].checked == sum(t // 2 + 1 for t in range(101))
    assert checks[1].checked == 1 + sum(range(1, 101))
    assert elapsed < 10.0


def test_criterion_05_theorem_and_knight_moves():
    even, odd = even_table(100), odd_table(101)
    checks = check_theorem(even, odd, 100)
    assert [c.id for c in checks] == ["T1", "T2", "T3", "T4", "T5"]
    assert _clean(checks + [check_knight_moves(even, odd, 100)]) == {}
    # the widened window reaches below i = 0 and past the row middle
    assert checks[0].checked == sum(t + 7 for t in range(1, 101))  # i from -3 to t+3
    assert [knight_move(odd, i) for i in range(1, 6)] == [2, 7, 29, 130, 611]
    assert [even_lookup(even, i, 2 * i) for i in range(1, 6)] == [2, 7, 29, 130, 611]


def test_criterion_06_second_differences_and_summations():
    even, odd = even_table(100), odd_table(101)
    c3, c4 = check_corollary3(odd, 100), check_corollary4(even, odd, 100)
    assert {c.id for c in c3} == {"C3a", "C3b", "Na", "N'a", "Nb", "N'b"}
    assert {c.id for c in c4} >= {"C4a", "C4b"}
    assert _clean(c3 + c4) == {}
    assert all(c.checked > 0 for c in c3 + c4)


PUBLISHED = [("even", "d", 1), ("even", "d", 3)] + [
    ("odd", fam, i) for fam in ("d'", "d''") for i in range(4)
]


def test_criterion_07_polynomial_regression():
    even, odd = even_table(100), odd_table(100)
    fits = {}
    for kind, fam, i in PUBLISHED + [("even", "d", 0), ("even", "d", 2)]:
        fits[(kind, fam, i)] = diagonal_polynomial(kind, fam, i, 100, table=even if kind == "even" else odd)
    for key in PUBLISHED:
        assert fits[key].coeffs == golden.PRINTED_POLYNOMIALS[key][0], key
    assert fits[("even", "d", 2)].coeffs == (-3, 1, 1)
    assert all(p.degree == key[2] and p.is_monic for key, p in fits.items())
    assert fits[("odd", "d''", 2)].t_min == 6

    report = run_verification(100, 12)
    assert report.suite("POLY").passed
    assert any("printed d_2" in n and "C(t,2)+C(t,1)-3" in n for n in report.notes)


def test_criterion_08_delannoy():
    assert all(count_restricted_delannoy(n) == enumerate_restricted_delannoy(n) for n in range(7))
    even = even_table(25)
    assert [count_restricted_delannoy(n) for n in range(13)] == [even_lookup(even, n, 2 * n + 1) for n in range(13)]
    assert [count_restricted_delannoy(n) for n in range(6)] == [1, 3, 12, 53, 247, 1192]
    assert [count_restricted_delannoy(n, restricted=False) for n in range(5)] == [1, 3, 13, 63, 321]


def test_criterion_09_difference_table_and_operators():
    odd, even = odd_table(52), even_table(52)
    assert se_difference_table(odd, 9)[9] == [1, 7, 27, 67, 102, 40, 9, 1, 0]
    checks = {c.id: c for c in check_operators(even, odd, i_max=5, t_max=50)}
    assert checks["OP:Ed''=Dd"].passed and checks["OP:Ed''=Dd"].checked == 6 * 51
    assert checks["OP:d=Dd'"].passed
    # d_i = Delta d'_{i+1} restates T3 and inherits its range t >= 2i+1; below it the
    # two sides differ on exactly i <= t <= 2i whatever extension of d is used
    p = lambda i, t: odd_lookup_prime(odd, i, t)  # noqa: E731
    off = {(i, t) for i in range(6) for t in range(51) if even_lookup(even, i, t) != p(i + 1, t + 1) - p(i + 1, t)}
    assert off == {(i, t) for i in range(6) for t in range(i, 2 * i + 1)}


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "fibtri", *argv], capture_output=True, check=True).stdout


def test_criterion_10_csv_round_trip_and_bfile():
    for kind, build in (("even", even_table), ("odd", odd_table)):
        text = _cli("triangle", "--kind", kind, "-t", "60", "--format", "csv").decode()
        assert tuple(map(tuple, parse_csv_rows(text))) == build(60).rows
        assert text == render_rows(kind, build(60).rows, OutputFormat.CSV)
        first = _cli("triangle", "--kind", kind, "-t", "60", "--format", "bfile")
        second = _cli("triangle", "--kind", kind, "-t", "60", "--format", "bfile")
        assert first == second
        lines = first.decode("ascii").splitlines()
        assert lines[0] == "1 1" and all(line.split()[0] == str(k) for k, line in enumerate(lines, 1))
