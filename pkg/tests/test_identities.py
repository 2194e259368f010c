import pytest
from hypothesis import given, strategies as st

from fibtri import golden
from fibtri.identities import (
    check_corollary3,
    check_corollary4,
    check_knight_moves,
    check_operators,
    check_theorem,
    delta,
    knight_move,
    printed_corollary3_forms,
    se_difference_table,
    shift,
)
from fibtri.fibfacts import fib
from fibtri.triangles import even_lookup, even_table, odd_lookup_double, odd_lookup_prime, odd_table

EVEN = even_table(62)
ODD = odd_table(62)


def d(i, t):
    return even_lookup(EVEN, i, t)


def p(i, t):
    return odd_lookup_prime(ODD, i, t)


def q(i, t):
    return odd_lookup_double(ODD, i, t)


def _failures(checks):
    return {c.id: [str(x) for x in c.counterexamples[:3]] for c in checks if not c.passed}


def test_theorem_worked_points():
    assert p(2, 6) == 13 == d(2, 6) - d(1, 5)
    assert q(1, 6) == 6 == d(2, 6) - d(2, 5)
    assert d(3, 6) == 29 == p(3, 7) - q(1, 6)


def test_theorem_sweep():
    checks = check_theorem(EVEN, ODD, 60)
    assert [c.id for c in checks] == ["T1", "T2", "T3", "T4", "T5"]
    assert _failures(checks) == {}
    assert all(c.checked > 0 for c in checks)


def test_knight_moves():
    assert knight_move(ODD, 3) == 35 - 6 == 29
    assert knight_move(ODD, 1) == 2
    assert tuple(knight_move(ODD, i) for i in range(1, 6)) == golden.PYLON[1:]
    assert check_knight_moves(EVEN, ODD, 60).passed
    with pytest.raises(IndexError):
        knight_move(ODD, 0)


def test_corollary3_worked_points():
    assert q(1, 6) == 6 == p(3, 7) - 2 * p(3, 6) + p(3, 5)
    assert p(2, 6) == 13 == q(2, 7) - 2 * q(1, 6) + q(0, 5)


def test_corollary3_sweep():
    checks = check_corollary3(ODD, 60)
    assert {c.id for c in checks} == {"C3a", "C3b", "Na", "N'a", "Nb", "N'b"}
    assert _failures(checks) == {}


def test_primed_rule_breaks_next_to_pylons():
    # (1, 6) sits on the diagonal i = (t-4)/2, just outside the valid range of N'a
    assert p(3, 7) + p(4, 6) - p(4, 7) == 17 != q(1, 6)


def test_printed_forms_fail():
    checks = {c.id: c for c in printed_corollary3_forms(ODD, 40)}
    assert not checks["Nb[printed]"].passed
    # the primed forms break on every point of one boundary diagonal and nowhere else
    na = [c.where for c in checks["N'a[printed]"].counterexamples]
    nb = [c.where for c in checks["N'b[printed]"].counterexamples]
    assert sorted(na) == [((t - 4) // 2, t) for t in range(4, 41, 2)]
    assert sorted(nb) == sorted(((t - 1) // 2, t) for t in range(1, 41, 2))


def test_corollary4_worked_points():
    assert p(0, 4) + p(1, 5) + p(2, 6) == 18 == d(2, 6)
    assert d(0, 4) + d(1, 5) == 6 == q(1, 6)
    assert p(0, 9) == 1 == d(0, 9)


def test_corollary4_sweep():
    assert _failures(check_corollary4(EVEN, ODD, 60)) == {}


def test_delta_and_shift():
    fibs = [fib(n) for n in range(1, 9)]
    assert delta(shift(fibs)) == fibs[:6]
    assert delta([4] * 6) == [0] * 5
    with pytest.raises(ValueError):
        delta([1])
    with pytest.raises(ValueError):
        shift([])


def test_operators():
    checks = check_operators(EVEN, ODD, i_max=5, t_max=50)
    assert _failures(checks) == {}
    assert {c.id for c in checks} == {"OP:DEf=f", "OP:Ed''=Dd", "OP:d=Dd'", "OP:Ed''=D2d'"}


def test_difference_operators_start_past_pylons():
    # below the pylons the symmetric extension of d breaks both forms
    bad = {(i, t) for i in range(6) for t in range(40) if d(i, t) != p(i + 1, t + 1) - p(i + 1, t)}
    assert bad == {(i, t) for i in range(6) for t in range(i, 2 * i + 1)}
    bad2 = {(i, t) for i in range(6) for t in range(40)
            if q(i, t + 1) != p(i + 2, t + 2) - 2 * p(i + 2, t + 1) + p(i + 2, t)}
    assert max(t - 2 * i for i, t in bad2) == 2


def test_se_difference_table():
    table = se_difference_table(ODD, 12)
    assert table[9] == [1, 7, 27, 67, 102, 40, 9, 1, 0]
    assert table[1] == [1]
    assert table[3] == [1, 1, 0] and table[4] == [1, 2, 2, 0]
    trimmed = tuple(tuple(r[:-1]) if len(r) > 1 else tuple(r) for r in table)
    assert trimmed == golden.SE_DIFFERENCE_ROWS
    with pytest.raises(IndexError):
        se_difference_table(ODD, 63)


@given(st.integers(0, 62))
def test_se_differences_nonnegative(t):
    assert min(se_difference_table(ODD, t)[t]) >= 0


def test_short_tables_rejected():
    with pytest.raises(ValueError):
        check_corollary3(odd_table(10), 10)
