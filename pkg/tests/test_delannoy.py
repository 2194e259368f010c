import pytest
from hypothesis import given, strategies as st

from fibtri import golden
from fibtri.delannoy import (
    check_hirschhorn,
    count_restricted_delannoy,
    crosses_horizontally,
    delannoy_paths,
    enumerate_restricted_delannoy,
)
from fibtri.triangles import even_lookup, even_table


@pytest.mark.parametrize("n,count", list(enumerate(golden.HIRSCHHORN)))
def test_restricted_counts(n, count):
    assert count_restricted_delannoy(n) == count


@pytest.mark.parametrize("n,count", list(enumerate(golden.CENTRAL_DELANNOY)))
def test_unrestricted_counts(n, count):
    assert count_restricted_delannoy(n, restricted=False) == count


def test_n1_paths():
    paths = list(delannoy_paths(1))
    assert len(paths) == 3 and not any(crosses_horizontally(p) for p in paths)


def test_crossing_detection():
    assert crosses_horizontally([(0, 1), (1, 1), (2, 1)])
    assert not crosses_horizontally([(0, 0), (1, 1), (2, 1)])
    assert not crosses_horizontally([(1, 0), (1, 1), (1, 2)])


@pytest.mark.parametrize("n", range(7))
def test_dp_matches_enumeration(n):
    assert count_restricted_delannoy(n) == enumerate_restricted_delannoy(n)
    assert count_restricted_delannoy(n, False) == enumerate_restricted_delannoy(n, False)


def test_enumeration_guarded():
    with pytest.raises(ValueError):
        enumerate_restricted_delannoy(8)
    with pytest.raises(ValueError):
        count_restricted_delannoy(-1)


def test_matches_even_triangle():
    tbl = even_table(25)
    assert even_lookup(tbl, 4, 9) == 247 and even_lookup(tbl, 5, 11) == 1192
    assert check_hirschhorn(tbl, 12).passed
    with pytest.raises(ValueError):
        check_hirschhorn(tbl, 13)


@given(st.integers(0, 30))
def test_restriction_only_removes_paths(n):
    assert 0 < count_restricted_delannoy(n) <= count_restricted_delannoy(n, restricted=False)
