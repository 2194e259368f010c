"""Fibonacci numbers and the two row-sum partition formulas."""

from __future__ import annotations

import threading

from .triangles import (
    TriangleKind,
    ValueTable,
    even_lookup,
    odd_lookup_double,
    odd_lookup_prime,
)


class FibSequence:
    """Memoized ``f_1 = f_2 = 1``; the memo only ever grows, under a lock."""

    def __init__(self):
        self._memo = [0, 1, 1]  # index 0 is a placeholder, never served
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise ValueError(f"Fibonacci index must be >= 1, got {n}")
        if n >= len(self._memo):
            with self._lock:
                memo = self._memo
                while len(memo) <= n:
                    memo.append(memo[-1] + memo[-2])
        return self._memo[n]


_FIB = FibSequence()


def fib(n: int) -> int:
    return _FIB[n]


def _check(tbl: ValueTable, kind: TriangleKind, t: int) -> None:
    if tbl.kind is not kind:
        raise ValueError(f"expected a {kind.value} table")
    if not 0 <= t <= tbl.max_row:
        raise IndexError(f"row {t} outside 0..{tbl.max_row}")


def even_partition_sum(tbl: ValueTable, t: int) -> int:
    """``3 * sum_{i < t/2} 2^(t-2i-1) d_i(t) + d_{t/2}(t)``; equals ``f_{2t+2}``."""
    _check(tbl, TriangleKind.EVEN, t)
    total = sum(even_lookup(tbl, i, t) << (t - 2 * i - 1) for i in range((t + 1) // 2))
    middle = even_lookup(tbl, t // 2, t) if t % 2 == 0 else 0
    return 3 * total + middle


def odd_partition_sum(tbl: ValueTable, t: int) -> int:
    """Weighted odd row sum; equals ``f_{2t+1}``.

    ``sum_{i <= t/2} 2^(t-2i) d'_i(t) + sum_{i <= (t-3)/2} 2^(t-2i-3) d''_i(t)``
    """
    _check(tbl, TriangleKind.ODD, t)
    left = sum(odd_lookup_prime(tbl, i, t) << (t - 2 * i) for i in range(t // 2 + 1))
    right = sum(odd_lookup_double(tbl, i, t) << (t - 2 * i - 3) for i in range((t - 3) // 2 + 1))
    return left + right


def odd_partition_sum_printed(tbl: ValueTable, t: int) -> int:
    """The odd formula exactly as published: both sums weighted ``2^(t-2i)``,
    the first over ``i < t/2`` and the second over ``i < (t-3)/2``.

    Kept only to document that it does not reproduce ``f_{2t+1}``.
    """
    _check(tbl, TriangleKind.ODD, t)
    left = sum(odd_lookup_prime(tbl, i, t) << (t - 2 * i) for i in range((t + 1) // 2))
    right = sum(odd_lookup_double(tbl, i, t) << (t - 2 * i) for i in range(max(0, (t - 2) // 2)))
    return left + right
