"""Delannoy paths from (0, 0) to (n, n) that never cross the diagonal horizontally.

A horizontal crossing is a subpath ``(m-1, m) -> (m, m) -> (m+1, m)``: two
consecutive east steps meeting the diagonal.  Diagonal steps never trigger it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .report import IdentityCheck, sweep
from .triangles import ValueTable, even_lookup

ENUMERATION_LIMIT = 7


class Step(enum.Enum):
    NONE = (0, 0)
    E = (1, 0)
    N = (0, 1)
    D = (1, 1)


STEPS = (Step.E, Step.N, Step.D)


@dataclass(frozen=True)
class PathState:
    x: int
    y: int
    last_step: Step = Step.NONE


def _forbidden(state: PathState, step: Step) -> bool:
    return step is Step.E and state.last_step is Step.E and state.x == state.y


def count_restricted_delannoy(n: int, restricted: bool = True) -> int:
    """Dynamic programme over ``(x, y, last step)``.

    With ``restricted=False`` this counts all Delannoy paths (central Delannoy numbers).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ways: dict[PathState, int] = {PathState(0, 0): 1}
    # states in order of increasing x + y, so every predecessor is finished first
    for s in range(2 * n + 1):
        for x in range(max(0, s - n), min(n, s) + 1):
            y = s - x
            for last in Step:
                state = PathState(x, y, last)
                count = ways.get(state)
                if not count:
                    continue
                for step in STEPS:
                    nx, ny = x + step.value[0], y + step.value[1]
                    if nx > n or ny > n or (restricted and _forbidden(state, step)):
                        continue
                    nxt = PathState(nx, ny, step)
                    ways[nxt] = ways.get(nxt, 0) + count
    return sum(ways.get(PathState(n, n, last), 0) for last in Step)


def delannoy_paths(n: int) -> Iterator[list[tuple[int, int]]]:
    """Every Delannoy path from (0, 0) to (n, n) as its list of points."""
    path = [(0, 0)]

    def walk():
        x, y = path[-1]
        if (x, y) == (n, n):
            yield list(path)
            return
        for step in STEPS:
            nx, ny = x + step.value[0], y + step.value[1]
            if nx <= n and ny <= n:
                path.append((nx, ny))
                yield from walk()
                path.pop()

    yield from walk()


def crosses_horizontally(path: list[tuple[int, int]]) -> bool:
    return any(
        a == (m - 1, m) and c == (m + 1, m)
        for a, (m, mm), c in zip(path, path[1:], path[2:])
        if m == mm
    )


def enumerate_restricted_delannoy(n: int, restricted: bool = True) -> int:
    """Brute-force count by explicit path generation; only for small ``n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration is limited to n <= {ENUMERATION_LIMIT}")
    return sum(1 for p in delannoy_paths(n) if not (restricted and crosses_horizontally(p)))


def check_hirschhorn(even_tbl: ValueTable, n_max: int) -> IdentityCheck:
    """Path counts against the second-last entries ``d_n(2n+1)`` of the odd rows."""
    if even_tbl.max_row < 2 * n_max + 1:
        raise ValueError(f"even table must reach row {2 * n_max + 1}")
    return sweep("HIRSCHHORN", f"0<=n<={n_max}", [(n,) for n in range(n_max + 1)],
                 count_restricted_delannoy, lambda n: even_lookup(even_tbl, n, 2 * n + 1))
