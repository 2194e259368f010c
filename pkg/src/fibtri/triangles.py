"""The even-index and odd-index Fibonacci partition triangles.

Even triangle: vertices ``(i, t)`` with ``0 <= 2i <= t``; the pylon is
``{(i, 2i)}``.  Odd triangle: ``(0, 0)`` plus all ``(i, t)`` with
``0 <= i < t``; two pylons ``{(i, 2i)}`` and ``{(i, 2i - 1)}``.

Lookups extend the stored entries to every integer index:

* even: ``d_i(t) = 0`` for ``i < 0`` and ``d_i(t) = d_{t-i}(t)``;
* odd: ``d'_i(t) = 0`` for ``i < 0``, ``d''_i(t) = d'_{t-i-1}(t)``, hence
  ``d''_i(t) = 0`` for ``i < 0`` except ``d''_{-1}(0) = 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .quiver import AdditiveTable, Coord, QuiverSpec, Valuation, evaluate_additive
from .report import Counterexample, IdentityCheck


class TriangleKind(enum.Enum):
    EVEN = "even"
    ODD = "odd"


class RowOutOfRangeError(IndexError):
    pass


PYLON_EDGE = Valuation(3, 1)
PLAIN_EDGE = Valuation(2, 1)
PYLON_TO_PYLON = Valuation(1, 1)
RIGHT_EDGE = Valuation(1, 2)


def build_even_quiver(max_row: int) -> QuiverSpec:
    if max_row < 0:
        raise ValueError("max_row must be >= 0")

    def is_vertex(z: Coord) -> bool:
        i, t = z
        return 0 <= 2 * i <= t <= max_row

    def is_projective(z: Coord) -> bool:
        return z[0] == 0 and is_vertex(z)

    def tau(z: Coord) -> Optional[Coord]:
        i, t = z
        if i >= 1 and is_vertex(z):
            return (i - 1, t - 2)
        return None

    def se_valuation(y: Coord, z: Coord) -> Optional[Valuation]:
        (i, t), (k, s) = y, z
        if (k, s) != (i + 1, t + 1) or not (is_vertex(y) and is_vertex(z)) or 2 * i >= t:
            return None
        return PYLON_EDGE if 2 * k == s else PLAIN_EDGE

    return QuiverSpec(max_row, is_vertex, is_projective, tau, se_valuation, name="even")


def on_first_pylon(z: Coord) -> bool:
    return 2 * z[0] == z[1]


def on_second_pylon(z: Coord) -> bool:
    return 2 * z[0] - 1 == z[1]


def build_odd_quiver(max_row: int) -> QuiverSpec:
    if max_row < 0:
        raise ValueError("max_row must be >= 0")

    def is_vertex(z: Coord) -> bool:
        i, t = z
        return z == (0, 0) or 0 <= i < t <= max_row

    def is_projective(z: Coord) -> bool:
        i, t = z
        return is_vertex(z) and (i == 0 or (i >= 2 and t == i + 1))

    def tau(z: Coord) -> Optional[Coord]:
        i, t = z
        if is_vertex(z) and not is_projective(z):
            return (i - 1, t - 2)
        return None

    def on_pylon(z: Coord) -> bool:
        return on_first_pylon(z) or on_second_pylon(z)

    def se_valuation(y: Coord, z: Coord) -> Optional[Valuation]:
        (i, t), (k, s) = y, z
        if (k, s) != (i + 1, t + 1) or y == (0, 0) or not (is_vertex(y) and is_vertex(z)):
            return None
        if on_pylon(y) and on_pylon(z):
            return PYLON_TO_PYLON
        return PLAIN_EDGE if 2 * i < t else RIGHT_EDGE

    return QuiverSpec(max_row, is_vertex, is_projective, tau, se_valuation, name="odd")


@dataclass(frozen=True)
class ValueTable:
    """Dense rows of one triangle.

    Even row ``t`` stores ``d_0(t)..d_{t//2}(t)``; odd row ``t >= 1`` stores
    ``d'_0(t)..d'_{t-1}(t)`` and odd row 0 stores ``d'_0(0)``.
    """

    kind: TriangleKind
    rows: tuple[tuple[int, ...], ...]
    backing: Optional[AdditiveTable] = None

    @property
    def max_row(self) -> int:
        return len(self.rows) - 1

    def row(self, t: int) -> tuple[int, ...]:
        self._check_row(t)
        return self.rows[t]

    def _check_row(self, t: int) -> None:
        if not 0 <= t <= self.max_row:
            raise RowOutOfRangeError(f"row {t} outside 0..{self.max_row}")


def _rows_from(values, q: QuiverSpec, max_row: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(values[(i, t)] for i in q.row(t)) for t in range(max_row + 1))


def even_table(max_row: int) -> ValueTable:
    q = build_even_quiver(max_row)
    ones = {(0, t): 1 for t in range(max_row + 1)}
    backing = evaluate_additive(q, ones, max_row)
    return ValueTable(TriangleKind.EVEN, _rows_from(backing, q, max_row), backing)


def odd_table(max_row: int) -> ValueTable:
    q = build_odd_quiver(max_row)
    ones = {z: 1 for z in q.vertices() if q.is_projective(z)}
    backing = evaluate_additive(q, ones, max_row)
    return ValueTable(TriangleKind.ODD, _rows_from(backing, q, max_row), backing)


def even_rows_by_recurrence(max_row: int) -> list[list[int]]:
    """Even rows from the three-term recurrence, no quiver involved."""
    rows: list[list[int]] = []
    for t in range(max_row + 1):
        row = [1]
        for i in range(1, t // 2 + 1):
            if 2 * i < t:
                row.append(2 * rows[t - 1][i - 1] + rows[t - 1][i] - rows[t - 2][i - 1])
            else:
                row.append(3 * rows[t - 1][i - 1] - rows[t - 2][i - 1])
        rows.append(row)
    return rows


def odd_rows_by_recurrence(max_row: int) -> list[list[int]]:
    """Odd rows from the two closed recurrences (left and right of the first pylon)."""
    rows: list[list[int]] = [[1]]

    def g(i: int, t: int) -> int:
        if t < 0 or i < 0 or i >= len(rows[t]):
            return 0
        return rows[t][i]

    for t in range(1, max_row + 1):
        row = []
        for i in range(t):
            if i == 0 or (i >= 2 and t == i + 1):
                row.append(1)
            elif 2 * i <= t:
                row.append(2 * g(i - 1, t - 1) + g(i, t - 1) - g(i - 1, t - 2))
            else:
                row.append(g(i - 1, t - 1) + 2 * g(i, t - 1) - g(i - 1, t - 2))
        rows.append(row)
    return rows


def _require(tbl: ValueTable, kind: TriangleKind) -> None:
    if tbl.kind is not kind:
        raise ValueError(f"expected a {kind.value} table, got {tbl.kind.value}")


def even_lookup(tbl: ValueTable, i: int, t: int) -> int:
    _require(tbl, TriangleKind.EVEN)
    tbl._check_row(t)
    if 2 * i > t:
        i = t - i
    return tbl.rows[t][i] if i >= 0 else 0


def odd_lookup_prime(tbl: ValueTable, i: int, t: int) -> int:
    _require(tbl, TriangleKind.ODD)
    tbl._check_row(t)
    row = tbl.rows[t]
    return row[i] if 0 <= i < len(row) else 0


def odd_lookup_double(tbl: ValueTable, i: int, t: int) -> int:
    # d''_{-1}(0) = d'_0(0) = 1 comes out of the duality without a special case
    return odd_lookup_prime(tbl, t - i - 1, t)


def even_hook(tbl: ValueTable, i: int, t: int) -> int:
    """``d_i(t)`` as a hook sum over earlier rows, without any mesh coefficient."""
    if not (0 <= 2 * i <= t and 1 <= t <= tbl.max_row):
        raise RowOutOfRangeError(f"({i},{t}) is not a hook position of the even triangle")
    d = lambda j, s: even_lookup(tbl, j, s)  # noqa: E731
    # on the pylon the column on the right is taken to be g_i(2i-1) = g_{i-1}(2i-1)
    corner = d(i - 1, t - 1) if 2 * i == t else d(i, t - 1)
    return corner + sum(d(j, t - i + j) for j in range(i))


def odd_hook_prime(tbl: ValueTable, i: int, t: int) -> int:
    """Hook sum for the vertex ``(i, t)`` with ``2i <= t`` in terms of ``d'``."""
    if not (0 <= 2 * i <= t and 1 <= t <= tbl.max_row):
        raise RowOutOfRangeError(f"({i},{t}) is not a d' hook position")
    p = lambda j, s: odd_lookup_prime(tbl, j, s)  # noqa: E731
    return p(i, t - 1) + sum(p(j, t - i + j) for j in range(i))


def odd_hook_double(tbl: ValueTable, k: int, t: int) -> int:
    """Hook sum for ``d''_k(t)``, i.e. the vertex ``(t-1-k, t)``, which must satisfy ``2(t-1-k) > t``."""
    if not (k >= 0 and 2 * (t - 1 - k) > t and 1 <= t <= tbl.max_row):
        raise RowOutOfRangeError(f"d''_{k}({t}) is not a d'' hook position")
    q = lambda j, s: odd_lookup_double(tbl, j, s)  # noqa: E731
    return q(k, t - 1) + sum(q(j, t - k + j) for j in range(k))


def _ceil_half(t: int) -> int:
    return -(-t // 2)


def concordance_even(i: int, t: int) -> tuple[int, int]:
    """``d_i(t) = a_s[j]`` with ``s = ceil(t/2)`` and ``j = t - 2i``."""
    if not 0 <= 2 * i <= t:
        raise ValueError(f"({i},{t}) is not an entry of the even triangle")
    return _ceil_half(t), t - 2 * i


def concordance_even_inverse(s: int, j: int) -> tuple[int, int]:
    # t is 2s or 2s-1, whichever has the parity of j
    t = 2 * s if j % 2 == 0 else 2 * s - 1
    if s < 0 or not 0 <= j <= t:
        raise ValueError(f"a_{s}[{j}] does not name an entry of the even triangle")
    return (t - j) // 2, t


def concordance_odd(i: int, t: int, which: str = "prime") -> tuple[int, int]:
    """``d'_i(t) = u_s[t - 2i]`` and ``d''_i(t) = u_s[2 + 2i - t]`` with ``s = ceil(t/2)``."""
    if which == "prime":
        if not ((i, t) == (0, 0) or 0 <= i < t):
            raise ValueError(f"d'_{i}({t}) is not an entry of the odd triangle")
        return _ceil_half(t), t - 2 * i
    if which == "double":
        if not ((i, t) == (-1, 0) or 0 <= i < t):
            raise ValueError(f"d''_{i}({t}) is not an entry of the odd triangle")
        return _ceil_half(t), 2 + 2 * i - t
    raise ValueError(f"which must be 'prime' or 'double', got {which!r}")


def check_even_oracles(tbl: ValueTable, t_max: int | None = None) -> IdentityCheck:
    """Mesh-engine table against the closed recurrence and the hook sums."""
    _require(tbl, TriangleKind.EVEN)
    t_max = tbl.max_row if t_max is None else t_max
    direct = even_rows_by_recurrence(t_max)
    check = IdentityCheck("ORACLE:even", f"0<=2i<=t<={t_max}")
    for t in range(t_max + 1):
        for i in range(t // 2 + 1):
            mesh = tbl.rows[t][i]
            values = (mesh, direct[t][i]) + ((even_hook(tbl, i, t),) if t >= 1 else ())
            check.checked += 1
            if len(set(values)) != 1:
                check.counterexamples.append(Counterexample((i, t), mesh, values[1:], "mesh vs recurrence/hook"))
    return check


def check_odd_oracles(tbl: ValueTable, t_max: int | None = None) -> IdentityCheck:
    _require(tbl, TriangleKind.ODD)
    t_max = tbl.max_row if t_max is None else t_max
    direct = odd_rows_by_recurrence(t_max)
    check = IdentityCheck("ORACLE:odd", f"all vertices with t<={t_max}")
    for t in range(t_max + 1):
        for i in range(len(tbl.rows[t])):
            mesh = tbl.rows[t][i]
            values = [mesh, direct[t][i]]
            if t >= 1:
                values.append(odd_hook_prime(tbl, i, t) if 2 * i <= t else odd_hook_double(tbl, t - 1 - i, t))
            check.checked += 1
            if len(set(values)) != 1:
                check.counterexamples.append(Counterexample((i, t), mesh, values[1:], "mesh vs recurrence/hook"))
    return check
