"""Sweeps over the identities linking the even and odd triangles.

Every checker returns :class:`~fibtri.report.IdentityCheck` records built with
convention-extended lookups, so negative indices and indices past the middle
of a row are exercised too.  Tables must hold one row beyond ``t_max``
wherever an identity reaches into row ``t + 1``.
"""

from __future__ import annotations

from typing import Sequence

from .fibfacts import fib
from .report import IdentityCheck, sweep
from .triangles import (
    ValueTable,
    even_lookup,
    odd_lookup_double,
    odd_lookup_prime,
)

# how far below zero the i-windows reach
NEG = 3


def _lookups(even_tbl: ValueTable | None, odd_tbl: ValueTable | None):
    d = (lambda i, t: even_lookup(even_tbl, i, t)) if even_tbl is not None else None
    p = (lambda i, t: odd_lookup_prime(odd_tbl, i, t)) if odd_tbl is not None else None
    q = (lambda i, t: odd_lookup_double(odd_tbl, i, t)) if odd_tbl is not None else None
    return d, p, q


def _need(tbl: ValueTable, last_row: int) -> None:
    if tbl.max_row < last_row:
        raise ValueError(f"table holds rows 0..{tbl.max_row}, need row {last_row}")


def _points(t_lo: int, t_hi: int, i_hi) -> list[tuple[int, int]]:
    return [(i, t) for t in range(t_lo, t_hi + 1) for i in range(-NEG, i_hi(t) + 1)]


def check_theorem(even_tbl: ValueTable, odd_tbl: ValueTable, t_max: int) -> list[IdentityCheck]:
    """Rules (1)-(5) relating ``d``, ``d'`` and ``d''`` for ``1 <= t <= t_max``."""
    _need(even_tbl, t_max)
    _need(odd_tbl, t_max)
    d, p, q = _lookups(even_tbl, odd_tbl)
    half_minus_one = lambda t: (t - 2) // 2  # noqa: E731  i <= (t-2)/2
    return [
        sweep("T1", f"1<=t<={t_max}, -{NEG}<=i<=t+{NEG}", _points(1, t_max, lambda t: t + NEG),
              lambda i, t: p(i, t), lambda i, t: d(i, t) - d(i - 1, t - 1)),
        sweep("T2", f"1<=t<={t_max}, -{NEG}<=i<=t+{NEG}", _points(1, t_max, lambda t: t + NEG),
              lambda i, t: q(i, t), lambda i, t: d(i + 1, t) - d(i + 1, t - 1)),
        sweep("T3", f"1<=t<={t_max}, -{NEG}<=i<=(t-2)/2", _points(1, t_max, half_minus_one),
              lambda i, t: d(i, t - 1), lambda i, t: p(i + 1, t) - p(i + 1, t - 1)),
        sweep("T4", f"1<=t<={t_max}, -{NEG}<=i<=(t-2)/2", _points(1, t_max, half_minus_one),
              lambda i, t: d(i, t - 1), lambda i, t: q(i, t) - q(i - 1, t - 1)),
        sweep("T5", f"1<=t<={t_max}, -{NEG}<=i<=t/2", _points(1, t_max, lambda t: t // 2),
              lambda i, t: d(i, t - 1), lambda i, t: p(i, t) - q(i - 2, t - 1)),
    ]


def knight_move(odd_tbl: ValueTable, i: int) -> int:
    """The even pylon entry ``d_i(2i)`` rebuilt from the odd triangle alone."""
    if i < 1 or 2 * i + 1 > odd_tbl.max_row:
        raise IndexError(f"knight move for i={i} needs 1 <= i and row {2 * i + 1}")
    return odd_lookup_prime(odd_tbl, i, 2 * i + 1) - odd_lookup_double(odd_tbl, i - 2, 2 * i)


def check_knight_moves(even_tbl: ValueTable, odd_tbl: ValueTable, t_max: int) -> IdentityCheck:
    i_max = (min(t_max, odd_tbl.max_row) - 1) // 2
    return sweep("KNIGHT", f"1<=i<={i_max}", [(i,) for i in range(1, i_max + 1)],
                 lambda i: even_lookup(even_tbl, i, 2 * i), lambda i: knight_move(odd_tbl, i))


def check_corollary3(odd_tbl: ValueTable, t_max: int) -> list[IdentityCheck]:
    """Both directions of the second-difference rule and their two-layer forms.

    The primed forms and the second unprimed form are checked as they follow
    from the meshes, see ``printed_corollary3_forms`` for the literal text.
    """
    _need(odd_tbl, t_max + 1)
    _, p, q = _lookups(None, odd_tbl)
    below_pylons = lambda t: (t - 4) // 2  # noqa: E731  i <= (t-4)/2
    strictly_left = lambda t: (t - 1) // 2  # noqa: E731  i < t/2
    return [
        sweep("C3a", f"4<=t<={t_max}, i<=(t-4)/2", _points(4, t_max, below_pylons),
              lambda i, t: q(i, t), lambda i, t: p(i + 2, t + 1) - 2 * p(i + 2, t) + p(i + 2, t - 1)),
        sweep("C3b", f"1<=t<={t_max}, i<t/2", _points(1, t_max, strictly_left),
              lambda i, t: p(i, t), lambda i, t: q(i, t + 1) - 2 * q(i - 1, t) + q(i - 2, t - 1)),
        sweep("Na", f"4<=t<={t_max}, i<=(t-4)/2", _points(4, t_max, below_pylons),
              lambda i, t: q(i, t),
              lambda i, t: 2 * p(i + 1, t) - p(i + 1, t - 1) - p(i + 2, t) + p(i + 2, t - 1)),
        sweep("N'a", f"5<=t<={t_max}, i<=(t-5)/2", _points(5, t_max, lambda t: (t - 5) // 2),
              lambda i, t: q(i, t), lambda i, t: p(i + 2, t + 1) + p(i + 3, t) - p(i + 3, t + 1)),
        sweep("Nb", f"1<=t<={t_max}, i<t/2", _points(1, t_max, strictly_left),
              lambda i, t: p(i, t),
              lambda i, t: 2 * q(i - 2, t) - q(i - 1, t + 1) - q(i - 1, t) + q(i, t + 1)),
        sweep("N'b", f"1<=t<={t_max}, i<=(t-2)/2", _points(1, t_max, lambda t: (t - 2) // 2),
              lambda i, t: p(i, t), lambda i, t: q(i - 2, t - 1) + q(i, t) - q(i - 1, t - 1)),
    ]


def printed_corollary3_forms(odd_tbl: ValueTable, t_max: int) -> list[IdentityCheck]:
    """The two-layer rules verbatim, over the domains of the rules they restate.

    These fail: ``Nb`` carries ``d''_i(t-1)`` where the mesh gives ``d''_i(t+1)``,
    and both primed rules break on the diagonal next to the pylons.
    """
    _need(odd_tbl, t_max + 1)
    _, p, q = _lookups(None, odd_tbl)
    return [
        sweep("N'a[printed]", f"4<=t<={t_max}, i<=(t-4)/2", _points(4, t_max, lambda t: (t - 4) // 2),
              lambda i, t: q(i, t), lambda i, t: p(i + 2, t + 1) + p(i + 3, t) - p(i + 3, t + 1)),
        sweep("Nb[printed]", f"1<=t<={t_max}, i<t/2", _points(1, t_max, lambda t: (t - 1) // 2),
              lambda i, t: p(i, t),
              lambda i, t: 2 * q(i - 2, t) - q(i - 1, t + 1) - q(i - 1, t) + q(i, t - 1)),
        sweep("N'b[printed]", f"1<=t<={t_max}, i<t/2", _points(1, t_max, lambda t: (t - 1) // 2),
              lambda i, t: p(i, t), lambda i, t: q(i - 2, t - 1) + q(i, t) - q(i - 1, t - 1)),
    ]


def check_corollary4(even_tbl: ValueTable, odd_tbl: ValueTable, t_max: int) -> list[IdentityCheck]:
    """Summation along south-east arrows from the left boundary."""
    _need(even_tbl, t_max)
    _need(odd_tbl, t_max + 1)
    d, p, q = _lookups(even_tbl, odd_tbl)

    def se_sum(g, i, t):
        return sum(g(j, t - i + j) for j in range(i + 1))

    pts_b = [(i, t) for t in range(t_max + 1) for i in range(t + 1)]
    return [
        sweep("C4a", f"0<=t<={t_max}, 0<=i<=(t-1)/2",
              [(i, t) for t in range(t_max + 1) for i in range((t - 1) // 2 + 1)],
              lambda i, t: se_sum(d, i, t), lambda i, t: q(i, t + 1)),
        sweep("C4b", f"0<=t<={t_max}, 0<=i<=t", pts_b,
              lambda i, t: se_sum(p, i, t), lambda i, t: d(i, t)),
        sweep("C4sym", f"0<=t<={t_max}, 0<=i<=t", pts_b,
              lambda i, t: se_sum(p, i, t), lambda i, t: se_sum(p, t - i, t)),
    ]


def delta(u: Sequence[int]) -> list[int]:
    """Forward difference ``u(t+1) - u(t)``; one term shorter than ``u``."""
    if len(u) < 2:
        raise ValueError("delta needs at least two terms")
    return [b - a for a, b in zip(u, u[1:])]


def shift(u: Sequence[int]) -> list[int]:
    """Shift ``u(t+1)``; one term shorter than ``u``."""
    if len(u) < 1:
        raise ValueError("shift of an empty sequence")
    return list(u[1:])


def check_operators(
    even_tbl: ValueTable, odd_tbl: ValueTable, i_max: int = 5, t_max: int = 50, n_fib: int = 500
) -> list[IdentityCheck]:
    """Difference/shift operator forms, compared termwise as sequences in ``t``.

    ``E d''_i = Delta d_{i+1}`` holds for every ``t >= 0``; ``d_i = Delta d'_{i+1}``
    and ``E d''_i = Delta^2 d'_{i+2}`` only once ``t`` is past the pylons
    (``t >= 2i+1`` and ``t >= 2i+3``).
    """
    _need(even_tbl, t_max + 2)
    _need(odd_tbl, t_max + 2)
    d, p, q = _lookups(even_tbl, odd_tbl)
    ts = range(t_max + 3)
    checks = []

    fibs = [fib(n) for n in range(1, n_fib + 3)]
    dEf = delta(shift(fibs))
    checks.append(sweep("OP:DEf=f", f"1<=n<={n_fib}", [(n,) for n in range(1, n_fib + 1)],
                        lambda n: dEf[n - 1], lambda n: fibs[n - 1]))

    for name, lhs_of, rhs_of, t_lo in (
        ("OP:Ed''=Dd", lambda i: shift([q(i, t) for t in ts]), lambda i: delta([d(i + 1, t) for t in ts]),
         lambda i: 0),
        ("OP:d=Dd'", lambda i: [d(i, t) for t in ts], lambda i: delta([p(i + 1, t) for t in ts]),
         lambda i: 2 * i + 1),
        ("OP:Ed''=D2d'", lambda i: shift([q(i, t) for t in ts]),
         lambda i: delta(delta([p(i + 2, t) for t in ts])), lambda i: 2 * i + 3),
    ):
        check = IdentityCheck(name, f"0<=i<={i_max}, t<={t_max}")
        for i in range(i_max + 1):
            lhs, rhs = lhs_of(i), rhs_of(i)
            part = sweep(name, "", [(i, t) for t in range(t_lo(i), t_max + 1)],
                         lambda i, t: lhs[t], lambda i, t: rhs[t])
            check.checked += part.checked
            check.counterexamples += part.counterexamples
        checks.append(check)
    return checks


def se_difference_table(odd_tbl: ValueTable, t_max: int) -> list[list[int]]:
    """Row ``t`` lists ``g(i,t) - g(i-1,t-1)`` for ``i = 0..t-1`` (one entry for ``t = 0``),
    with ``g`` the full odd row and ``g(-1, .) = 0``."""
    if t_max < 0 or t_max > odd_tbl.max_row:
        raise IndexError(f"t_max must lie in 0..{odd_tbl.max_row}")
    table = [[odd_lookup_prime(odd_tbl, 0, 0)]]
    for t in range(1, t_max + 1):
        table.append([
            odd_lookup_prime(odd_tbl, i, t) - odd_lookup_prime(odd_tbl, i - 1, t - 1)
            for i in range(t)
        ])
    return table
