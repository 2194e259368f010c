"""Run every verification suite and collect a single report."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import golden
from .delannoy import (
    check_hirschhorn,
    count_restricted_delannoy,
    enumerate_restricted_delannoy,
    ENUMERATION_LIMIT,
)
from .fibfacts import even_partition_sum, fib, odd_partition_sum, odd_partition_sum_printed
from .identities import (
    check_corollary3,
    check_corollary4,
    check_knight_moves,
    check_operators,
    check_theorem,
    printed_corollary3_forms,
    se_difference_table,
)
from .polyfit import BinomialPoly, DegreeMismatchError, diagonal_polynomial
from .quiver import validate_spec
from .report import Counterexample, IdentityCheck, sweep
from .triangles import (
    build_even_quiver,
    build_odd_quiver,
    check_even_oracles,
    check_odd_oracles,
    even_table,
    odd_table,
)


class ResourceExhausted(RuntimeError):
    pass


@dataclass
class RunReport:
    suites: list[IdentityCheck] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def summary(self) -> dict[str, int]:
        n_pass = sum(s.passed for s in self.suites)
        return {"suites": len(self.suites), "passed": n_pass, "failed": len(self.suites) - n_pass}

    def suite(self, check_id: str) -> IdentityCheck:
        for s in self.suites:
            if s.id == check_id:
                return s
        raise KeyError(check_id)

    def to_dict(self) -> dict:
        return {
            "summary": self.summary,
            "passed": self.passed,
            "suites": [s.to_dict() for s in self.suites],
            "timing": {k: round(v, 6) for k, v in self.timing.items()},
            "notes": list(self.notes),
        }

    def render(self) -> str:
        lines = []
        for s in self.suites:
            line = f"{s.status.upper():4}  {s.id:<16} {s.domain}  ({s.checked} checked)"
            lines.append(line)
            lines.extend(f"        {c}" for c in s.counterexamples[:5])
            if len(s.counterexamples) > 5:
                lines.append(f"        ... {len(s.counterexamples) - 5} more")
        lines.append("")
        lines.append("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in self.timing.items()))
        for note in self.notes:
            lines.append(f"note: {note}")
        s = self.summary
        lines.append(f"{s['passed']}/{s['suites']} suites passed")
        return "\n".join(lines)


def _golden_rows(check_id: str, rows, expected, last: int) -> IdentityCheck:
    n = min(last, len(expected) - 1)
    return sweep(check_id, f"rows 0..{n}", [(t,) for t in range(n + 1)],
                 lambda t: tuple(rows[t]), lambda t: tuple(expected[t]))


def _polynomial_suite(odd, even, t_max: int, notes: list[str]) -> IdentityCheck:
    # fits are only trusted when the fitting window clears the (2i+2) threshold
    i_max = min(8, (t_max - 5) // 4)
    check = IdentityCheck("POLY", f"diagonals i<={i_max}, window_end={t_max}" if i_max >= 0 else "none (t_max < 5)")
    for i in range(i_max + 1):
        for kind, family, tbl in (("even", "d", even), ("odd", "d'", odd), ("odd", "d''", odd)):
            check.checked += 1
            try:
                poly = diagonal_polynomial(kind, family, i, t_max, table=tbl)
            except DegreeMismatchError as exc:
                check.counterexamples.append(Counterexample((kind, family, i), note=str(exc)))
                continue
            if poly.degree != i or not poly.is_monic:
                check.counterexamples.append(Counterexample((kind, family, i), poly.coeffs, note="not monic of degree i"))
            printed = golden.PRINTED_POLYNOMIALS.get((kind, family, i))
            if printed is None:
                continue
            expected = golden.D2_FITTED if (kind, family, i) == ("even", "d", 2) else printed[0]
            if not poly.same_polynomial(BinomialPoly(expected)):
                check.counterexamples.append(Counterexample((kind, family, i), poly.coeffs, expected))
            if printed[0] != poly.coeffs:
                first_bad = next(
                    t for t in range(poly.t_min, t_max + 1) if BinomialPoly(printed[0])(t) != poly(t)
                )
                notes.append(
                    f"printed {family}_{i} = {BinomialPoly(printed[0]).to_binomial_string()} "
                    f"disagrees with the triangle (t={first_bad}: {BinomialPoly(printed[0])(first_bad)} "
                    f"vs {poly(first_bad)}); fitted {poly}"
                )
    return check


def run_verification(t_max: int = 100, n_max: int = 12) -> RunReport:
    if t_max < 0 or n_max < 0:
        raise ValueError("t_max and n_max must be >= 0")
    try:
        return _run(t_max, n_max)
    except (MemoryError, RecursionError) as exc:
        raise ResourceExhausted(f"{type(exc).__name__} while verifying t_max={t_max}") from exc


def _run(t_max: int, n_max: int) -> RunReport:
    report = RunReport()

    def stage(name, fn):
        t0 = time.perf_counter()
        out = fn()
        report.timing[name] = time.perf_counter() - t0
        report.suites.extend(out if isinstance(out, list) else [out])

    # identities reach two rows past t_max; Hirschhorn needs row 2 n_max + 1
    rows = max(t_max + 2, 2 * n_max + 1)
    t0 = time.perf_counter()
    even, odd = even_table(rows), odd_table(rows)
    report.timing["tables"] = time.perf_counter() - t0

    stage("spec", lambda: [validate_spec(build_even_quiver(t_max)), validate_spec(build_odd_quiver(t_max))])
    stage("oracles", lambda: [check_even_oracles(even, t_max), check_odd_oracles(odd, t_max)])
    stage("golden", lambda: [
        _golden_rows("GOLDEN:even", even.rows, golden.EVEN_ROWS, t_max),
        _golden_rows("GOLDEN:odd", odd.rows, golden.ODD_ROWS, t_max),
    ])
    stage("partition", lambda: [
        sweep("PART:even", f"0<=t<={t_max}, f_{2 * t_max + 2} = {fib(2 * t_max + 2)}", [(t,) for t in range(t_max + 1)],
              lambda t: even_partition_sum(even, t), lambda t: fib(2 * t + 2)),
        sweep("PART:odd", f"0<=t<={t_max}, f_{2 * t_max + 1} = {fib(2 * t_max + 1)}", [(t,) for t in range(t_max + 1)],
              lambda t: odd_partition_sum(odd, t), lambda t: fib(2 * t + 1)),
    ])
    stage("theorem", lambda: check_theorem(even, odd, t_max) + [check_knight_moves(even, odd, t_max)])
    stage("corollary3", lambda: check_corollary3(odd, t_max))
    stage("corollary4", lambda: check_corollary4(even, odd, t_max))
    stage("operators", lambda: check_operators(even, odd, i_max=5, t_max=min(50, t_max)))

    def difftable():
        last = min(t_max, len(golden.SE_DIFFERENCE_ROWS) - 1)
        table = se_difference_table(odd, t_max)
        trimmed = [tuple(r[:-1]) if len(r) > 1 and r[-1] == 0 else tuple(r) for r in table]
        nonneg = IdentityCheck("SE-DIFF:nonneg", f"0<=t<={t_max}")
        for t, r in enumerate(table):
            for i, v in enumerate(r):
                nonneg.checked += 1
                if v < 0:
                    nonneg.counterexamples.append(Counterexample((i, t), v, 0, "negative difference"))
        return [_golden_rows("SE-DIFF", trimmed, golden.SE_DIFFERENCE_ROWS, last), nonneg]

    stage("difftable", difftable)
    stage("polyfit", lambda: _polynomial_suite(odd, even, t_max, report.notes))

    def delannoy():
        m = min(n_max, ENUMERATION_LIMIT - 1)
        return [
            check_hirschhorn(even, n_max),
            sweep("DELANNOY:dp=enum", f"0<=n<={m}", [(n,) for n in range(m + 1)],
                  count_restricted_delannoy, enumerate_restricted_delannoy),
            sweep("DELANNOY:central", "0<=n<=4", [(n,) for n in range(5)],
                  lambda n: count_restricted_delannoy(n, restricted=False),
                  lambda n: golden.CENTRAL_DELANNOY[n]),
        ]

    stage("delannoy", delannoy)

    for t in range(min(t_max, 6) + 1):
        printed = odd_partition_sum_printed(odd, t)
        if printed != fib(2 * t + 1):
            report.notes.append(
                f"printed odd partition formula gives {printed} at t={t}, not f_{2 * t + 1} = {fib(2 * t + 1)}; "
                "the corrected form (first sum to i<=t/2, second sum weighted 2^(t-2i-3)) is used"
            )
            break
    for s in printed_corollary3_forms(odd, t_max):
        if not s.passed:
            c = s.counterexamples[0]
            report.notes.append(
                f"{s.id} fails on {s.domain} ({len(s.counterexamples)} points, first {c.where}: "
                f"{c.lhs} vs {c.rhs}); checked in corrected form instead"
            )
    return report
