"""Integer-valued polynomials in the binomial basis and diagonal fitting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, lcm
from typing import Optional, Sequence

from .triangles import (
    TriangleKind,
    ValueTable,
    even_lookup,
    even_table,
    odd_lookup_double,
    odd_lookup_prime,
    odd_table,
)

FAMILIES = ("d", "d'", "d''")
_FAMILY_ALIASES = {"d": "d", "d'": "d'", "prime": "d'", "d''": "d''", "double": "d''"}


class DegreeMismatchError(ValueError):
    pass


def binom(t: int, k: int) -> int:
    """``C(t, k)`` for every integer ``t`` (falling factorial over ``k!``)."""
    if k < 0:
        return 0
    if t >= 0:
        return comb(t, k)
    return (-1) ** k * comb(k - t - 1, k)


@dataclass(frozen=True)
class BinomialPoly:
    """``sum_k coeffs[k] * C(t, k)``, trusted for ``t >= t_min``."""

    coeffs: tuple[int, ...]
    t_min: Optional[int] = None
    verified: bool = True

    def __post_init__(self):
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (0,))

    @property
    def degree(self) -> int:
        return -1 if self.coeffs == (0,) else len(self.coeffs) - 1

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __call__(self, t: int) -> int:
        return evaluate_binomial_poly(self, t)

    def same_polynomial(self, other: BinomialPoly) -> bool:
        return self.coeffs == other.coeffs

    def monomial_coeffs(self) -> list[Fraction]:
        """Coefficients of ``1, t, t^2, ...``."""
        out = [Fraction(0)] * len(self.coeffs)
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            # falling factorial t(t-1)...(t-k+1)
            falling = [Fraction(1)]
            for r in range(k):
                falling = [Fraction(0)] + falling
                for n in range(len(falling) - 1):
                    falling[n] -= r * falling[n + 1]
            for n, a in enumerate(falling):
                out[n] += c * a / factorial(k)
        return out

    def to_binomial_string(self) -> str:
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                body = ("" if abs(c) == 1 else str(abs(c))) + f"C(t,{k})"
            sign = "-" if c < 0 else "+"
            terms.append(body if not terms and c > 0 else sign + body)
        return "".join(terms) or "0"

    def to_monomial_string(self) -> str:
        """Expanded form over a common denominator, e.g. ``(t^2+t-8)/2``."""
        coeffs = self.monomial_coeffs()
        den = lcm(*(c.denominator for c in coeffs))
        nums = [int(c * den) for c in coeffs]
        terms = []
        for n in range(len(nums) - 1, -1, -1):
            a = nums[n]
            if a == 0:
                continue
            var = "" if n == 0 else ("t" if n == 1 else f"t^{n}")
            mag = str(abs(a)) if (abs(a) != 1 or n == 0) else ""
            sign = "-" if a < 0 else "+"
            terms.append(mag + var if not terms and a > 0 else sign + mag + var)
        body = "".join(terms) or "0"
        return body if den == 1 else f"({body})/{den}"

    def __str__(self) -> str:
        text = self.to_binomial_string()
        return text if self.t_min is None else f"{text}, valid t≥{self.t_min}"


def evaluate_binomial_poly(p: BinomialPoly, t: int) -> int:
    return sum(c * binom(t, k) for k, c in enumerate(p.coeffs))


def binomial_fit(samples: Sequence[tuple[int, int]]) -> BinomialPoly:
    """Minimal-degree polynomial through samples taken at consecutive ``t``.

    The Newton form ``sum_k Delta^k y(t0) C(t - t0, k)`` is rewritten in the
    ``C(t, j)`` basis with Vandermonde's identity
    ``C(t - t0, k) = sum_j C(-t0, k - j) C(t, j)``.  If no difference row
    vanishes, the degree is ``len(samples) - 1`` and ``verified`` is False.
    """
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    ts = [t for t, _ in samples]
    if any(b != a + 1 for a, b in zip(ts, ts[1:])):
        raise ValueError("samples must be at consecutive t")
    t0 = ts[0]

    rows = [[v for _, v in samples]]
    degree = None
    while len(rows[-1]) > 1:
        rows.append([b - a for a, b in zip(rows[-1], rows[-1][1:])])
        if all(x == 0 for x in rows[-1]):
            degree = len(rows) - 2
            break
    verified = degree is not None
    if degree is None:
        degree = len(samples) - 1
    newton = [rows[k][0] for k in range(degree + 1)]

    coeffs = [0] * (degree + 1)
    for k, a in enumerate(newton):
        for j in range(k + 1):
            coeffs[j] += a * binom(-t0, k - j)
    return BinomialPoly(tuple(coeffs), t_min=t0, verified=verified)


def _family_lookup(kind: TriangleKind, family: str, tbl: ValueTable):
    if kind is TriangleKind.EVEN:
        if family != "d":
            raise ValueError(f"the even triangle has family 'd' only, got {family!r}")
        return lambda i, t: even_lookup(tbl, i, t)
    if family == "d'":
        return lambda i, t: odd_lookup_prime(tbl, i, t)
    if family == "d''":
        return lambda i, t: odd_lookup_double(tbl, i, t)
    raise ValueError(f"the odd triangle has families d' and d'', got {family!r}")


def _first_vertex(kind: TriangleKind, family: str, i: int) -> int:
    """First row in which the ``i``-th diagonal of the family is an actual entry."""
    if kind is TriangleKind.EVEN:
        return 2 * i
    if family == "d'" and i == 0:
        return 0
    return i + 1


def diagonal_polynomial(
    kind: TriangleKind | str,
    family: str,
    i: int,
    window_end: int,
    table: Optional[ValueTable] = None,
) -> BinomialPoly:
    """Fit the ``i``-th diagonal of a family and locate where the fit starts to hold.

    The fit uses the last ``2i + 4`` entries up to ``window_end``; ``t_min`` is
    found by walking back from that window until the first mismatch (or the
    diagonal's first entry).
    """
    kind = TriangleKind(kind) if isinstance(kind, str) else kind
    family = _FAMILY_ALIASES.get(family, family)
    if i < 0:
        raise ValueError("diagonal index must be >= 0")
    if table is None:
        table = even_table(window_end) if kind is TriangleKind.EVEN else odd_table(window_end)
    elif table.kind is not kind or table.max_row < window_end:
        raise ValueError("table does not match kind or is too short")
    g = _family_lookup(kind, family, table)

    first = _first_vertex(kind, family, i)
    # i + 2 samples would rest on a single vanishing difference
    if window_end - first + 1 < i + 3:
        raise ValueError(f"window_end={window_end} leaves fewer than {i + 3} samples")
    start = max(first, window_end - (2 * i + 4) + 1)
    poly = binomial_fit([(t, g(i, t)) for t in range(start, window_end + 1)])
    if not poly.verified or poly.degree != i:
        raise DegreeMismatchError(
            f"{family}_{i} fitted with degree {poly.degree} (verified={poly.verified}), expected {i}"
        )
    t_min = start
    while t_min - 1 >= first and evaluate_binomial_poly(poly, t_min - 1) == g(i, t_min - 1):
        t_min -= 1
    return BinomialPoly(poly.coeffs, t_min=t_min)
