"""Finite truncations of valued translation quivers and their additive functions.

Vertices are pairs ``(i, t)`` inside the strip ``0 <= i <= t`` of ZA_inf^inf:
``t`` is the row (layer) and ``i`` the south-east diagonal.  The only arrows
that can occur are

* south-west ``(i, t) -> (i, t + 1)``, present whenever both ends are vertices;
* south-east ``(i, t) -> (i + 1, t + 1)``, present whenever the quiver assigns
  it a valuation.

Only south-east arrows carry stored valuations.  The valuation of a south-west
arrow is forced by the translation law ``v'(tau z, y) = v''(y, z)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Iterator, Mapping, Optional

from .report import Counterexample, VerificationReport

Coord = tuple[int, int]


class QuiverError(Exception):
    pass


class UndefinedArrowError(QuiverError):
    def __init__(self, source: Coord, target: Coord):
        super().__init__(f"{source} -> {target} is not an arrow")
        self.source = source
        self.target = target


class MissingDependencyError(QuiverError, KeyError):
    def __init__(self, coord: Coord, needed_by: Optional[Coord] = None):
        msg = f"no value for {coord}"
        if needed_by is not None:
            msg += f" (needed by the mesh ending in {needed_by})"
        super().__init__(msg)
        self.coord = coord

    def __str__(self) -> str:
        return self.args[0]


class MissingProjectiveValueError(MissingDependencyError):
    pass


class DependencyCycleError(QuiverError):
    """A mesh depends on a vertex that is not strictly earlier in the row order."""


@dataclass(frozen=True)
class Valuation:
    v_prime: int
    v_double_prime: int

    def __post_init__(self):
        if self.v_prime < 1 or self.v_double_prime < 1:
            raise ValueError(f"valuation entries must be >= 1, got {self}")

    def swapped(self) -> Valuation:
        return Valuation(self.v_double_prime, self.v_prime)

    def __str__(self) -> str:
        return f"({self.v_prime},{self.v_double_prime})"


@dataclass(frozen=True)
class QuiverSpec:
    """A valued translation quiver truncated to rows ``0..max_row``.

    ``tau`` returns ``None`` where the translation is undefined and
    ``se_valuation(y, z)`` returns ``None`` when ``y -> z`` is not a
    south-east arrow.
    """

    max_row: int
    is_vertex: Callable[[Coord], bool]
    is_projective: Callable[[Coord], bool]
    tau: Callable[[Coord], Optional[Coord]]
    se_valuation: Callable[[Coord, Coord], Optional[Valuation]]
    name: str = "quiver"

    def row(self, t: int) -> list[int]:
        return [i for i in range(t + 1) if self.is_vertex((i, t))]

    def vertices(self, up_to_row: Optional[int] = None) -> Iterator[Coord]:
        last = self.max_row if up_to_row is None else up_to_row
        for t in range(last + 1):
            for i in self.row(t):
                yield (i, t)

    def se_arrow(self, y: Coord, z: Coord) -> Optional[Valuation]:
        if z != (y[0] + 1, y[1] + 1):
            return None
        if not (self.is_vertex(y) and self.is_vertex(z)):
            return None
        return self.se_valuation(y, z)

    def has_sw_arrow(self, y: Coord, z: Coord) -> bool:
        return z == (y[0], y[1] + 1) and self.is_vertex(y) and self.is_vertex(z)

    def has_arrow(self, y: Coord, z: Coord) -> bool:
        return self.has_sw_arrow(y, z) or self.se_arrow(y, z) is not None

    def predecessors(self, z: Coord) -> list[Coord]:
        """``z^-``: the sources of all arrows ending in ``z``."""
        i, t = z
        return [y for y in ((i, t - 1), (i - 1, t - 1)) if self.has_arrow(y, z)]

    def successors(self, x: Coord) -> list[Coord]:
        """``x^+``: the targets of all arrows starting in ``x``."""
        i, t = x
        return [y for y in ((i, t + 1), (i + 1, t + 1)) if self.has_arrow(x, y)]


def sw_arrow_v_prime(q: QuiverSpec, z: Coord) -> int:
    """``v'`` of the south-west arrow ending in the non-projective vertex ``z``.

    It equals ``v''`` of the south-east arrow ``tau z -> (i, t-1)``.
    """
    i, t = z
    y = (i, t - 1)
    if not q.has_sw_arrow(y, z):
        raise UndefinedArrowError(y, z)
    x = q.tau(z)
    if x is None:
        raise QuiverError(f"{z} is projective; its south-west valuation is not forced")
    val = q.se_arrow(x, y)
    if val is None:
        raise UndefinedArrowError(x, y)
    return val.v_double_prime


def _arrow_v_prime(q: QuiverSpec, y: Coord, z: Coord) -> int:
    val = q.se_arrow(y, z)
    if val is not None:
        return val.v_prime
    return sw_arrow_v_prime(q, z)


@dataclass(frozen=True)
class AdditiveTable:
    values: Mapping[Coord, int]
    source_spec: QuiverSpec

    def __getitem__(self, z: Coord) -> int:
        return self.values[z]

    def __contains__(self, z: object) -> bool:
        return z in self.values

    def __len__(self) -> int:
        return len(self.values)

    def mesh_violations(self) -> list[Coord]:
        """Non-projective vertices whose stored value breaks their mesh relation."""
        q = self.source_spec
        return [
            z
            for z in self.values
            if not q.is_projective(z) and mesh_value(q, self, z) != self.values[z]
        ]


def mesh_value(q: QuiverSpec, g: Mapping[Coord, int] | AdditiveTable, z: Coord) -> int:
    """Right-hand side of the mesh relation solved for ``g(z)``."""
    x = q.tau(z)
    if x is None:
        raise QuiverError(f"{z} is projective; no mesh ends in it")
    total = 0
    for y in q.predecessors(z):
        if y not in g:
            raise MissingDependencyError(y, z)
        total += _arrow_v_prime(q, y, z) * g[y]
    if x not in g:
        raise MissingDependencyError(x, z)
    return total - g[x]


def evaluate_additive(
    q: QuiverSpec, projective_values: Mapping[Coord, int], up_to_row: int
) -> AdditiveTable:
    """The unique additive function with the given values on projective vertices.

    Rows are filled in increasing ``t``; every mesh must only reach back into
    strictly earlier rows.
    """
    if not 0 <= up_to_row <= q.max_row:
        raise ValueError(f"up_to_row must lie in 0..{q.max_row}, got {up_to_row}")
    values: dict[Coord, int] = {}
    for t in range(up_to_row + 1):
        for i in q.row(t):
            z = (i, t)
            if q.is_projective(z):
                if z not in projective_values:
                    raise MissingProjectiveValueError(z)
                values[z] = projective_values[z]
                continue
            x = q.tau(z)
            if x is None or x[1] >= t or any(y[1] >= t for y in q.predecessors(z)):
                raise DependencyCycleError(f"mesh ending in {z} does not point into earlier rows")
            values[z] = mesh_value(q, values, z)
    return AdditiveTable(MappingProxyType(values), q)


def validate_spec(q: QuiverSpec) -> VerificationReport:
    """Check the translation-quiver and valuation laws on rows ``0..max_row``."""
    report = VerificationReport(f"SPEC:{q.name}", f"rows 0..{q.max_row}")
    bad = report.counterexamples
    vertices = list(q.vertices())
    preimage: dict[Coord, Coord] = {}

    for z in vertices:
        report.checked += 1
        x = q.tau(z)
        if q.is_projective(z):
            if x is not None:
                bad.append(Counterexample(z, note="tau defined on projective vertex"))
            continue
        if x is None:
            bad.append(Counterexample(z, note="tau undefined on non-projective vertex"))
            continue
        if not q.is_vertex(x):
            bad.append(Counterexample(z, note=f"tau image {x} is not a vertex"))
            continue
        if x in preimage:
            bad.append(Counterexample(z, note=f"tau not injective: {preimage[x]} and {z} both map to {x}"))
        preimage[x] = z
        if set(q.predecessors(z)) != set(q.successors(x)):
            bad.append(
                Counterexample(
                    z, lhs=sorted(q.predecessors(z)), rhs=sorted(q.successors(x)),
                    note="mesh law: z^- differs from (tau z)^+",
                )
            )

    # A south-west arrow a -> b is constrained twice: by the mesh ending in b
    # (through tau b -> a) and by the mesh ending in w with tau w = a (through b -> w).
    for a in vertices:
        b = (a[0], a[1] + 1)
        if b[1] > q.max_row or not q.has_sw_arrow(a, b):
            continue
        forced = []
        if not q.is_projective(b) and q.tau(b) is not None:
            val = q.se_arrow(q.tau(b), a)
            if val is not None:
                forced.append(val.swapped())
        w = preimage.get(a)
        if w is not None:
            val = q.se_arrow(b, w)
            if val is not None:
                forced.append(val.swapped())
        if len(set(forced)) > 1:
            bad.append(
                Counterexample(
                    a, lhs=str(forced[0]), rhs=str(forced[1]),
                    note=f"valuation law: south-west arrow {a}->{b} forced to two values",
                )
            )
    return report
