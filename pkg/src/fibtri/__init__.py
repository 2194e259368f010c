"""Fibonacci partition triangles built from valued translation quivers."""

from .delannoy import count_restricted_delannoy, enumerate_restricted_delannoy
from .fibfacts import even_partition_sum, fib, odd_partition_sum
from .identities import se_difference_table
from .polyfit import BinomialPoly, binomial_fit, diagonal_polynomial
from .quiver import QuiverSpec, Valuation, evaluate_additive, validate_spec
from .report import Counterexample, IdentityCheck
from .triangles import (
    TriangleKind,
    ValueTable,
    even_lookup,
    even_table,
    odd_lookup_double,
    odd_lookup_prime,
    odd_table,
)
from .verify import RunReport, run_verification

__all__ = [
    "BinomialPoly", "Counterexample", "IdentityCheck", "QuiverSpec", "RunReport",
    "TriangleKind", "Valuation", "ValueTable", "binomial_fit", "count_restricted_delannoy",
    "diagonal_polynomial", "enumerate_restricted_delannoy", "evaluate_additive",
    "even_lookup", "even_partition_sum", "even_table", "fib", "odd_lookup_double",
    "odd_lookup_prime", "odd_partition_sum", "odd_table", "run_verification",
    "se_difference_table", "validate_spec",
]
