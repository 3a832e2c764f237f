"""Scalar mixing statistics for binary node metadata.

Assortativity is computed in three algebraically equivalent ways (from a
contingency table, from the long count form and from the simplified count
form).  All of them raise :class:`DegenerateDenominatorError` instead of
returning NaN when every edge joins nodes of a single class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateDenominatorError,
    DegenerateMarginalError,
    DegeneratePartitionError,
    EmptyGraphError,
)
from .graph import EdgeCounts, Graph, MetadataAssignment, edge_counts

SUM_TOL = 1e-12


@dataclass(frozen=True)
class ContingencyTable:
    """2x2 joint distribution; ``e10`` is (x=1, y=0) and ``e01`` is (x=0, y=1)."""

    e11: float
    e10: float
    e01: float
    e00: float

    def __post_init__(self):
        if min(self.e11, self.e10, self.e01, self.e00) < 0:
            raise ValueError("contingency entries must be non-negative")
        total = self.e11 + self.e10 + self.e01 + self.e00
        if abs(total - 1.0) > SUM_TOL:
            raise ValueError(f"contingency entries sum to {total!r}, not 1")

    @property
    def a1(self) -> float:
        return self.e11 + self.e10

    @property
    def a0(self) -> float:
        return self.e01 + self.e00

    @property
    def b1(self) -> float:
        return self.e11 + self.e01

    @property
    def b0(self) -> float:
        return self.e10 + self.e00


@dataclass(frozen=True)
class SegregationResult:
    expected_cross: float
    observed_cross: int
    S: float


def contingency_from_counts(ec: EdgeCounts) -> ContingencyTable:
    if ec.m == 0:
        raise EmptyGraphError("no edges")
    m = ec.m
    half = ec.m10 / (2 * m)
    return ContingencyTable(ec.m11 / m, half, half, ec.m00 / m)


def phi_coefficient(t: ContingencyTable) -> float:
    denom = t.a1 * t.a0 * t.b1 * t.b0
    if denom <= 0:
        raise DegenerateMarginalError("phi is undefined when a marginal is zero")
    return (t.e11 - t.a1 * t.b1) / math.sqrt(denom)


def phi_determinant_form(t: ContingencyTable) -> float:
    """phi written as (e11 e00 - e01 e10) / sqrt(a1 a0 b1 b0)."""
    denom = t.a1 * t.a0 * t.b1 * t.b0
    if denom <= 0:
        raise DegenerateMarginalError("phi is undefined when a marginal is zero")
    return (t.e11 * t.e00 - t.e01 * t.e10) / math.sqrt(denom)


def phi_bounds(a0: float, a1: float, b0: float, b1: float) -> tuple[float, float]:
    """Attainable range of phi given the marginals.

    Written in min/max form so that it does not depend on which value is
    called 0 or which variable is called x; with a0 <= b0 and
    a0 + b0 <= 1 it reduces to -sqrt(a0 b0 / a1 b1) and sqrt(a0 b1 / a1 b0).
    """
    if min(a0, a1, b0, b1) <= 0:
        raise DegenerateMarginalError("phi bounds need positive marginals")
    if abs(a0 + a1 - 1) > SUM_TOL or abs(b0 + b1 - 1) > SUM_TOL:
        raise ValueError("marginals must each sum to 1")
    lo = -math.sqrt(min(a0 * b0, a1 * b1) / max(a0 * b0, a1 * b1))
    hi = math.sqrt(min(a0 * b1, a1 * b0) / max(a0 * b1, a1 * b0))
    return lo, hi


def assortativity_from_contingency(t: ContingencyTable) -> float:
    sq = t.a1 ** 2 + t.a0 ** 2
    if sq >= 1.0:
        raise DegenerateDenominatorError("undefined (single-class edge set)")
    return (t.e11 + t.e00 - sq) / (1.0 - sq)


def assortativity_long_form(ec: EdgeCounts) -> float:
    """Count form before eliminating m10."""
    m = ec.m
    if m == 0:
        raise EmptyGraphError("no edges")
    p0 = ec.m00 + ec.m10 / 2
    p1 = ec.m11 + ec.m10 / 2
    denom = m * m - p0 * p0 - p1 * p1
    if denom == 0:
        raise DegenerateDenominatorError("undefined (single-class edge set)")
    return ((ec.m00 + ec.m11) * m - p0 * p0 - p1 * p1) / denom


def r_from_counts(m11, m10, m00):
    """1 - 2 m10 m / (m^2 - (m00 - m11)^2); works on ints or int arrays.

    No degeneracy check: callers handle a zero denominator.
    """
    m = m11 + m10 + m00
    return 1.0 - (2 * m10 * m) / (m * m - (m00 - m11) ** 2)


def assortativity_from_counts(ec: EdgeCounts) -> float:
    if ec.m == 0:
        raise EmptyGraphError("no edges")
    if ec.m * ec.m == (ec.m00 - ec.m11) ** 2:
        raise DegenerateDenominatorError("undefined (single-class edge set)")
    return r_from_counts(ec.m11, ec.m10, ec.m00)


def assortativity(g: Graph, a: MetadataAssignment) -> float:
    return assortativity_from_counts(edge_counts(g, a))


def r_from_count_arrays(m11: np.ndarray, m10: np.ndarray, m00: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised r; returns ``(r, defined)`` with r = NaN where undefined."""
    m11 = np.asarray(m11, dtype=np.int64)
    m10 = np.asarray(m10, dtype=np.int64)
    m00 = np.asarray(m00, dtype=np.int64)
    m = m11 + m10 + m00
    denom = m * m - (m00 - m11) ** 2
    defined = denom != 0
    safe = np.where(defined, denom, 1)
    r = 1.0 - (2 * m10 * m) / safe
    return np.where(defined, r, np.nan), defined


def newman_naive_min(a: Sequence[float]) -> float:
    """Newman's minimum, reached only if no edge joins equal labels."""
    sq = sum(x * x for x in a)
    if not 0 < sq < 1:
        raise DegenerateDenominatorError("sum of squared class proportions must lie in (0, 1)")
    return -sq / (1 - sq)


def delta_profile(m: int, m10: int) -> list[tuple[int, float]]:
    """r over every integer split of the m - m10 within-class edges.

    Returns ``(m11 - m00, r)`` pairs; undefined splits are skipped.
    """
    out = []
    rest = m - m10
    for m11 in range(rest + 1):
        m00 = rest - m11
        if m * m == (m00 - m11) ** 2:
            continue
        out.append((m11 - m00, r_from_counts(m11, m10, m00)))
    return out


def freeman_segregation(g: Graph, a: MetadataAssignment) -> SegregationResult:
    """Freeman's segregation with the permutation expectation of m10.

    Under uniformly random relabelling with fixed class sizes each edge is
    cross-class with probability 2 n1 n0 / (n (n - 1)).
    """
    n, n1 = g.n, a.n1
    if n1 in (0, n):
        raise DegeneratePartitionError("both classes must be non-empty")
    if g.m == 0:
        raise EmptyGraphError("no edges")
    expected = g.m * 2 * n1 * (n - n1) / (n * (n - 1))
    observed = edge_counts(g, a).m10
    s = expected - observed if expected >= observed else 0.0
    return SegregationResult(expected, observed, s / expected)
