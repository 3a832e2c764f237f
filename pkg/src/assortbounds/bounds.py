"""Combinatorial edge-count and assortativity bounds.

Two ensembles are supported:

``mgs``
    every graph with the degree sequence, every labelling with ``n1`` ones.
    Degrees are split into the head (largest) and tail (smallest) of the
    sorted sequence.
``gs``
    every graph with the degree sequence under one fixed labelling, so the
    split of the degree multiset between the classes is given.

Bounds for ``m00`` are the ``m11`` bounds with the classes swapped.  The
lower bound on ``m10`` is floored at 1, which only holds for connected
realisations.

All edge-count arithmetic is on Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Literal

from .errors import (
    DegeneratePartitionError,
    InvalidPartitionError,
    NoFeasibleCandidateError,
    ZeroBoundError,
)
from .graph import (
    DegreeSequence,
    Graph,
    MetadataAssignment,
    degree_sequence,
    split_degrees,
)
from .mixing import r_from_counts

Space = Literal["mgs", "gs"]
Variant = Literal["improved", "original"]


@dataclass(frozen=True)
class DegreePartition:
    """Degree multisets of the 1-class and the 0-class."""

    ones: tuple[int, ...]
    zeros: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ones", tuple(sorted(self.ones, reverse=True)))
        object.__setattr__(self, "zeros", tuple(sorted(self.zeros, reverse=True)))

    def swapped(self) -> "DegreePartition":
        return DegreePartition(self.zeros, self.ones)

    @classmethod
    def from_assignment(cls, g: Graph, a: MetadataAssignment) -> "DegreePartition":
        ones, zeros = split_degrees(g, a)
        return cls(ones, zeros)


@dataclass(frozen=True)
class EdgeCountBounds:
    space: str
    m: int
    m11_lower: int
    m11_upper: int
    m10_lower: int
    m10_upper: int
    m00_lower: int
    m00_upper: int
    variant: str = "improved"

    def contains(self, m11: int, m10: int, m00: int) -> bool:
        return (
            self.m11_lower <= m11 <= self.m11_upper
            and self.m10_lower <= m10 <= self.m10_upper
            and self.m00_lower <= m00 <= self.m00_upper
        )


@dataclass(frozen=True)
class AssortativityRange:
    space: str
    r_lower: float
    r_upper: float
    lower_counts: tuple[int, int, int]
    upper_counts: tuple[tuple[int, int, int], ...]
    candidate_log: tuple[dict, ...] = field(default=())
    edge_bounds: EdgeCountBounds | None = None


def _sides(d: DegreeSequence, n1: int, space: str, partition: DegreePartition | None):
    """Return (ones, zeros) degree multisets used by the bound formulas.

    For mgs the two sides depend on which extreme is wanted, so this helper is
    only used for gs; mgs formulas index head/tail directly.
    """
    if space != "gs":
        raise ValueError(space)
    if partition is None:
        raise InvalidPartitionError("graph-space bounds need a fixed degree partition")
    if len(partition.ones) != n1:
        raise InvalidPartitionError(
            f"partition has {len(partition.ones)} ones, expected n1 = {n1}"
        )
    if tuple(sorted(partition.ones + partition.zeros, reverse=True)) != d.degrees:
        raise InvalidPartitionError("partition is not a split of the degree sequence")
    return partition.ones, partition.zeros


def _check(d: DegreeSequence, n1: int, space: str) -> None:
    if not 0 <= n1 <= d.n:
        raise ValueError(f"n1 = {n1} outside [0, {d.n}]")
    if space not in ("mgs", "gs"):
        raise ValueError(f"unknown space {space!r}")


def m11_upper(d: DegreeSequence, n1: int, space: Space = "mgs",
              partition: DegreePartition | None = None) -> int:
    _check(d, n1, space)
    ones = d.head(n1) if space == "mgs" else _sides(d, n1, space, partition)[0]
    residual = sum(min(x, n1 - 1) for x in ones) if n1 else 0
    return min(d.m, comb(n1, 2), -(-residual // 2))


def m10_upper(d: DegreeSequence, n1: int, space: Space = "mgs",
              partition: DegreePartition | None = None) -> int:
    _check(d, n1, space)
    n0 = d.n - n1
    if space == "mgs":
        a = sum(min(x, n0) for x in d.head(n1))
        b = sum(min(x, n1) for x in d.head(n0))
    else:
        ones, zeros = _sides(d, n1, space, partition)
        a = sum(min(x, n0) for x in ones)
        b = sum(min(x, n1) for x in zeros)
    return min(d.m, n1 * n0, a, b)


def m11_lower(d: DegreeSequence, n1: int, space: Space = "mgs",
              partition: DegreePartition | None = None,
              variant: Variant = "improved") -> int:
    _check(d, n1, space)
    n0 = d.n - n1
    if space == "mgs":
        ones, zeros = d.tail(n1), d.head(n0)
    else:
        ones, zeros = _sides(d, n1, space, partition)
    if variant == "improved":
        absorbed = sum(min(x, n1) for x in zeros)
    else:
        absorbed = sum(zeros)
    return max(0, (sum(ones) - absorbed) // 2)


def m10_lower(d: DegreeSequence, n1: int, space: Space = "mgs",
              partition: DegreePartition | None = None,
              variant: Variant = "improved") -> int:
    _check(d, n1, space)
    n0 = d.n - n1
    if n1 in (0, d.n):
        return 0
    if space == "mgs":
        ones, zeros = d.tail(n1), d.tail(n0)
    else:
        ones, zeros = _sides(d, n1, space, partition)
    if variant == "original":
        return max(1, sum(ones) - n1 * (n1 - 1))
    terms = [
        1,
        sum(max(0, x - (n1 - 1)) for x in ones),
        sum(max(0, x - (n0 - 1)) for x in zeros),
    ]
    if space == "mgs":
        k = max(n1, n0) - 1
        terms.append(sum(max(0, x - k) for x in d.degrees) // 2)
    return max(terms)


def m00_upper(d, n1, space="mgs", partition=None) -> int:
    return m11_upper(d, d.n - n1, space, partition.swapped() if partition else None)


def m00_lower(d, n1, space="mgs", partition=None, variant: Variant = "improved") -> int:
    return m11_lower(d, d.n - n1, space, partition.swapped() if partition else None, variant)


def edge_count_bounds(d: DegreeSequence, n1: int, space: Space = "mgs",
                      partition: DegreePartition | None = None,
                      variant: Variant = "improved") -> EdgeCountBounds:
    return EdgeCountBounds(
        space=space,
        m=d.m,
        m11_lower=m11_lower(d, n1, space, partition, variant),
        m11_upper=m11_upper(d, n1, space, partition),
        m10_lower=m10_lower(d, n1, space, partition, variant),
        m10_upper=m10_upper(d, n1, space, partition),
        m00_lower=m00_lower(d, n1, space, partition, variant),
        m00_upper=m00_upper(d, n1, space, partition),
        variant=variant,
    )


def assortativity_upper(ecb: EdgeCountBounds, m: int | None = None):
    """Upper bound 1 - 2 m10_lower / m.

    Realising counts put the remaining edges in two equal halves; for an odd
    remainder both integer splits are returned.
    """
    m = ecb.m if m is None else m
    if m <= 0:
        raise ValueError("need m > 0")
    rest = m - ecb.m10_lower
    lo, hi = rest // 2, rest - rest // 2
    splits = {(lo, ecb.m10_lower, hi), (hi, ecb.m10_lower, lo)}
    return 1.0 - 2 * ecb.m10_lower / m, tuple(sorted(splits))


def assortativity_lower(ecb: EdgeCountBounds, m: int | None = None):
    """Minimum of r over the three extreme count configurations.

    Returns ``(r_lower, (m11, m10, m00), candidate_log)``.  Candidates with a
    negative count or a single-class edge set are logged and skipped.
    """
    m = ecb.m if m is None else m
    if m <= 0:
        raise ValueError("need m > 0")
    l11, l00, u10 = ecb.m11_lower, ecb.m00_lower, ecb.m10_upper
    raw = [
        ("i", (l11, m - l11 - l00, l00), None, None),
        ("ii", (l11, u10, m - u10 - l11), u10 + l11 <= m, None),
        # The literature repeats the case (ii) guard here; both are logged.
        ("iii", (m - u10 - l00, u10, l00), u10 + l00 <= m, u10 + l11 <= m),
    ]
    log = []
    best = None
    for case, counts, guard, literal_guard in raw:
        entry = {"case": case, "counts": list(counts), "guard": guard}
        if literal_guard is not None:
            entry["literal_guard"] = literal_guard
        m11, m10, m00 = counts
        if guard is False:
            entry.update(feasible=False, reason="guard")
        elif min(counts) < 0:
            entry.update(feasible=False, reason="negative count")
        elif m * m == (m00 - m11) ** 2:
            entry.update(feasible=False, reason="undefined r")
        else:
            r = r_from_counts(m11, m10, m00)
            entry.update(feasible=True, r=r)
            if best is None or r < best[0]:
                best = (r, counts)
        log.append(entry)
    if best is None:
        raise NoFeasibleCandidateError(tuple(log))
    return best[0], best[1], tuple(log)


def assortativity_range(g: Graph, n1: int | None = None, space: Space = "mgs",
                        assignment: MetadataAssignment | None = None,
                        variant: Variant = "improved") -> AssortativityRange:
    """Bounds on r over the chosen ensemble of ``g``'s degree sequence."""
    d = degree_sequence(g)
    partition = None
    if space == "gs":
        if assignment is None:
            raise InvalidPartitionError("graph-space bounds need a metadata assignment")
        partition = DegreePartition.from_assignment(g, assignment)
        n1 = assignment.n1
    elif n1 is None:
        if assignment is None:
            raise ValueError("need n1 or an assignment")
        n1 = assignment.n1
    if n1 in (0, d.n):
        raise DegeneratePartitionError("both classes must be non-empty")
    ecb = edge_count_bounds(d, n1, space, partition, variant)
    r_up, up_counts = assortativity_upper(ecb)
    r_lo, lo_counts, log = assortativity_lower(ecb)
    return AssortativityRange(space, r_lo, r_up, lo_counts, up_counts, log, ecb)


def normalize_assortativity(r: float, span: AssortativityRange) -> float:
    """r / r_upper for positive r, r / r_lower otherwise."""
    bound = span.r_upper if r > 0 else span.r_lower
    if bound == 0:
        raise ZeroBoundError("normalising bound is zero")
    return r / bound
