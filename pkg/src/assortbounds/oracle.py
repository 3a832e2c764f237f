"""Brute-force ground truth for small instances.

Everything here is deliberately naive: plain enumeration, no shortcuts
shared with the bounds engine or the explorer. Graphs are labelled
realisations over degree-sorted slots (slot ``i`` gets the ``i``-th largest
degree); isomorphic realisations are all kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import NotGraphicalError, TooLargeError
from .graph import DegreeSequence, Graph, MetadataAssignment

MAX_N = 10


def is_graphical(degrees: Sequence[int]) -> bool:
    """Erdős–Gallai test."""
    d = sorted(degrees, reverse=True)
    n = len(d)
    if any(x < 0 or x > n - 1 for x in d) or sum(d) % 2:
        return False
    for k in range(1, n + 1):
        lhs = sum(d[:k])
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def enumerate_labeled_graphs(d: DegreeSequence | Sequence[int],
                             connected_only: bool = False) -> list[Graph]:
    """Every simple graph on slots 0..n-1 whose slot degrees equal ``d``."""
    degs = d.degrees if isinstance(d, DegreeSequence) else tuple(sorted(d, reverse=True))
    n = len(degs)
    if n > MAX_N:
        raise TooLargeError(f"n = {n} exceeds {MAX_N}")
    if not is_graphical(degs):
        raise NotGraphicalError(f"{list(degs)} is not graphical")

    out: list[Graph] = []
    rem = list(degs)
    edges: list[tuple[int, int]] = []

    def rec(i: int) -> None:
        while i < n and rem[i] == 0:
            i += 1
        if i == n:
            g = Graph(n, frozenset(edges))
            if not connected_only or g.is_connected():
                out.append(g)
            return
        cands = [j for j in range(i + 1, n) if rem[j] > 0]
        need = rem[i]
        if len(cands) < need:
            return
        for chosen in combinations(cands, need):
            rem[i] = 0
            for j in chosen:
                rem[j] -= 1
                edges.append((i, j))
            rec(i + 1)
            for j in chosen:
                rem[j] += 1
                edges.pop()
            rem[i] = need

    rec(0)
    return out


@dataclass(frozen=True)
class EnsembleTruth:
    degrees: tuple[int, ...]
    n1: int
    assignment: tuple[int, ...] | None
    connected_only: bool
    realized: tuple[tuple[int, int, int, float | None], ...]
    extrema: dict

    @property
    def r_range(self) -> tuple[float, float] | None:
        return self.extrema.get("r")


def _counts_for(graphs: list[Graph], labels: np.ndarray):
    """m11 and m00 for every (assignment, graph) pair; ``labels`` is (A, n)."""
    m = graphs[0].m
    if m == 0:
        z = np.zeros((labels.shape[0], len(graphs)), dtype=np.int64)
        return z, z
    ends = np.array([sorted(g.edges) for g in graphs], dtype=np.int64)  # (G, m, 2)
    lu = labels[:, ends[:, :, 0]]  # (A, G, m)
    lv = labels[:, ends[:, :, 1]]
    m11 = (lu & lv).sum(axis=2)
    m00 = ((1 - lu) & (1 - lv)).sum(axis=2)
    return m11, m00


def ensemble_truth(d: DegreeSequence | Sequence[int], n1: int | None = None,
                   assignment: MetadataAssignment | Sequence[int] | None = None,
                   connected_only: bool = True,
                   graphs: list[Graph] | None = None) -> EnsembleTruth:
    """Exact extrema of m11, m10, m00 and r.

    With ``n1`` the ensemble is the metadata-graph space (every graph and
    every labelling with n1 ones); with ``assignment`` (over degree-sorted
    slots) it is the graph space.
    """
    degs = d.degrees if isinstance(d, DegreeSequence) else tuple(sorted(d, reverse=True))
    n = len(degs)
    if graphs is None:
        graphs = enumerate_labeled_graphs(degs, connected_only)
    fixed = None
    if assignment is not None:
        fixed = tuple(assignment.labels if isinstance(assignment, MetadataAssignment) else assignment)
        labels = np.array([fixed], dtype=np.int64)
        n1 = sum(fixed)
    elif n1 is not None:
        rows = []
        for ones in combinations(range(n), n1):
            row = [0] * n
            for i in ones:
                row[i] = 1
            rows.append(row)
        labels = np.array(rows, dtype=np.int64).reshape(-1, n)
    else:
        raise ValueError("need n1 or assignment")

    realized = set()
    if graphs:
        m = graphs[0].m
        m11, m00 = _counts_for(graphs, labels)
        for a, b in set(zip(m11.ravel().tolist(), m00.ravel().tolist())):
            m10 = m - a - b
            denom = m * m - (b - a) ** 2
            r = None if denom == 0 else 1.0 - 2 * m10 * m / denom
            realized.add((a, m10, b, r))
    realized = tuple(sorted(realized, key=lambda t: t[:3]))
    extrema = {}
    for k, name in enumerate(("m11", "m10", "m00")):
        vals = [t[k] for t in realized]
        if vals:
            extrema[name] = (min(vals), max(vals))
    rs = [t[3] for t in realized if t[3] is not None]
    if rs:
        extrema["r"] = (min(rs), max(rs))
    return EnsembleTruth(degs, n1, fixed, connected_only, realized, extrema)


def metadata_space_values(g: Graph, n1: int) -> list[float | None]:
    """r for every n1-subset of nodes, in lexicographic subset order."""
    out: list[float | None] = []
    m = g.m
    for ones in combinations(range(g.n), n1):
        s = set(ones)
        m11 = m00 = 0
        for i, j in g.edges:
            if i in s and j in s:
                m11 += 1
            elif i not in s and j not in s:
                m00 += 1
        m10 = m - m11 - m00
        denom = m * m - (m00 - m11) ** 2
        out.append(None if denom == 0 else 1.0 - 2 * m10 * m / denom)
    return out
