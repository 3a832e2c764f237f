"""Empirical exploration of the metadata space and the graph space.

Random work is split into fixed-size chunks (samples) or single restarts,
each driven by its own generator ``SeedSequence(seed, spawn_key=(k,))``.
The split never depends on the number of worker threads, and results are
merged in chunk order with exactly rounded sums, so a report is
bit-identical for any ``threads`` value.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, islice
from math import comb
from typing import Callable, Literal, Sequence

import numpy as np

from .errors import (
    DegeneratePartitionError,
    TooManyCombinationsError,
    UndefinedObservedError,
)
from .graph import Graph, MetadataAssignment, edge_counts
from .mixing import r_from_count_arrays, r_from_counts

CHUNK = 4096
DEFAULT_BINS = 100
DEFAULT_CAP = 2_000_000
DENSE_LIMIT = 5000


@dataclass
class ExplorationReport:
    space: str
    method: str
    sample_count: int
    undefined_count: int
    r_min_observed: float | None
    r_max_observed: float | None
    mean_r: float | None
    bin_edges: list[float]
    bin_counts: list[int]
    seed: int | None
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)

    def histogram_rows(self) -> list[tuple[float, float, int]]:
        e = self.bin_edges
        return [(e[k], e[k + 1], c) for k, c in enumerate(self.bin_counts)]


@dataclass(frozen=True)
class HeuristicConfig:
    objective: Literal["min", "max"] = "max"
    iterations: int = 10_000
    restarts: int = 10
    p_accept: float = 0.001
    seed: int = 0

    def __post_init__(self):
        if self.objective not in ("min", "max"):
            raise ValueError("objective must be 'min' or 'max'")
        if not 0.0 <= self.p_accept <= 1.0:
            raise ValueError("p_accept must lie in [0, 1]")
        if self.iterations < 1 or self.restarts < 1:
            raise ValueError("iterations and restarts must be >= 1")


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("ASSORT_THREADS", "1")))
    except ValueError:
        return 1


def chunk_rng(seed: int, k: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(k,)))


def _map_ordered(fn: Callable, items: Sequence, threads: int | None) -> list:
    threads = default_threads() if threads is None else threads
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as ex:
        return list(ex.map(fn, items))


def _summarize(values: np.ndarray, undefined: int, space: str, method: str,
               seed, bins: int, params: dict) -> ExplorationReport:
    values = np.asarray(values, dtype=float)
    edges = np.linspace(-1.0, 1.0, bins + 1)
    counts, _ = np.histogram(np.clip(values, -1.0, 1.0), bins=edges)
    if values.size:
        lo, hi = float(values.min()), float(values.max())
        mean = min(max(math.fsum(values.tolist()) / values.size, lo), hi)
    else:
        lo = hi = mean = None
    return ExplorationReport(
        space=space,
        method=method,
        sample_count=int(values.size),
        undefined_count=int(undefined),
        r_min_observed=lo,
        r_max_observed=hi,
        mean_r=mean,
        bin_edges=[float(x) for x in edges],
        bin_counts=[int(c) for c in counts],
        seed=seed,
        params=params,
    )


class _SubsetCounter:
    """Edge counts for many labellings given as index sets of the smaller class."""

    def __init__(self, g: Graph, n1: int):
        if not 0 < n1 < g.n:
            raise DegeneratePartitionError("both classes must be non-empty")
        self.g = g
        self.n, self.m, self.n1 = g.n, g.m, n1
        self.small_is_ones = n1 <= g.n - n1
        self.s = n1 if self.small_is_ones else g.n - n1
        self.deg = np.array(g.degrees, dtype=np.int64)
        if g.n <= DENSE_LIMIT:
            self.dense = np.zeros((g.n, g.n), dtype=np.int8)
            for i, j in g.edges:
                self.dense[i, j] = self.dense[j, i] = 1
            self.adj = None
        else:
            self.dense = None
            self.adj = g.adjacency()

    def counts(self, idx: np.ndarray):
        """``idx`` is (k, s) node indices of the smaller class."""
        k, s = idx.shape
        if self.dense is not None:
            inner = np.empty(k, dtype=np.int64)
            step = max(1, 20_000_000 // max(1, s * s))
            for a in range(0, k, step):
                sub = idx[a:a + step]
                inner[a:a + step] = self.dense[sub[:, :, None], sub[:, None, :]].sum(axis=(1, 2), dtype=np.int64) // 2
        else:
            inner = np.array(
                [sum(len(self.adj[v] & set(row)) for v in row) // 2 for row in idx.tolist()],
                dtype=np.int64,
            )
        dsum = self.deg[idx].sum(axis=1)
        m10 = dsum - 2 * inner
        if self.small_is_ones:
            m11, m00 = inner, self.m - m10 - inner
        else:
            m00, m11 = inner, self.m - m10 - inner
        return m11, m10, m00

    def r(self, idx: np.ndarray):
        return r_from_count_arrays(*self.counts(idx))


def enumerate_metadata_space(g: Graph, n1: int, cap: int = DEFAULT_CAP,
                             bins: int = DEFAULT_BINS) -> ExplorationReport:
    """r for every assignment with ``n1`` ones."""
    total = comb(g.n, n1)
    if total > cap:
        raise TooManyCombinationsError(total, cap)
    counter = _SubsetCounter(g, n1)
    it = combinations(range(g.n), counter.s)
    values, undefined = [], 0
    while True:
        block = list(islice(it, CHUNK))
        if not block:
            break
        r, ok = counter.r(np.array(block, dtype=np.int64).reshape(len(block), counter.s))
        values.append(r[ok])
        undefined += int((~ok).sum())
    vals = np.concatenate(values) if values else np.zeros(0)
    return _summarize(vals, undefined, "ms", "enumeration", None, bins,
                      {"n1": n1, "assignments": total})


def _random_subsets(rng: np.random.Generator, k: int, n: int, s: int) -> np.ndarray:
    keys = rng.random((k, n))
    if s == n:
        return np.tile(np.arange(n), (k, 1))
    return np.argpartition(keys, s - 1, axis=1)[:, :s] if s else np.zeros((k, 0), dtype=np.int64)


def _permutation_values(g: Graph, n1: int, samples: int, seed: int,
                        threads: int | None):
    counter = _SubsetCounter(g, n1)
    n_chunks = -(-samples // CHUNK)

    def work(k):
        size = min(CHUNK, samples - k * CHUNK)
        idx = _random_subsets(chunk_rng(seed, k), size, g.n, counter.s)
        return counter.r(idx)

    parts = _map_ordered(work, range(n_chunks), threads)
    r = np.concatenate([p[0] for p in parts])
    ok = np.concatenate([p[1] for p in parts])
    return r, ok


def sample_permutations(g: Graph, n1: int, samples: int, seed: int,
                        bins: int = DEFAULT_BINS, threads: int | None = None) -> ExplorationReport:
    """r under uniformly random assignments with ``n1`` ones."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    r, ok = _permutation_values(g, n1, samples, seed, threads)
    return _summarize(r[ok], int((~ok).sum()), "ms", "permutation", seed, bins,
                      {"n1": n1, "samples": samples})


@dataclass(frozen=True)
class PermutationTest:
    observed: float
    p_value: float
    side: str
    exceedances: int
    report: ExplorationReport


def permutation_test(g: Graph, a: MetadataAssignment, samples: int, seed: int,
                     side: Literal["upper", "lower"] = "upper",
                     bins: int = DEFAULT_BINS, threads: int | None = None) -> PermutationTest:
    """One-sided test of the observed r against random relabellings.

    p = (1 + #{sampled r at least as extreme}) / (samples + 1).
    Undefined sampled values never count as extreme.
    """
    if side not in ("upper", "lower"):
        raise ValueError("side must be 'upper' or 'lower'")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    ec = edge_counts(g, a)
    if ec.m == 0 or ec.m * ec.m == (ec.m00 - ec.m11) ** 2:
        raise UndefinedObservedError("observed assortativity is undefined")
    observed = r_from_counts(ec.m11, ec.m10, ec.m00)
    r, ok = _permutation_values(g, a.n1, samples, seed, threads)
    vals = r[ok]
    hits = int((vals >= observed).sum() if side == "upper" else (vals <= observed).sum())
    p = (1 + hits) / (samples + 1)
    report = _summarize(vals, int((~ok).sum()), "ms", "permutation", seed, bins,
                        {"n1": a.n1, "samples": samples, "side": side,
                         "observed_r": observed, "p_value": p})
    return PermutationTest(observed, p, side, hits, report)


def permutation_pvalue(g: Graph, a: MetadataAssignment, samples: int, seed: int,
                       side: Literal["upper", "lower"] = "upper",
                       threads: int | None = None) -> float:
    return permutation_test(g, a, samples, seed, side, threads=threads).p_value


def _swap_run(adj, deg, n: int, m: int, n1: int, cfg: HeuristicConfig,
              rng: np.random.Generator, init: Sequence[int] | None):
    """One restart of the label-swap local search; returns (best_r, best_ones)."""
    if init is None:
        ones = sorted(rng.permutation(n)[:n1].tolist())
    else:
        ones = [i for i in range(n) if init[i] == 1]
    lab = [0] * n
    for i in ones:
        lab[i] = 1
    zeros = [i for i in range(n) if lab[i] == 0]
    k1 = [sum(lab[w] for w in adj[v]) for v in range(n)]
    m11 = sum(k1[v] for v in ones) // 2
    m10 = sum(deg[v] for v in ones) - 2 * m11
    m00 = m - m11 - m10

    sign = 1.0 if cfg.objective == "max" else -1.0

    def score(a11, a10, a00):
        den = m * m - (a00 - a11) ** 2
        if den == 0:
            return None
        return sign * (1.0 - 2 * a10 * m / den)

    cur = score(m11, m10, m00)
    best = cur
    best_ones = list(ones)
    n0 = n - n1
    pick1 = rng.integers(0, n1, size=cfg.iterations).tolist()
    pick0 = rng.integers(0, n0, size=cfg.iterations).tolist()
    coin = rng.random(cfg.iterations).tolist()
    p = cfg.p_accept
    for t in range(cfg.iterations):
        pi, pj = pick1[t], pick0[t]
        a, b = ones[pi], zeros[pj]
        e = 1 if b in adj[a] else 0
        n11 = m11 - k1[a] + k1[b] - e
        n00 = m00 + (deg[a] - k1[a]) - (deg[b] - k1[b] + e)
        n10 = m - n11 - n00
        new = score(n11, n10, n00)
        if new is not None and (cur is None or new > cur):
            accept = True
        else:
            accept = coin[t] < p
        if not accept:
            continue
        for w in adj[a]:
            k1[w] -= 1
        for w in adj[b]:
            k1[w] += 1
        ones[pi], zeros[pj] = b, a
        m11, m10, m00 = n11, n10, n00
        cur = new
        if cur is not None and (best is None or cur > best):
            best = cur
            best_ones = list(ones)
    best_r = None if best is None else sign * best
    return best_r, sorted(best_ones)


def swap_heuristic(g: Graph, n1: int, cfg: HeuristicConfig = HeuristicConfig(),
                   initial: MetadataAssignment | None = None, bins: int = DEFAULT_BINS,
                   threads: int | None = None) -> ExplorationReport:
    """Extremise r over the metadata space by random label swaps.

    Each restart starts from a uniformly random assignment (or ``initial``),
    proposes swapping a random 1-node with a random 0-node, keeps improving
    swaps and keeps a non-improving one with probability ``p_accept``.  The
    report's histogram holds the best value of each restart; the overall best
    and its assignment are in ``params``.
    """
    if not 0 < n1 < g.n:
        raise DegeneratePartitionError("both classes must be non-empty")
    if initial is not None and initial.n1 != n1:
        raise ValueError("initial assignment has the wrong number of ones")
    adj = [set(s) for s in g.adjacency()]
    deg = list(g.degrees)
    init = initial.labels if initial is not None else None

    def work(k):
        return _swap_run(adj, deg, g.n, g.m, n1, cfg, chunk_rng(cfg.seed, k), init)

    runs = _map_ordered(work, range(cfg.restarts), threads)
    found = [(r, ones) for r, ones in runs if r is not None]
    vals = np.array([r for r, _ in found], dtype=float)
    params = {"n1": n1, "objective": cfg.objective, "iterations": cfg.iterations,
              "restarts": cfg.restarts, "p_accept": cfg.p_accept,
              "initial": "observed" if initial is not None else "random"}
    if found:
        pick = min if cfg.objective == "min" else max
        best_r, best_ones = pick(found, key=lambda t: t[0])
        params["best_r"] = best_r
        params["best_ones"] = best_ones
    return _summarize(vals, len(runs) - len(found), "ms", "heuristic", cfg.seed, bins, params)


def double_edge_swaps(edges: Sequence[tuple[int, int]], swaps: int,
                      rng: np.random.Generator, max_tries: int | None = None):
    """Apply up to ``swaps`` accepted double-edge swaps to a copy of ``edges``.

    (a, b), (c, d) -> (a, d), (c, b); proposals creating a self-loop or a
    repeated edge are rejected. Returns ``(edge_list, accepted)``.
    """
    edge_list = [tuple(e) for e in edges]
    present = {frozenset(e) for e in edge_list}
    if swaps <= 0 or len(edge_list) < 2:
        return edge_list, 0
    max_tries = 100 * swaps if max_tries is None else max_tries
    accepted = tries = 0
    m = len(edge_list)
    while accepted < swaps and tries < max_tries:
        batch = min(1024, max_tries - tries)
        i1 = rng.integers(0, m, size=batch).tolist()
        i2 = rng.integers(0, m, size=batch).tolist()
        flip = rng.integers(0, 2, size=batch).tolist()
        for x, y, f in zip(i1, i2, flip):
            tries += 1
            if x == y:
                continue
            a, b = edge_list[x]
            c, d = edge_list[y]
            if f:
                c, d = d, c
            if a == d or c == b or a == c or b == d:
                continue
            e1, e2 = frozenset((a, d)), frozenset((c, b))
            if e1 in present or e2 in present:
                continue
            present.discard(frozenset((a, b)))
            present.discard(frozenset((c, d)))
            present.add(e1)
            present.add(e2)
            edge_list[x] = (a, d)
            edge_list[y] = (c, b)
            accepted += 1
            if accepted == swaps:
                break
    return edge_list, accepted


def rewire_graph_space(g: Graph, a: MetadataAssignment, swaps: int, samples: int,
                       seed: int, bins: int = DEFAULT_BINS, threads: int | None = None,
                       max_tries: int | None = None) -> ExplorationReport:
    """Sample the graph space by degree-preserving rewiring of the observed graph.

    Every sample starts again from ``g``. If no swap can be accepted the
    sample is ``g`` itself.
    """
    if a.n != g.n:
        raise ValueError("assignment length does not match the graph")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    base = sorted(g.edges)
    lab = a.labels

    def work(k):
        edges, acc = double_edge_swaps(base, swaps, chunk_rng(seed, k), max_tries)
        m11 = sum(1 for i, j in edges if lab[i] and lab[j])
        m00 = sum(1 for i, j in edges if not lab[i] and not lab[j])
        m10 = len(edges) - m11 - m00
        den = g.m * g.m - (m00 - m11) ** 2
        return (None if den == 0 else r_from_counts(m11, m10, m00)), acc

    out = _map_ordered(work, range(samples), threads)
    vals = np.array([r for r, _ in out if r is not None], dtype=float)
    accepted = [acc for _, acc in out]
    params = {"n1": a.n1, "swaps": swaps, "samples": samples,
              "accepted_swaps_total": int(sum(accepted)),
              "samples_without_swap": int(sum(1 for x in accepted if x == 0))}
    return _summarize(vals, samples - vals.size, "gs", "rewiring", seed, bins, params)
