"""Edge-list / metadata files and bundled fixtures.

Edge list: one edge per line, two whitespace-separated node tokens, ``#``
starts a comment line.  Metadata: ``node<TAB>label`` per line with label 0
or 1.  Node indices follow first appearance in the edge list; nodes that
only occur in the metadata file are appended as isolated nodes.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import IO, Iterable

from .errors import GraphError, ParseError
from .graph import Graph, MetadataAssignment, validate_graph

FIXTURES = ("wolf", "p3", "k4", "c6")


def _lines(source) -> Iterable[tuple[int, str]]:
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            yield from enumerate(fh.read().splitlines(), start=1)
    else:
        yield from enumerate((ln.rstrip("\n") for ln in source), start=1)


def read_edge_list(source, *, dedupe: bool = False, symmetrize: bool = False):
    """Parse an edge list; returns ``(pairs_of_names, names_in_order)``.

    ``symmetrize`` collapses reciprocal pairs of a directed listing; any other
    repeat is an error unless ``dedupe`` is set.
    """
    names: dict[str, int] = {}
    pairs: list[tuple[str, str]] = []
    seen: dict[tuple[str, str], tuple[str, str]] = {}
    where = getattr(source, "name", source)
    for lineno, raw in _lines(source):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ParseError(f"{where}:{lineno}: expected two node tokens, got {line!r}")
        u, v = tok
        if u == v:
            raise ParseError(f"{where}:{lineno}: self-loop on node {u!r}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            reciprocal = seen[key] != (u, v)
            if not (dedupe or (symmetrize and reciprocal)):
                raise ParseError(f"{where}:{lineno}: duplicate edge {u} {v}")
            continue
        seen[key] = (u, v)
        for x in (u, v):
            if x not in names:
                names[x] = len(names)
        pairs.append((u, v))
    return pairs, list(names)


def read_metadata(source) -> dict[str, int]:
    out: dict[str, int] = {}
    where = getattr(source, "name", source)
    for lineno, raw in _lines(source):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tok = line.split("\t") if "\t" in line else line.split()
        if len(tok) != 2:
            raise ParseError(f"{where}:{lineno}: expected 'node<TAB>label', got {line!r}")
        node, label = tok[0].strip(), tok[1].strip()
        if label not in ("0", "1"):
            raise ParseError(f"{where}:{lineno}: label {label!r} for node {node!r} is not 0 or 1")
        if node in out:
            raise ParseError(f"{where}:{lineno}: node {node!r} listed twice")
        out[node] = int(label)
    return out


def load_graph(edge_source, metadata_source=None, *, dedupe: bool = False,
               symmetrize: bool = False) -> tuple[Graph, MetadataAssignment | None]:
    pairs, order = read_edge_list(edge_source, dedupe=dedupe, symmetrize=symmetrize)
    meta = read_metadata(metadata_source) if metadata_source is not None else None
    if meta is not None:
        missing = [x for x in order if x not in meta]
        if missing:
            raise ParseError(f"no label for node {missing[0]!r} ({len(missing)} unlabelled)")
        known = set(order)
        order = order + [x for x in meta if x not in known]
    index = {name: i for i, name in enumerate(order)}
    try:
        g = validate_graph(((index[u], index[v]) for u, v in pairs), len(order),
                           node_labels=order)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc
    a = MetadataAssignment(tuple(meta[x] for x in order)) if meta is not None else None
    return g, a


def _edge_order(g: Graph) -> list[tuple[int, int]]:
    """Edge listing whose first-appearance order reproduces the node indices."""
    adj = g.adjacency()
    emitted: set[tuple[int, int]] = set()
    out: list[tuple[int, int]] = []
    seen = 0
    for v in range(g.n):
        if v < seen or not adj[v]:
            continue
        earlier = sorted(w for w in adj[v] if w < v)
        if earlier:
            e = (earlier[0], v)
        elif v + 1 in adj[v]:
            e = (v, v + 1)
        else:
            raise ValueError(f"node {v}: indexing cannot be reproduced by an edge list")
        out.append(e)
        emitted.add(e)
        seen = max(seen, e[1] + 1)
    out.extend(e for e in sorted(g.edges) if e not in emitted)
    return out


def write_edge_list(g: Graph, dest: IO[str] | str | Path) -> None:
    names = g.node_labels or tuple(str(i) for i in range(g.n))
    deg = g.degrees
    isolated = [v for v in range(g.n) if deg[v] == 0]
    active = [v for v in range(g.n) if deg[v] > 0]
    if isolated and active and min(isolated) < max(active):
        raise ValueError("isolated nodes must follow all other nodes to round-trip")
    text = "".join(f"{names[i]} {names[j]}\n" for i, j in _edge_order(g))
    _write(dest, text)


def write_metadata(g: Graph, a: MetadataAssignment, dest: IO[str] | str | Path) -> None:
    names = g.node_labels or tuple(str(i) for i in range(g.n))
    _write(dest, "".join(f"{names[i]}\t{a.labels[i]}\n" for i in range(g.n)))


def _write(dest, text: str) -> None:
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)


def fixture_path(name: str, kind: str = "edges") -> Path:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    suffix = {"edges": ".edges", "metadata": ".tsv"}[kind]
    return Path(str(resources.files("assortbounds") / "data" / f"{name}{suffix}"))


def load_fixture(name: str) -> tuple[Graph, MetadataAssignment]:
    g, a = load_graph(fixture_path(name), fixture_path(name, "metadata"))
    return g, a


def facebook_counts() -> dict:
    text = (resources.files("assortbounds") / "data" / "facebook_counts.json").read_text("utf-8")
    data = json.loads(text)
    data.pop("_note", None)
    return data
