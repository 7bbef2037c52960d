"""Directed trust graph, edge-list ingestion and edge mutation.

Node identifiers are opaque strings.  Internally every node gets a dense
integer index assigned in lexicographic order of its identifier, so that
ordering by index and ordering by identifier always agree.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

import numpy as np

DEFAULT_RATINGS: dict[str, float] = {
    "master": 0.8,
    "journeyer": 0.6,
    "apprentice": 0.4,
}

# Advogato dumps in Graphviz form: "alice" -> "bob" [level="Master"];
_DOT_EDGE = re.compile(r'^"?([^"\s]+)"?\s*->\s*"?([^"\s\[]+)"?\s*\[\s*level\s*=\s*"?(\w+)"?\s*\]\s*;?$')


class GraphError(ValueError):
    """Raised for malformed input or an illegal graph mutation."""


@dataclass(frozen=True)
class RatingMapping:
    """Maps rating tokens (case-insensitive) to trust values in [0, 1]."""

    levels: Mapping[str, float] = field(default_factory=lambda: dict(DEFAULT_RATINGS))

    def __post_init__(self):
        normalized: dict[str, float] = {}
        for token, value in self.levels.items():
            key = token.lower()
            if key in normalized:
                raise GraphError(f"duplicate rating token {token!r}")
            if not 0.0 <= value <= 1.0:
                raise GraphError(f"rating {token!r}={value} outside [0, 1]")
            normalized[key] = float(value)
        object.__setattr__(self, "levels", normalized)

    def resolve(self, token: str) -> float:
        key = token.lower()
        if key in self.levels:
            return self.levels[key]
        try:
            value = float(token)
        except ValueError:
            raise GraphError(f"unknown rating token {token!r}") from None
        if not 0.0 <= value <= 1.0:
            raise GraphError(f"rating {value} outside [0, 1]")
        return value


@dataclass(frozen=True)
class GraphStats:
    node_count: int
    edge_count: int
    rating_histogram: dict[float, int]


class TrustGraph:
    """Weighted directed graph with trust weights in [0, 1].

    The node set is fixed at construction.  Edge weights can be changed with
    :meth:`set_edge_trust` and new edges inserted with :meth:`add_friendship`;
    both keep the compressed adjacency arrays used by the route kernels in
    sync.
    """

    def __init__(self, nodes: Iterable[str] = (), edges: Mapping[tuple[str, str], float] | None = None):
        edges = dict(edges or {})
        names = set(nodes)
        for src, dst in edges:
            names.add(src)
            names.add(dst)
        self._names: list[str] = sorted(names)
        self._index: dict[str, int] = {name: i for i, name in enumerate(self._names)}
        self._out: list[dict[int, float]] = [{} for _ in self._names]
        self._in_degree = np.zeros(len(self._names), dtype=np.int64)
        for (src, dst), weight in edges.items():
            self._insert(src, dst, weight)
        self._csr = None

    # -- construction helpers -------------------------------------------------

    def _insert(self, src: str, dst: str, weight: float) -> None:
        if src == dst:
            raise GraphError(f"self-loop on {src!r}")
        weight = float(weight)
        if not 0.0 <= weight <= 1.0:
            raise GraphError(f"trust {weight} on {src!r}->{dst!r} outside [0, 1]")
        u, v = self._index[src], self._index[dst]
        if v in self._out[u]:
            raise GraphError(f"duplicate edge {src!r}->{dst!r}")
        self._out[u][v] = weight
        self._in_degree[v] += 1

    def copy(self) -> "TrustGraph":
        clone = TrustGraph.__new__(TrustGraph)
        clone._names = self._names
        clone._index = self._index
        clone._out = [dict(adj) for adj in self._out]
        clone._in_degree = self._in_degree.copy()
        clone._csr = None
        return clone

    # -- queries ---------------------------------------------------------------

    @property
    def nodes(self) -> list[str]:
        return list(self._names)

    @property
    def node_count(self) -> int:
        return len(self._names)

    @property
    def edge_count(self) -> int:
        return sum(len(adj) for adj in self._out)

    def __contains__(self, node: str) -> bool:
        return node in self._index

    def index(self, node: str) -> int:
        try:
            return self._index[node]
        except KeyError:
            raise GraphError(f"unknown node {node!r}") from None

    def name(self, idx: int) -> str:
        return self._names[idx]

    def has_edge(self, src: str, dst: str) -> bool:
        u = self._index.get(src)
        v = self._index.get(dst)
        return u is not None and v is not None and v in self._out[u]

    def trust(self, src: str, dst: str) -> float:
        u, v = self.index(src), self.index(dst)
        try:
            return self._out[u][v]
        except KeyError:
            raise GraphError(f"missing edge {src!r}->{dst!r}") from None

    def edges(self) -> Iterator[tuple[str, str, float]]:
        """All edges sorted by (source, target)."""
        for u, adj in enumerate(self._out):
            for v in sorted(adj):
                yield self._names[u], self._names[v], adj[v]

    def out_neighbors(self, node: str, traversable: bool = True) -> list[tuple[str, float]]:
        """Out-neighbours in ascending id order.

        With ``traversable`` set, zero-trust edges are left out: they stay in
        the graph but never carry a task.
        """
        adj = self._out[self.index(node)]
        return [
            (self._names[v], adj[v])
            for v in sorted(adj)
            if not traversable or adj[v] > 0.0
        ]

    def out_degree(self, node: str) -> int:
        return len(self._out[self.index(node)])

    def in_weights(self, node: str) -> list[float]:
        v = self.index(node)
        return [adj[v] for adj in self._out if v in adj]

    # -- mutation --------------------------------------------------------------

    def set_edge_trust(self, src: str, dst: str, delta: float) -> float:
        """Add ``delta`` to the edge weight, clamp to [0, 1], return the result."""
        u, v = self.index(src), self.index(dst)
        adj = self._out[u]
        if v not in adj:
            raise GraphError(f"missing edge {src!r}->{dst!r}")
        value = min(1.0, max(0.0, adj[v] + delta))
        adj[v] = value
        if self._csr is not None:
            self._csr[2][self._csr[3][u, v]] = value
        return value

    def add_friendship(self, src: str, dst: str, initial_trust: float) -> None:
        self.index(src)
        self.index(dst)
        if self.has_edge(src, dst):
            raise GraphError(f"edge {src!r}->{dst!r} already exists")
        self._insert(src, dst, initial_trust)
        self._csr = None

    # -- kernel view -------------------------------------------------------------

    def csr(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Compressed adjacency ``(indptr, indices, weights)``, rows sorted.

        The weight array is updated in place by :meth:`set_edge_trust`, so
        callers must treat it as read-only.
        """
        if self._csr is None:
            n = len(self._out)
            indptr = np.zeros(n + 1, dtype=np.int64)
            indices = np.empty(self.edge_count, dtype=np.int64)
            weights = np.empty(self.edge_count, dtype=np.float64)
            pos: dict[tuple[int, int], int] = {}
            k = 0
            for u, adj in enumerate(self._out):
                for v in sorted(adj):
                    indices[k] = v
                    weights[k] = adj[v]
                    pos[u, v] = k
                    k += 1
                indptr[u + 1] = k
            self._csr = (indptr, indices, weights, pos)
        return self._csr[0], self._csr[1], self._csr[2]

    def in_degrees(self) -> np.ndarray:
        return self._in_degree.copy()

    def out_degrees(self) -> np.ndarray:
        return np.fromiter((len(adj) for adj in self._out), dtype=np.int64, count=len(self._out))


def parse_trust_graph(text: str, mapping: RatingMapping | None = None) -> TrustGraph:
    """Parse an edge list (``source target rating`` per line).

    Blank lines and ``#`` comments are skipped.  Ratings are mapping tokens
    or decimals in [0, 1].  Graphviz-style Advogato dumps are accepted too.
    """
    mapping = mapping or RatingMapping()
    edges: dict[tuple[str, str], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "->" in line:
            m = _DOT_EDGE.match(line)
            if m is None:
                raise GraphError(f"line {lineno}: unreadable edge {raw!r}")
            src, dst, token = m.groups()
        elif line.startswith("digraph") or line == "}" or line.endswith(";"):
            continue
        else:
            fields = line.split()
            if len(fields) != 3:
                raise GraphError(f"line {lineno}: expected 'source target rating', got {raw!r}")
            src, dst, token = fields
        if src == dst:
            raise GraphError(f"line {lineno}: self-loop on {src!r}")
        if (src, dst) in edges:
            raise GraphError(f"line {lineno}: duplicate edge {src!r}->{dst!r}")
        try:
            edges[src, dst] = mapping.resolve(token)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    return TrustGraph(edges=edges)


def load_trust_graph(path, mapping: RatingMapping | None = None) -> TrustGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_trust_graph(fh.read(), mapping)


def serialize_trust_graph(graph: TrustGraph) -> str:
    return "".join(f"{src}\t{dst}\t{weight!r}\n" for src, dst, weight in graph.edges())


def graph_stats(graph: TrustGraph) -> GraphStats:
    histogram = Counter(weight for _, _, weight in graph.edges())
    return GraphStats(graph.node_count, graph.edge_count, dict(sorted(histogram.items(), reverse=True)))
