"""Seeded synthetic stand-in for the Advogato web of trust."""

from __future__ import annotations

import functools

import numpy as np

from .graph import TrustGraph, load_trust_graph, parse_trust_graph

ADVOGATO_NODES = 14019
ADVOGATO_EDGES = 47347
ADVOGATO_HISTOGRAM = {0.8: 17306, 0.6: 21353, 0.4: 8688}


class FixtureError(ValueError):
    pass


def generate_fixture(seed: int, node_count: int = ADVOGATO_NODES, edge_count: int = ADVOGATO_EDGES,
                     histogram: dict[float, int] | None = None) -> str:
    """Random simple directed graph with exactly ``histogram`` ratings, as edge-list text.

    When there are enough edges every node gets at least one, so the parsed
    graph has exactly ``node_count`` nodes.
    """
    if histogram is None:
        histogram = ADVOGATO_HISTOGRAM
    if node_count < 0 or edge_count < 0 or any(c < 0 for c in histogram.values()):
        raise FixtureError("counts must be non-negative")
    if sum(histogram.values()) != edge_count:
        raise FixtureError(f"histogram sums to {sum(histogram.values())}, expected {edge_count}")
    if edge_count > node_count * (node_count - 1):
        raise FixtureError(f"{edge_count} edges do not fit a simple graph on {node_count} nodes")
    if any(not 0.0 <= w <= 1.0 for w in histogram):
        raise FixtureError("ratings must lie in [0, 1]")

    rng = np.random.Generator(np.random.PCG64(seed))
    width = len(str(max(node_count - 1, 0)))
    names = [f"u{i:0{width}d}" for i in range(node_count)]

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def take(u: int, v: int) -> None:
        if u != v and (u, v) not in seen:
            seen.add((u, v))
            edges.append((u, v))

    if node_count >= 2 and 2 * edge_count >= node_count + 1:
        # cover every node: pair up a random permutation
        perm = rng.permutation(node_count).tolist()
        for k in range(0, node_count - 1, 2):
            take(perm[k], perm[k + 1])
        if node_count % 2:
            take(perm[-1], perm[int(rng.integers(node_count - 1))])

    if edge_count > node_count * (node_count - 1) // 2:
        pool = [(u, v) for u in range(node_count) for v in range(node_count) if u != v and (u, v) not in seen]
        for i in rng.permutation(len(pool))[: edge_count - len(edges)].tolist():
            take(*pool[i])
    while len(edges) < edge_count:
        need = edge_count - len(edges)
        batch = rng.integers(node_count, size=(need + need // 8 + 16, 2)).tolist()
        for u, v in batch:
            take(u, v)
            if len(edges) == edge_count:
                break

    ratings = np.repeat(np.array(list(histogram.keys()), dtype=float), list(histogram.values()))
    ratings = rng.permutation(ratings).tolist()
    rows = sorted((names[u], names[v], w) for (u, v), w in zip(edges, ratings))
    return "".join(f"{s}\t{d}\t{w!r}\n" for s, d, w in rows)


@functools.lru_cache(maxsize=4)
def _synthetic_text(seed: int) -> str:
    return generate_fixture(seed)


def load_graph(config) -> TrustGraph:
    """The graph named by ``config.graph_path``; ``synthetic`` means the bundled fixture."""
    if config.graph_path == "synthetic":
        return parse_trust_graph(_synthetic_text(config.fixture_seed))
    return load_trust_graph(config.graph_path)
