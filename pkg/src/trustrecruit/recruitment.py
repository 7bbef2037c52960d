"""Participant selection within L hops and most-trusted route discovery.

Route trust is the product of edge weights.  :func:`best_route` and
:func:`recruit` use the hop-indexed kernels in ``_kernels``;
:func:`enumerate_routes` is an exhaustive depth-first search kept
independent of them so it can serve as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import _kernels
from .behavior import ProfileTable, Task
from .graph import TrustGraph


@dataclass(frozen=True)
class Route:
    nodes: tuple[str, ...]
    trust: float

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    @property
    def requester(self) -> str:
        return self.nodes[0]

    @property
    def participant(self) -> str:
        return self.nodes[-1]

    @property
    def intermediates(self) -> tuple[str, ...]:
        return self.nodes[1:-1]

    def edges(self):
        return zip(self.nodes, self.nodes[1:])


@dataclass
class SelectionResult:
    task: int
    participants: set[str] = field(default_factory=set)
    routes: dict[str, Route] = field(default_factory=dict)


def route_trust(weights) -> float:
    weights = list(weights)
    if not weights:
        raise ValueError("a route needs at least one edge")
    return math.prod(weights)


def _check_hops(L: int) -> None:
    if L < 1:
        raise ValueError(f"hop limit must be >= 1, got {L}")


def select_participants(graph: TrustGraph, profiles: ProfileTable, task: Task, L: int) -> set[str]:
    """Suitable nodes reachable from the requester over at most ``L`` traversable edges.

    Suitable means locality in the task region and expertise in the task
    topic both reach their thresholds (equality passes).
    """
    _check_hops(L)
    src = graph.index(task.requester)
    ball = _kernels.hop_ball(*graph.csr(), src, L)
    if not ball:
        return set()
    mask = profiles.suitable_mask(task)
    return {graph.name(v) for v in ball if mask[v]}


def _route_from(graph: TrustGraph, trust: float, path) -> Route:
    return Route(tuple(graph.name(i) for i in path), trust)


def best_route(graph: TrustGraph, src: str, dst: str, L: int, prefer_direct: bool = False) -> Route | None:
    """Most trusted route of at most ``L`` hops, or ``None``.

    Ties are broken by fewer hops, then the lexicographically smallest node
    sequence.  With ``prefer_direct`` a traversable direct edge is returned
    even when some longer route carries more trust.
    """
    _check_hops(L)
    if src == dst:
        raise ValueError("source and destination coincide")
    s, d = graph.index(src), graph.index(dst)
    if prefer_direct and graph.has_edge(src, dst) and graph.trust(src, dst) > 0.0:
        return Route((src, dst), graph.trust(src, dst))
    found = _kernels.best_routes(*graph.csr(), s, L).get(d)
    return None if found is None else _route_from(graph, *found)


def enumerate_routes(graph: TrustGraph, src: str, dst: str, L: int) -> list[Route]:
    """Every simple path ``src -> dst`` with at most ``L`` traversable edges.

    Routes come out in lexicographic order of their node sequences.
    """
    _check_hops(L)
    if src == dst:
        raise ValueError("source and destination coincide")
    graph.index(src)
    graph.index(dst)
    routes: list[Route] = []
    path = [src]
    weights: list[float] = []

    def visit(node: str) -> None:
        for nbr, w in graph.out_neighbors(node):
            if nbr in path:
                continue
            path.append(nbr)
            weights.append(w)
            if nbr == dst:
                routes.append(Route(tuple(path), route_trust(weights)))
            elif len(weights) < L:
                visit(nbr)
            path.pop()
            weights.pop()

    visit(src)
    return routes


def recruit(graph: TrustGraph, profiles: ProfileTable, task: Task, L: int,
            prefer_direct: bool = False) -> SelectionResult:
    """Select suitable participants and attach the most trusted route to each."""
    suitable = select_participants(graph, profiles, task, L)
    result = SelectionResult(task=task.id)
    if not suitable:
        return result
    src = task.requester
    found = _kernels.best_routes(*graph.csr(), graph.index(src), L)
    for name in sorted(suitable):
        if prefer_direct and graph.has_edge(src, name) and graph.trust(src, name) > 0.0:
            route = Route((src, name), graph.trust(src, name))
        else:
            hit = found.get(graph.index(name))
            if hit is None:
                continue
            route = _route_from(graph, *hit)
        result.participants.add(name)
        result.routes[name] = route
    return result

