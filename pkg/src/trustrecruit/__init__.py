"""Trust-based multi-hop participant recruitment for social participatory sensing."""

from ._kernels import BACKEND
from .config import SimConfig, parse_config
from .graph import GraphStats, RatingMapping, TrustGraph, graph_stats, parse_trust_graph, serialize_trust_graph
from .recruitment import Route, best_route, enumerate_routes, recruit, route_trust, select_participants
from .sim import StrategyKind, run_simulation
from .trust import FuzzySystem, fuzzy_toc

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FuzzySystem", "GraphStats", "RatingMapping", "Route", "SimConfig", "StrategyKind",
    "TrustGraph", "best_route", "enumerate_routes", "fuzzy_toc", "graph_stats", "parse_config",
    "parse_trust_graph", "recruit", "route_trust", "run_simulation", "select_participants",
    "serialize_trust_graph",
]
