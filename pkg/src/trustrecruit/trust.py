"""Trust server: participant trust, fuzzy contribution trust, reward/penalty updates."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .behavior import ParticipantProfile, SocialFactors, Task
from .graph import GraphError, TrustGraph
from .recruitment import Route

LEVELS = ("L", "M", "H")
NEUTRAL_REPUTATION = 0.5


def triangle(x: float, a: float, b: float, c: float) -> float:
    """Triangular membership with feet ``a``, ``c`` and peak ``b``; shoulders allowed."""
    if x < a or x > c:
        return 0.0
    if x == b:
        return 1.0
    if x < b:
        return (x - a) / (b - a)
    return (c - x) / (c - b)


@dataclass(frozen=True)
class FuzzySystem:
    """Two-input Mamdani system (QoC, effective ToP) -> ToC.

    The same low/med/high triangles are used for both inputs and the output.
    ``rules[i][j]`` is the output level for QoC level ``i`` and ToP level
    ``j``.  Inference is min activation, max aggregation and centroid
    defuzzification over ``samples`` points of [0, 1].
    """

    low: tuple[float, float, float] = (0.0, 0.0, 0.5)
    med: tuple[float, float, float] = (0.0, 0.5, 1.0)
    high: tuple[float, float, float] = (0.5, 1.0, 1.0)
    # Low quality forces low trust; high quality gives high trust whatever the
    # (route-discounted) ToP; medium quality needs at least a medium ToP.
    rules: tuple[tuple[str, ...], ...] = (("L", "L", "L"), ("L", "M", "M"), ("H", "H", "H"))
    samples: int = 201
    _universe: np.ndarray = field(init=False, repr=False, compare=False)
    _output_mu: np.ndarray = field(init=False, repr=False, compare=False)
    _rule_idx: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.rules) != 3 or any(len(row) != 3 for row in self.rules):
            raise ValueError("rule table must be 3x3")
        universe = np.linspace(0.0, 1.0, self.samples)
        output = np.array([[triangle(y, *tri) for y in universe.tolist()] for tri in self.triangles])
        rule_idx = np.array([[LEVELS.index(level) for level in row] for row in self.rules])
        object.__setattr__(self, "_universe", universe)
        object.__setattr__(self, "_output_mu", output)
        object.__setattr__(self, "_rule_idx", rule_idx)

    @property
    def triangles(self):
        return (self.low, self.med, self.high)

    @classmethod
    def from_config(cls, config) -> "FuzzySystem":
        flat = config.fuzzy_rules
        rules = tuple(tuple(flat[3 * i:3 * i + 3]) for i in range(3))
        return cls(tuple(config.fuzzy_low), tuple(config.fuzzy_med), tuple(config.fuzzy_high), rules)

    def memberships(self, x: float) -> np.ndarray:
        return np.array([triangle(x, *tri) for tri in self.triangles])

    def output_levels(self, qoc: float, top: float) -> np.ndarray:
        """Aggregated firing strength per output level."""
        strength = np.minimum.outer(self.memberships(qoc), self.memberships(top))
        levels = np.zeros(3)
        np.maximum.at(levels, self._rule_idx.ravel(), strength.ravel())
        return levels

    def centroid(self, levels) -> float:
        clipped = np.minimum(self._output_mu, np.asarray(levels)[:, None]).max(axis=0)
        mass = clipped.sum()
        if mass <= 0.0:
            raise ValueError("no rule fired; membership functions do not cover the input")
        return float((clipped * self._universe).sum() / mass)


DEFAULT_FUZZY = FuzzySystem()


def fuzzy_toc(qoc: float, top_eff: float, system: FuzzySystem = DEFAULT_FUZZY) -> float:
    """Trustworthiness of a contribution from its quality and route-corrected ToP."""
    return system.centroid(system.output_levels(qoc, top_eff))


def evaluate_top(profile: ParticipantProfile, task: Task, factors: SocialFactors, weights) -> float:
    """Weighted sum of expertise, timeliness, locality, friendship duration, timegap."""
    weights = tuple(float(w) for w in weights)
    if len(weights) != 5 or any(w < 0 for w in weights):
        raise ValueError("ToP needs five non-negative weights")
    if abs(sum(weights) - 1.0) > 1e-9:
        raise ValueError(f"ToP weights sum to {sum(weights)}, expected 1")
    parts = (
        profile.expertise[task.topic],
        profile.timeliness,
        profile.locality[task.region],
        factors.friendship_duration,
        factors.interaction_timegap,
    )
    return min(1.0, max(0.0, sum(w * p for w, p in zip(weights, parts))))


def effective_top(top: float, route_trust: float) -> float:
    return top * route_trust


def update_amount(toc: float, rho_req: float, re: float) -> float:
    """Reward/penalty magnitude ``|ToC - rho_req * RE|``."""
    return abs(toc - rho_req * re)


def apply_trust_update(graph: TrustGraph, route: Route, toc: float, rho_req: float, re: float,
                       th1: float = 0.7, th2: float = 0.3) -> float:
    """Reward every edge of ``route`` when ``toc > th1``; penalise only its last
    edge when ``toc < th2``.  Returns the magnitude whether or not it was applied.
    """
    for src, dst in route.edges():
        if not graph.has_edge(src, dst):
            raise GraphError(f"route edge {src!r}->{dst!r} missing from graph")
    gamma = update_amount(toc, rho_req, re)
    if toc > th1:
        for src, dst in route.edges():
            graph.set_edge_trust(src, dst, gamma)
    elif toc < th2:
        graph.set_edge_trust(route.nodes[-2], route.nodes[-1], -gamma)
    return gamma


def compute_reputation(graph: TrustGraph, node: str) -> float:
    weights = graph.in_weights(node)
    if not weights:
        return NEUTRAL_REPUTATION
    return sum(weights) / len(weights)


def reputation_table(graph: TrustGraph) -> dict[str, float]:
    """:func:`compute_reputation` for every node in one pass over the edges."""
    totals: dict[str, list[float]] = {}
    for _, dst, weight in graph.edges():
        totals.setdefault(dst, []).append(weight)
    return {
        node: (sum(totals[node]) / len(totals[node]) if node in totals else NEUTRAL_REPUTATION)
        for node in graph.nodes
    }


def overall_trust(tocs, revocation_threshold: float = 0.5) -> float | None:
    """Mean ToC of the contributions that survive revocation, or ``None``."""
    kept = [t for t in tocs if t >= revocation_threshold]
    if not kept:
        return None
    return sum(kept) / len(kept)
