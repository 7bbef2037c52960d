"""Campaign loop comparing one-hop, multi-hop and multi-hop-with-suggestion recruitment."""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from .behavior import (
    ProfileTable,
    Streams,
    TASKS,
    Task,
    choose_requesters,
    contribution_rng,
    generate_profiles,
    generate_task,
    sample_contribution,
    sample_requester_evaluation,
    social_factors,
)
from .config import SimConfig
from .fixture import load_graph
from .graph import TrustGraph
from .recruitment import Route, recruit
from .suggestion import (
    ImplicitTrustLedger,
    apply_suggestions,
    build_suggestion_list,
    record_implicit,
    record_intermediates,
)
from .trust import (
    FuzzySystem,
    apply_trust_update,
    effective_top,
    evaluate_top,
    fuzzy_toc,
    overall_trust,
    reputation_table,
)

log = logging.getLogger(__name__)


class StrategyKind(str, enum.Enum):
    ONE_HOP = "onehop"
    MULTI_HOP = "multihop"
    MULTI_HOP_FS = "multihop_fs"


@dataclass(frozen=True)
class Contribution:
    task: int
    participant: str
    route: Route
    qoc: float
    top: float
    top_effective: float
    toc: float
    re: float
    revoked: bool


@dataclass
class CampaignResult:
    task: int
    recruited: int
    routes: list[Route]
    contributions: list[Contribution]
    overall_trust: float | None
    mrt: float | None


@dataclass(frozen=True)
class IntervalMetrics:
    interval: int
    avg_participants: float | None
    avg_mrt: float | None
    avg_overall_trust: float | None
    campaigns: int


@dataclass(frozen=True)
class SuggestionRecord:
    interval: int
    requester: str
    participant: str
    implicit_trust: float
    intermediate_count: int


@dataclass
class SimState:
    config: SimConfig
    graph: TrustGraph
    profiles: ProfileTable
    streams: Streams
    requester_pool: list[str]
    fuzzy: FuzzySystem
    reputation: dict[str, float]
    ledger: ImplicitTrustLedger = field(default_factory=ImplicitTrustLedger)
    factors: dict = field(default_factory=dict)
    interval: int = 0
    task_counter: int = 0
    task_rng: object = None
    suggestions: list[SuggestionRecord] = field(default_factory=list)


def new_state(config: SimConfig, graph: TrustGraph, profiles: ProfileTable | None = None) -> SimState:
    """Fresh arm state on a private copy of ``graph``.

    Everything random derives from ``config.seed``, so two states built from
    the same inputs replay the same tasks and draws.
    """
    graph = graph.copy()
    streams = Streams(config.seed)
    if profiles is None:
        profiles = generate_profiles(graph, config, config.seed)
    return SimState(
        config=config,
        graph=graph,
        profiles=profiles,
        streams=streams,
        requester_pool=choose_requesters(graph, config.num_requesters, config.seed),
        fuzzy=FuzzySystem.from_config(config),
        reputation=reputation_table(graph),
        task_rng=streams.rng(TASKS),
    )


def compute_mrt(routes) -> float | None:
    """Mean route trust: total route trust over total hop count."""
    routes = list(routes)
    if not routes:
        return None
    return sum(r.trust for r in routes) / sum(r.length for r in routes)


def _mean(values) -> float | None:
    values = [v for v in values if v is not None]
    return sum(values) / len(values) if values else None


def _select_routes(state: SimState, strategy: StrategyKind, task: Task) -> dict[str, Route]:
    requester = task.requester
    if strategy is StrategyKind.ONE_HOP:
        return {
            nbr: Route((requester, nbr), w)
            for nbr, w in state.graph.out_neighbors(requester)
        }
    cfg = state.config
    return recruit(state.graph, state.profiles, task, cfg.hop_limit, cfg.direct_edge_rule).routes


def run_campaign(state: SimState, strategy: StrategyKind | str, task: Task) -> CampaignResult:
    strategy = StrategyKind(strategy)
    cfg = state.config
    graph = state.graph
    requester = task.requester
    routes = _select_routes(state, strategy, task)
    rho = state.reputation[requester]

    contributions = []
    for name in sorted(routes):
        route = routes[name]
        rng = contribution_rng(state.streams, task.id, graph.index(name))
        profile = state.profiles[name]
        draw = sample_contribution(profile, task, rng, cfg.p_respond, cfg.sigma_qoc)
        re = sample_requester_evaluation(draw.qoc, rng, cfg.sigma_re)
        if not draw.responded:
            continue
        factors = social_factors(state, requester, name)
        top = evaluate_top(profile, task, factors, cfg.top_weights)
        top_eff = effective_top(top, route.trust)
        toc = fuzzy_toc(draw.qoc, top_eff, state.fuzzy)
        contributions.append(Contribution(
            task=task.id, participant=name, route=route, qoc=draw.qoc, top=top,
            top_effective=top_eff, toc=toc, re=re, revoked=toc < cfg.revocation,
        ))

    # Trust updates are applied together once every contribution is scored.
    for c in contributions:
        apply_trust_update(graph, c.route, c.toc, rho, c.re, cfg.th1, cfg.th2)
        if (strategy is StrategyKind.MULTI_HOP_FS and c.route.length > 1
                and not graph.has_edge(requester, c.participant)):
            record_implicit(state.ledger, requester, c.participant, c.toc, rho, c.re,
                            cfg.th1, cfg.th2, via=c.route.intermediates)
    if strategy is StrategyKind.MULTI_HOP_FS:
        for route in routes.values():
            record_intermediates(state.ledger, requester, route)

    ordered = [routes[name] for name in sorted(routes)]
    return CampaignResult(
        task=task.id,
        recruited=len(contributions),
        routes=ordered,
        contributions=contributions,
        overall_trust=overall_trust([c.toc for c in contributions], cfg.revocation),
        mrt=compute_mrt(ordered),
    )


def run_interval(state: SimState, strategy: StrategyKind | str, n_tasks: int) -> IntervalMetrics:
    """Run ``n_tasks`` campaigns, then the end-of-interval bookkeeping."""
    if n_tasks < 0:
        raise ValueError("n_tasks must be >= 0")
    strategy = StrategyKind(strategy)
    cfg = state.config
    results = [run_campaign(state, strategy, generate_task(state, cfg)) for _ in range(n_tasks)]
    metrics = IntervalMetrics(
        interval=state.interval,
        avg_participants=_mean(r.recruited for r in results),
        avg_mrt=_mean(r.mrt for r in results),
        avg_overall_trust=_mean(r.overall_trust for r in results),
        campaigns=len(results),
    )
    state.reputation = reputation_table(state.graph)
    if strategy is StrategyKind.MULTI_HOP_FS:
        added = 0
        for requester in state.requester_pool:
            suggestions = build_suggestion_list(
                state.ledger, requester, cfg.suggestion_max, cfg.eligibility, state.graph)
            state.suggestions.extend(
                SuggestionRecord(state.interval, requester, e.participant, e.implicit_trust, e.intermediate_count)
                for e in suggestions.entries
            )
            added += apply_suggestions(state.graph, state.ledger, suggestions)
        log.debug("interval %d: %d friendships added", state.interval, added)
    state.interval += 1
    return metrics


@dataclass
class SimulationResult:
    config: SimConfig
    metrics: dict[str, list[IntervalMetrics]]
    suggestions: dict[str, list[SuggestionRecord]]


def run_arm(config: SimConfig, strategy: StrategyKind | str, graph: TrustGraph,
            profiles: ProfileTable | None = None) -> tuple[list[IntervalMetrics], list[SuggestionRecord]]:
    state = new_state(config, graph, profiles)
    series = [run_interval(state, strategy, config.tasks_per_interval) for _ in range(config.intervals)]
    return series, state.suggestions


def run_simulation(config: SimConfig, graph: TrustGraph | None = None) -> SimulationResult:
    """Every configured strategy on its own copy of the graph, same seed."""
    if graph is None:
        graph = load_graph(config)
    profiles = generate_profiles(graph, config, config.seed)
    metrics, suggestions = {}, {}
    for name in config.strategies:
        log.info("running %s (seed %d)", name, config.seed)
        metrics[name], suggestions[name] = run_arm(config, name, graph, profiles)
    return SimulationResult(config, metrics, suggestions)
