import pytest

from tests.conftest import make_profiles
from trustrecruit.behavior import Task
from trustrecruit.config import SimConfig
from trustrecruit.graph import TrustGraph
from trustrecruit.recruitment import Route
from trustrecruit.sim import (
    StrategyKind,
    compute_mrt,
    new_state,
    run_arm,
    run_campaign,
    run_interval,
    run_simulation,
)

SMALL = SimConfig(topics=1, regions=1, num_requesters=3, intervals=3, tasks_per_interval=4)


def chain_setup(**overrides):
    """R -> A -> B where only B is suitable and always delivers perfect quality."""
    g = TrustGraph(edges={("R", "A"): 0.9, ("A", "B"): 0.9})
    cfg = SMALL.replace(p_respond=1.0, sigma_qoc=0.0, sigma_re=0.0, **overrides)
    profiles = make_profiles(g.nodes, suitable={"B"}, quality=1.0)
    state = new_state(cfg, g, profiles)
    state.requester_pool = ["R"]
    return state


def test_mrt_example():
    routes = [Route(("R", "P1"), 0.7), Route(("R", "P2", "P3", "P4"), 0.72675)]
    assert compute_mrt(routes) == pytest.approx(0.3566875)
    assert compute_mrt([]) is None


def test_campaign_without_out_neighbours(example_graph, example_profiles):
    state = new_state(SMALL, example_graph, example_profiles)
    res = run_campaign(state, "onehop", Task(0, "P4", 0, 0))
    assert res.recruited == 0 and res.mrt is None and res.overall_trust is None


def test_high_quality_contributions_survive():
    state = chain_setup()
    res = run_campaign(state, StrategyKind.MULTI_HOP, Task(0, "R", 0, 0))
    assert res.recruited == 1
    c = res.contributions[0]
    assert c.route.nodes == ("R", "A", "B")
    assert c.top_effective == pytest.approx(c.top * 0.81)
    assert res.overall_trust > 0.5 and not c.revoked
    # reward propagated to both route edges
    assert state.graph.trust("R", "A") > 0.9 and state.graph.trust("A", "B") > 0.9


def test_arm_does_not_mutate_input_graph(example_graph, example_profiles):
    before = list(example_graph.edges())
    run_arm(SMALL, "multihop_fs", example_graph, example_profiles)
    assert list(example_graph.edges()) == before


def test_zero_tasks_interval():
    state = chain_setup()
    m = run_interval(state, "multihop", 0)
    assert m.campaigns == 0 and m.avg_participants is None
    assert state.interval == 1
    with pytest.raises(ValueError):
        run_interval(state, "multihop", -1)


def test_fs_adds_friendship_after_eligible_interval():
    state = chain_setup()
    before = state.graph.edge_count
    run_interval(state, "multihop_fs", 2)
    assert state.graph.edge_count == before + 1
    assert state.graph.has_edge("R", "B")
    assert state.suggestions[0].participant == "B"
    assert state.graph.trust("R", "B") > 0.5


def test_plain_multihop_never_adds_edges():
    state = chain_setup()
    run_interval(state, "multihop", 3)
    assert state.graph.edge_count == 2


def test_multihop_covers_suitable_onehop_responders(example_graph, example_profiles):
    cfg = SMALL.replace(intervals=1, tasks_per_interval=1)
    a = new_state(cfg, example_graph, example_profiles)
    b = new_state(cfg, example_graph, example_profiles)
    task = Task(0, "R", 0, 0)
    one = run_campaign(a, "onehop", task)
    multi = run_campaign(b, "multihop", task)
    suitable = {"P1", "P4"}
    one_ok = {c.participant for c in one.contributions if c.participant in suitable}
    assert one_ok <= {c.participant for c in multi.contributions}


def test_interval_zero_equal_for_multihop_arms(example_graph, example_profiles):
    mh, _ = run_arm(SMALL, "multihop", example_graph, example_profiles)
    fs, _ = run_arm(SMALL, "multihop_fs", example_graph, example_profiles)
    assert mh[0] == fs[0]


def test_simulation_deterministic(example_graph):
    a = run_simulation(SMALL, example_graph)
    b = run_simulation(SMALL, example_graph)
    assert a.metrics == b.metrics and a.suggestions == b.suggestions
    assert set(a.metrics) == set(SMALL.strategies)
    assert all(len(series) == SMALL.intervals for series in a.metrics.values())


def test_unknown_strategy(example_graph, example_profiles):
    with pytest.raises(ValueError):
        run_arm(SMALL, "twohop", example_graph, example_profiles)
