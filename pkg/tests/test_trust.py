import numpy as np
import pytest
from hypothesis import given, strategies as st

from trustrecruit.behavior import ParticipantProfile, SocialFactors, Task
from trustrecruit.config import SimConfig
from trustrecruit.graph import GraphError, TrustGraph
from trustrecruit.recruitment import Route
from trustrecruit.trust import (
    DEFAULT_FUZZY,
    FuzzySystem,
    apply_trust_update,
    compute_reputation,
    effective_top,
    evaluate_top,
    fuzzy_toc,
    overall_trust,
    reputation_table,
    triangle,
    update_amount,
)


def brute_centroid(qoc, top, system):
    """Independent scalar Mamdani evaluation used as an oracle."""
    tri = {"L": system.low, "M": system.med, "H": system.high}
    mu_q = {k: triangle(qoc, *v) for k, v in tri.items()}
    mu_t = {k: triangle(top, *v) for k, v in tri.items()}
    num = den = 0.0
    for i in range(system.samples):
        z = i / (system.samples - 1)
        level = 0.0
        for i_q, q in enumerate("LMH"):
            for i_t, t in enumerate("LMH"):
                out = system.rules[i_q][i_t]
                level = max(level, min(mu_q[q], mu_t[t], triangle(z, *tri[out])))
        num += z * level
        den += level
    return num / den


@pytest.mark.parametrize("qoc, top, expected", [(1, 1, 0.8333), (0, 0, 0.1667), (0, 0.5, 0.1667),
                                                 (0, 1, 0.1667), (0.5, 0.5, 0.5)])
def test_fuzzy_anchor_points(qoc, top, expected):
    assert fuzzy_toc(qoc, top) == pytest.approx(expected, abs=0.01)


@pytest.mark.parametrize("qoc, top", [(0.3, 0.7), (0.9, 0.2), (0.65, 0.65), (0.1, 0.9)])
def test_fuzzy_matches_scalar_oracle(qoc, top):
    assert fuzzy_toc(qoc, top) == pytest.approx(brute_centroid(qoc, top, DEFAULT_FUZZY), abs=1e-12)


def test_fuzzy_output_bounded_by_outer_centroids():
    grid = np.linspace(0, 1, 21)
    table = np.array([[fuzzy_toc(q, t) for t in grid] for q in grid])
    assert table.min() >= fuzzy_toc(0, 0) - 1e-12
    assert table.max() <= fuzzy_toc(1, 1) + 1e-12


def test_fuzzy_clip_height_moves_centroid():
    # Only the low output set fires for QoC 0, but its clip height dips where
    # two input sets cross, which shifts the centroid upward.
    assert fuzzy_toc(0, 0.25) > fuzzy_toc(0, 0.5)


def test_fuzzy_rejects_bad_rules():
    with pytest.raises(ValueError):
        FuzzySystem(rules=(("L", "L"),))
    cfg = SimConfig()
    assert FuzzySystem.from_config(cfg) == DEFAULT_FUZZY


def test_triangle_shoulders():
    assert triangle(0.0, 0.0, 0.0, 0.5) == 1.0
    assert triangle(1.0, 0.5, 1.0, 1.0) == 1.0
    assert triangle(0.25, 0.0, 0.5, 1.0) == 0.5
    assert triangle(1.2, 0.0, 0.5, 1.0) == 0.0


def test_update_example():
    g = TrustGraph(edges={("a", "b"): 0.7, ("b", "c"): 0.4})
    gamma = apply_trust_update(g, Route(("a", "b", "c"), 0.28), 0.8, 0.7, 0.9)
    assert gamma == pytest.approx(0.17)
    assert g.trust("a", "b") == pytest.approx(0.87)
    assert g.trust("b", "c") == pytest.approx(0.57)


def test_penalty_hits_last_edge_only():
    g = TrustGraph(edges={("a", "b"): 0.7, ("b", "c"): 0.4})
    apply_trust_update(g, Route(("a", "b", "c"), 0.28), 0.1, 0.5, 0.9)
    assert g.trust("a", "b") == 0.7
    assert g.trust("b", "c") == pytest.approx(0.05)


def test_dead_zone_and_missing_edge():
    g = TrustGraph(edges={("a", "b"): 0.7})
    before = list(g.edges())
    apply_trust_update(g, Route(("a", "b"), 0.7), 0.5, 0.2, 0.2)
    assert list(g.edges()) == before
    with pytest.raises(GraphError):
        apply_trust_update(g, Route(("a", "c"), 0.5), 0.9, 0.1, 0.1)


def test_top_and_effective_top():
    prof = ParticipantProfile("p", (0.9,), (0.8,), 0.7, 0.5)
    factors = SocialFactors("r", "p", 0.6, 0.5)
    top = evaluate_top(prof, Task(0, "r", 0, 0), factors, (0.2,) * 5)
    assert top == pytest.approx(0.7)
    assert effective_top(0.85, 0.684) == pytest.approx(0.5814)
    with pytest.raises(ValueError):
        evaluate_top(prof, Task(0, "r", 0, 0), factors, (0.2,) * 4)
    with pytest.raises(ValueError):
        evaluate_top(prof, Task(0, "r", 0, 0), factors, (0.3,) * 5)


def test_reputation_and_overall_trust():
    g = TrustGraph(edges={("a", "c"): 0.8, ("b", "c"): 0.6})
    assert compute_reputation(g, "c") == pytest.approx(0.7)
    assert compute_reputation(g, "a") == 0.5
    assert reputation_table(g) == {"a": 0.5, "b": 0.5, "c": pytest.approx(0.7)}
    assert overall_trust([0.9, 0.6, 0.3]) == pytest.approx(0.75)
    assert overall_trust([0.2, 0.4]) is None
    assert overall_trust([0.5]) == 0.5


@given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1))
def test_gamma_in_unit_interval(toc, rho, re):
    assert 0.0 <= update_amount(toc, rho, re) <= 1.0
