import pytest
from hypothesis import given, strategies as st

from trustrecruit.graph import TrustGraph
from trustrecruit.recruitment import Route
from trustrecruit.suggestion import (
    ImplicitTrustLedger,
    apply_suggestions,
    build_suggestion_list,
    record_implicit,
    record_intermediates,
)


def test_implicit_reward_example():
    ledger = ImplicitTrustLedger()
    assert record_implicit(ledger, "r", "p", 0.8, 0.7, 0.9) == pytest.approx(0.17)


def test_implicit_penalty_clamps_at_zero():
    ledger = ImplicitTrustLedger()
    assert record_implicit(ledger, "r", "p", 0.1, 0.9, 0.9) == 0.0
    assert record_implicit(ledger, "r", "p", 0.5, 0.9, 0.9) == 0.0


def test_implicit_rejects_friends():
    g = TrustGraph(edges={("r", "p"): 0.5})
    with pytest.raises(ValueError):
        record_implicit(ImplicitTrustLedger(), "r", "p", 0.9, 0.5, 0.5, graph=g)


def test_ranking_by_count_then_trust_then_id():
    ledger = ImplicitTrustLedger()
    ledger.implicit.update({("r", "a"): 0.6, ("r", "b"): 0.9, ("r", "c"): 0.9, ("r", "d"): 0.55,
                            ("r", "e"): 0.5, ("x", "f"): 0.9})
    ledger.intermediate_counts["r"].update({"d": 3})
    names = [e.participant for e in build_suggestion_list(ledger, "r").entries]
    assert names == ["d", "b", "c", "a"]


def test_truncation_to_max_length():
    ledger = ImplicitTrustLedger()
    for i in range(60):
        ledger.implicit[("r", f"p{i:02d}")] = 0.51 + i / 1000
    lst = build_suggestion_list(ledger, "r", max_len=50)
    assert len(lst) == 50
    assert lst.entries[0].participant == "p59"
    assert len(build_suggestion_list(ledger, "r", max_len=0)) == 0


def test_intermediate_counting():
    ledger = ImplicitTrustLedger()
    record_intermediates(ledger, "r", Route(("r", "a", "b", "c"), 0.1))
    record_intermediates(ledger, "r", Route(("r", "a", "c"), 0.1))
    assert ledger.count("r", "a") == 2 and ledger.count("r", "b") == 1 and ledger.count("r", "c") == 0
    with pytest.raises(ValueError):
        record_intermediates(ledger, "q", Route(("r", "a"), 0.1))


def test_apply_adds_edges_and_retires():
    g = TrustGraph(edges={("r", "a"): 0.5, ("a", "p"): 0.5})
    ledger = ImplicitTrustLedger()
    ledger.implicit[("r", "p")] = 0.8
    lst = build_suggestion_list(ledger, "r", graph=g)
    assert apply_suggestions(g, ledger, lst) == 1
    assert g.trust("r", "p") == 0.8
    assert ("r", "p") in ledger.retired
    assert len(build_suggestion_list(ledger, "r", graph=g)) == 0
    with pytest.raises(ValueError):
        record_implicit(ledger, "r", "p", 0.9, 0.5, 0.5)


@given(st.lists(st.tuples(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1)), max_size=30))
def test_implicit_trust_stays_bounded(updates):
    ledger = ImplicitTrustLedger()
    for toc, rho, re in updates:
        value = record_implicit(ledger, "r", "p", toc, rho, re)
        assert 0.0 <= value <= 1.0
