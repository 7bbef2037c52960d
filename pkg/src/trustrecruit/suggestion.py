"""Friend suggestion: implicit trust toward non-friends and intermediate-node ranking."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from .graph import TrustGraph
from .recruitment import Route
from .trust import update_amount


@dataclass
class ImplicitTrustLedger:
    implicit: dict[tuple[str, str], float] = field(default_factory=dict)
    intermediate_counts: dict[str, dict[str, int]] = field(default_factory=lambda: defaultdict(dict))
    via: dict[tuple[str, str], tuple[str, ...]] = field(default_factory=dict)
    retired: set[tuple[str, str]] = field(default_factory=set)

    def count(self, requester: str, node: str) -> int:
        return self.intermediate_counts.get(requester, {}).get(node, 0)


@dataclass(frozen=True)
class SuggestionEntry:
    participant: str
    implicit_trust: float
    via: tuple[str, ...]
    intermediate_count: int


@dataclass(frozen=True)
class SuggestionList:
    requester: str
    entries: tuple[SuggestionEntry, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)


def record_implicit(ledger: ImplicitTrustLedger, requester: str, participant: str, toc: float,
                    rho_req: float, re: float, th1: float = 0.7, th2: float = 0.3,
                    via: tuple[str, ...] | None = None, graph: TrustGraph | None = None) -> float:
    """Move the requester's implicit trust in a non-friend by ``|ToC - rho*RE|``.

    Starts at 0, rises above ``th1``, falls below ``th2``, clamped to [0, 1].
    ``graph``, when given, is used to reject one-hop friends.
    """
    key = (requester, participant)
    if key in ledger.retired or (graph is not None and graph.has_edge(requester, participant)):
        raise ValueError(f"{participant!r} is already a one-hop friend of {requester!r}")
    value = ledger.implicit.get(key, 0.0)
    gamma = update_amount(toc, rho_req, re)
    if toc > th1:
        value = min(1.0, value + gamma)
    elif toc < th2:
        value = max(0.0, value - gamma)
    ledger.implicit[key] = value
    if via is not None:
        ledger.via[key] = tuple(via)
    return value


def record_intermediates(ledger: ImplicitTrustLedger, requester: str, route: Route) -> None:
    if route.nodes[0] != requester:
        raise ValueError("route does not start at the requester")
    counts = ledger.intermediate_counts[requester]
    for node in route.intermediates:
        counts[node] = counts.get(node, 0) + 1


def build_suggestion_list(ledger: ImplicitTrustLedger, requester: str, max_len: int = 50,
                          eligibility: float = 0.5, graph: TrustGraph | None = None) -> SuggestionList:
    """Eligible candidates ranked by intermediate count, implicit trust, then id."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    candidates = []
    for (req, participant), value in ledger.implicit.items():
        if req != requester or value <= eligibility:
            continue
        if (req, participant) in ledger.retired:
            continue
        if graph is not None and graph.has_edge(req, participant):
            continue
        count = ledger.count(requester, participant)
        candidates.append(SuggestionEntry(participant, value, ledger.via.get((req, participant), ()), count))
    candidates.sort(key=lambda e: (-e.intermediate_count, -e.implicit_trust, e.participant))
    return SuggestionList(requester, tuple(candidates[:max_len]))


def apply_suggestions(graph: TrustGraph, ledger: ImplicitTrustLedger, suggestions: SuggestionList) -> int:
    """Befriend every suggested participant at its implicit trust; returns edges added."""
    added = 0
    requester = suggestions.requester
    for entry in suggestions.entries:
        key = (requester, entry.participant)
        if not graph.has_edge(requester, entry.participant):
            graph.add_friendship(requester, entry.participant, entry.implicit_trust)
            added += 1
        ledger.retired.add(key)
        ledger.implicit.pop(key, None)
        ledger.via.pop(key, None)
    return added
