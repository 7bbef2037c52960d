"""Synthetic participant behaviour: profiles, tasks, contributions, social factors.

Every random quantity comes from a PCG64 stream derived from the run seed
and a purpose key (see :class:`Streams`), so a draw never depends on how
many unrelated draws happened before it.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .config import SimConfig
from .graph import TrustGraph

# Purpose keys for independent random substreams.
PROFILES, POOL, TASKS, CONTRIBUTIONS, FACTORS = range(5)


class Streams:
    """Deterministic, platform-independent random substreams for one seed."""

    def __init__(self, seed: int):
        self.seed = int(seed)

    def rng(self, *key: int) -> np.random.Generator:
        return np.random.Generator(np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=key)))


@dataclass(frozen=True)
class ParticipantProfile:
    node: str
    expertise: tuple[float, ...]
    locality: tuple[float, ...]
    timeliness: float
    latent_quality: float


@dataclass(frozen=True)
class Task:
    id: int
    requester: str
    region: int
    topic: int
    locality_threshold: float = 0.5
    expertise_threshold: float = 0.5
    interval: int = 0


@dataclass(frozen=True)
class SocialFactors:
    requester: str
    participant: str
    friendship_duration: float
    interaction_timegap: float


@dataclass(frozen=True)
class ContributionDraw:
    qoc: float
    responded: bool


class ProfileTable:
    """Column-oriented profile store indexed like the graph's nodes."""

    def __init__(self, names, expertise, locality, timeliness, latent_quality):
        self.names = list(names)
        self._index = {name: i for i, name in enumerate(self.names)}
        self.expertise = np.asarray(expertise, dtype=float)
        self.locality = np.asarray(locality, dtype=float)
        self.timeliness = np.asarray(timeliness, dtype=float)
        self.latent_quality = np.asarray(latent_quality, dtype=float)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, node: str) -> bool:
        return node in self._index

    def __getitem__(self, node: str) -> ParticipantProfile:
        i = self._index[node]
        return ParticipantProfile(
            node=node,
            expertise=tuple(self.expertise[i].tolist()),
            locality=tuple(self.locality[i].tolist()),
            timeliness=float(self.timeliness[i]),
            latent_quality=float(self.latent_quality[i]),
        )

    def suitable_mask(self, task: Task) -> np.ndarray:
        return (self.locality[:, task.region] >= task.locality_threshold) & (
            self.expertise[:, task.topic] >= task.expertise_threshold
        )

    @classmethod
    def from_profiles(cls, profiles: list[ParticipantProfile]) -> "ProfileTable":
        return cls(
            [p.node for p in profiles],
            [p.expertise for p in profiles],
            [p.locality for p in profiles],
            [p.timeliness for p in profiles],
            [p.latent_quality for p in profiles],
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        n_topics, n_regions = self.expertise.shape[1], self.locality.shape[1]
        header = ["node"] + [f"topic_{t}" for t in range(n_topics)] + [f"region_{r}" for r in range(n_regions)]
        buf.write(",".join(header + ["timeliness", "latent_quality"]) + "\n")
        for i, name in enumerate(self.names):
            row = [name] + [repr(v) for v in self.expertise[i].tolist()] + [repr(v) for v in self.locality[i].tolist()]
            row += [repr(float(self.timeliness[i])), repr(float(self.latent_quality[i]))]
            buf.write(",".join(row) + "\n")
        return buf.getvalue()


def generate_profiles(graph: TrustGraph, config: SimConfig, seed: int) -> ProfileTable:
    """One profile per node.

    Expertise and locality ~ U(0, 1); timeliness ~ U(0.5, 1); latent
    quality ~ U(0.2, 1).
    """
    rng = Streams(seed).rng(PROFILES)
    n = graph.node_count
    expertise = rng.random((n, config.topics))
    locality = rng.random((n, config.regions))
    timeliness = rng.uniform(0.5, 1.0, n)
    latent_quality = rng.uniform(0.2, 1.0, n)
    return ProfileTable(graph.nodes, expertise, locality, timeliness, latent_quality)


def choose_requesters(graph: TrustGraph, count: int, seed: int) -> list[str]:
    """Fixed requester pool: ``count`` distinct nodes with out-degree >= 1."""
    candidates = [name for name, deg in zip(graph.nodes, graph.out_degrees()) if deg > 0]
    if not candidates:
        return []
    rng = Streams(seed).rng(POOL)
    picked = rng.choice(len(candidates), size=min(count, len(candidates)), replace=False)
    return sorted(candidates[i] for i in picked)


def generate_task(state, config: SimConfig) -> Task:
    """Draw the next task from ``state``'s task stream.

    ``state`` needs ``requester_pool``, ``task_rng``, ``task_counter`` and
    ``interval``; ``task_counter`` is advanced.
    """
    pool = state.requester_pool
    if not pool:
        raise ValueError("requester pool is empty")
    rng = state.task_rng
    requester = pool[int(rng.integers(len(pool)))]
    region = int(rng.integers(config.regions))
    topic = int(rng.integers(config.topics))
    task = Task(
        id=state.task_counter,
        requester=requester,
        region=region,
        topic=topic,
        locality_threshold=config.locality_threshold,
        expertise_threshold=config.expertise_threshold,
        interval=state.interval,
    )
    state.task_counter += 1
    return task


def sample_contribution(profile: ParticipantProfile, task: Task, rng: np.random.Generator,
                        p_respond: float = 0.8, sigma_qoc: float = 0.1) -> ContributionDraw:
    responded = bool(rng.random() < p_respond)
    qoc = min(1.0, max(0.0, float(rng.normal(profile.latent_quality, sigma_qoc))))
    return ContributionDraw(qoc=qoc, responded=responded)


def sample_requester_evaluation(qoc: float, rng: np.random.Generator, sigma_re: float = 0.1) -> float:
    return min(1.0, max(0.0, float(rng.normal(qoc, sigma_re))))


def social_factors(state, requester: str, participant: str) -> SocialFactors:
    """Friendship duration and interaction timegap for an ordered pair.

    Sampled U(0, 1) from the pair's own substream on first lookup and
    memoised in ``state.factors``.
    """
    key = (requester, participant)
    cached = state.factors.get(key)
    if cached is not None:
        return cached
    graph = state.graph
    i, j = graph.index(requester), graph.index(participant)
    duration, timegap = state.streams.rng(FACTORS, i, j).random(2).tolist()
    factors = SocialFactors(requester, participant, duration, timegap)
    state.factors[key] = factors
    return factors


def contribution_rng(streams: Streams, task_id: int, node_index: int) -> np.random.Generator:
    """Stream for one participant's response to one task.

    Keyed by (task, participant) so every strategy sees the same draw for
    the same person on the same task.
    """
    return streams.rng(CONTRIBUTIONS, task_id, node_index)

