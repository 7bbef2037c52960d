import pytest

from trustrecruit import _kernels
from trustrecruit.behavior import ParticipantProfile, ProfileTable
from trustrecruit.graph import TrustGraph

EXAMPLE_EDGES = {
    ("R", "P1"): 0.7,
    ("R", "P2"): 0.9,
    ("P1", "P2"): 0.75,
    ("P1", "P3"): 0.65,
    ("P2", "P3"): 0.95,
    ("P2", "P4"): 0.6,
    ("P3", "P4"): 0.85,
}


@pytest.fixture
def example_graph():
    """The five-node route-selection example: requester R, participants P1..P4."""
    return TrustGraph(edges=EXAMPLE_EDGES)


def make_profiles(names, suitable=(), quality=0.5):
    """One topic, one region; nodes in ``suitable`` score 0.9 on both, others 0.1."""
    return ProfileTable.from_profiles([
        ParticipantProfile(
            node=n,
            expertise=(0.9 if n in suitable else 0.1,),
            locality=(0.9 if n in suitable else 0.1,),
            timeliness=0.75,
            latent_quality=quality,
        )
        for n in sorted(names)
    ])


@pytest.fixture
def example_profiles(example_graph):
    return make_profiles(example_graph.nodes, suitable={"P1", "P4"})


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def kernels(request):
    return _kernels.BACKENDS[request.param]


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
