import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from hooklab.partitions import Partition

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def partitions_st(max_size: int = 40, max_part: int = 20):
    """Hypothesis strategy for partitions of size at most ``max_size``."""
    def build(parts):
        out, total = [], 0
        for p in sorted(parts, reverse=True):
            if total + p > max_size:
                continue
            out.append(p)
            total += p
        return Partition(sorted(out, reverse=True))
    return st.lists(st.integers(1, max_part), max_size=max_size).map(build)


def random_partition(rng: random.Random, n: int) -> Partition:
    """Random partition of ``n`` from a random composition."""
    parts, left = [], n
    while left:
        p = rng.randint(1, left)
        parts.append(p)
        left -= p
    return Partition.from_parts(parts)


@pytest.fixture
def rng():
    return random.Random(20260415)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
