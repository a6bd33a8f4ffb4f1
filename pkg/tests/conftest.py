import itertools
import random

import pytest

from choreorient.hardness import RandomParams, gen_random
from choreorient.instance import Orientation, make_instance


def brute_orientations(instance):
    """All orientations via itertools.product, independent of the oracle's indexing."""
    choices = [(e.u,) if e.is_loop else (e.u, e.v) for e in instance.edges]
    for combo in itertools.product(*choices):
        yield Orientation(combo)


def small_random(seed, max_vertices=7, max_edges=10, self_loop_fraction=0.2,
                 objective_fraction=0.5, utility_range=(-3, 0)):
    rnd = random.Random(seed)
    n = rnd.randint(1, max_vertices)
    cap = n + n * (n - 1) // 2
    m = rnd.randint(0, min(max_edges, cap))
    params = RandomParams(n, m, utility_range, objective_fraction, self_loop_fraction)
    return gen_random(params, seed)


@pytest.fixture
def triangle():
    return make_instance(3, [(0, 1, -1, -1), (1, 2, -1, -1), (0, 2, -1, -1)])


@pytest.fixture
def joined_triangles():
    neg = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    return make_instance(6, [(u, v, -1, -1) for u, v in neg] + [(2, 3, 0, 0)])


# one line per acceptance criterion, echoed again in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
