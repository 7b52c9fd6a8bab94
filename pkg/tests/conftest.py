import random

import pytest

from cncodes import kernels

BACKENDS = ["numpy"] + (["numba"] if kernels.HAVE_NUMBA else [])


@pytest.fixture(params=BACKENDS)
def backend(request):
    """Run a test once per kernel backend, restoring the previous choice."""
    previous = kernels.get_backend()
    kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(previous)


@pytest.fixture
def rng():
    return random.Random(20261017)


def random_word(rng, n):
    return "".join(rng.choice("01") for _ in range(n))


def random_code_words(rng, n, K):
    words = set()
    while len(words) < K:
        words.add(random_word(rng, n))
    return sorted(words, key=lambda _: rng.random())


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
