import functools
import itertools

import pytest
from hypothesis import strategies as st

from dicentropy.hypergraph import Hypergraph, enumerate_class


@st.composite
def hypergraphs(draw, max_n=6, max_m=6, max_r=4, max_orientations=None):
    r = draw(st.integers(2, max_r))
    n = draw(st.integers(r, max(r, max_n)))
    hi = max_m
    if max_orientations is not None:
        while r**hi > max_orientations:
            hi -= 1
    m = draw(st.integers(1, hi))
    edges = draw(st.lists(st.sampled_from(list(itertools.combinations(range(n), r))), min_size=m, max_size=m))
    return Hypergraph(n, r, tuple(edges))


@functools.lru_cache(maxsize=None)
def iso_corpus(max_n=6, max_m=6, rs=(2, 3)) -> tuple[Hypergraph, ...]:
    """Every multi-hypergraph with n <= max_n, m <= max_m, r in rs, one per isomorphism class."""
    out = []
    for r in rs:
        for n in range(r, max_n + 1):
            for m in range(1, max_m + 1):
                out.extend(enumerate_class(n, m, r, up_to_iso=True))
    return tuple(out)


@pytest.fixture(scope="session")
def small_corpus():
    return iso_corpus(4, 4, (2, 3))


@pytest.fixture(scope="session")
def full_corpus():
    return iso_corpus(6, 6, (2, 3))


ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, msg = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k}: {msg}")
