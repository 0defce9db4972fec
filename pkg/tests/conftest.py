from __future__ import annotations

import time
from contextlib import contextmanager

import pytest
from hypothesis import strategies as st

from amoeba.graph import Graph
from amoeba.perm import Permutation

ACCEPTANCE: list[str] = []


@contextmanager
def criterion(name: str, limit_s: float):
    """Time a block and record one PASS/FAIL line for the terminal summary."""
    t0 = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE.append(f"{name} FAIL ({time.perf_counter() - t0:.2f}s): {type(exc).__name__}: {exc}")
        raise
    took = time.perf_counter() - t0
    if took > limit_s:
        ACCEPTANCE.append(f"{name} FAIL ({took:.2f}s > {limit_s:.0f}s limit)")
        pytest.fail(f"{name} took {took:.2f}s, limit {limit_s}s")
    ACCEPTANCE.append(f"{name} PASS ({took:.2f}s)")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, frozenset(p for p, c in zip(pairs, chosen) if c))


@st.composite
def perms(draw, n: int):
    return Permutation(draw(st.permutations(range(n))))
