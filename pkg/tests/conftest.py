from __future__ import annotations

import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from edgecolor.graph import Multigraph, build  # noqa: E402

settings.register_profile("repo", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


@st.composite
def multigraphs(draw, min_n=1, max_n=6, max_mult=3, max_edges=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(v, w) for v in range(n) for w in range(v + 1, n)]
    mults = draw(st.lists(st.integers(0, max_mult), min_size=len(pairs), max_size=len(pairs)))
    edges = [(v, w, m) for (v, w), m in zip(pairs, mults) if m]
    if max_edges is not None:
        total = 0
        kept = []
        for v, w, m in edges:
            m = min(m, max_edges - total)
            if m <= 0:
                break
            kept.append((v, w, m))
            total += m
        edges = kept
    return build(n, edges)


def simple_graphs(**kw):
    kw.setdefault("max_mult", 1)
    return multigraphs(**kw)


def nonempty(strategy):
    return strategy.filter(lambda g: g.num_edges > 0)


__all__ = ["Multigraph", "multigraphs", "simple_graphs", "nonempty"]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
