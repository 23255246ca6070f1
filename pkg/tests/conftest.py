from __future__ import annotations

import random

import networkx as nx
import numpy as np
import pytest
from hypothesis import strategies as st

from kfcrit import _kernels, _pure
from kfcrit.graph import Graph

try:
    from kfcrit import _core
except ImportError:  # pragma: no cover - extension not built
    _core = None

BACKENDS = [_pure] + ([_core] if _core is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def kernel(request):
    return request.param


@pytest.fixture
def force_backend(monkeypatch):
    """Swap the active kernel module for the duration of a test."""

    def use(module):
        monkeypatch.setattr(_kernels, "backend", module)
        monkeypatch.setattr(_kernels, "prepare", lambda g: (module, g.word_rows() if module is not _pure else g.rows))

    return use


def nx_family(s: int, parts) -> nx.Graph:
    """Independent construction of K_s v (K_{n_1} u ... u K_{n_t})."""
    g = nx.complete_graph(s)
    off = s
    for p in parts:
        g.add_nodes_from(range(off, off + p))
        g.add_edges_from((u, v) for u in range(off, off + p) for v in range(u + 1, off + p))
        off += p
    g.add_edges_from((c, v) for c in range(s) for v in range(s, off))
    return g


def nx_rho(g: nx.Graph) -> float:
    return float(np.linalg.eigvalsh(nx.to_numpy_array(g, nodelist=sorted(g)))[-1])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_corpus(count: int = 500, n_max: int = 12, seed: int = 20240601) -> list[Graph]:
    rng = random.Random(seed)
    return [random_graph(rng, rng.randint(4, n_max), rng.choice([0.3, 0.5, 0.7, 0.85])) for _ in range(count)]


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 12):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


# one summary line per acceptance criterion, printed after the run
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
