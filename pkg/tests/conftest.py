# The two-fundamental software accompanied by this notice is provided pursuant to the following terms:
# Copyright © 2026-Present, The two-fundamental authors.
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance with the License.
# You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0.
# Unless required by applicable law or agreed to in writing, software distributed under the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and limitations under the License.

"""Shared fixtures for two-fundamental tests."""

from __future__ import annotations

import os
import random

import pytest

from two_fundamental.tools.graph_core.graph_core import Graph, named_graph
from two_fundamental.utils.settings import Settings, set_settings


# ---------------------------------------------------------------------------
# Graph corpus
# ---------------------------------------------------------------------------

#: Named graphs used across the suite.
CORPUS = ("K3", "K4", "K5", "K6", "C3", "C5", "C6", "C7", "C8", "petersen", "K2xK3", "Q3")

#: Seeds of the random connected graphs.
RANDOM_SEEDS = tuple(range(10))


def random_connected_graph(seed: int, max_vertices: int = 8, density: float = 0.35) -> Graph:
    """A connected graph on 4..max_vertices vertices: a random tree plus random extra edges."""
    rng = random.Random(seed)
    n = rng.randint(4, max_vertices)
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                edges.add((a, b))
    return Graph.from_edges(n, sorted(edges))


def random_graph(seed: int, max_vertices: int = 8, density: float = 0.4) -> Graph:
    """A possibly disconnected loopless random graph."""
    rng = random.Random(1000 + seed)
    n = rng.randint(3, max_vertices)
    return Graph.from_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < density])


@pytest.fixture(params=CORPUS)
def corpus_graph(request) -> Graph:
    return named_graph(request.param)


@pytest.fixture(params=RANDOM_SEEDS, ids=lambda seed: f"seed{seed}")
def random_connected(request) -> Graph:
    return random_connected_graph(request.param)


@pytest.fixture(params=range(20), ids=lambda seed: f"any{seed}")
def random_any(request) -> Graph:
    return random_graph(request.param)


# ---------------------------------------------------------------------------
# Settings isolation
# ---------------------------------------------------------------------------

@pytest.fixture(autouse=True)
def reset_settings(monkeypatch):
    """Every test starts from default settings, ignoring the caller's TWOFUND_* environment."""
    for name in list(os.environ):
        if name.startswith("TWOFUND_"):
            monkeypatch.delenv(name, raising=False)
    set_settings(None)
    yield
    set_settings(None)


@pytest.fixture
def small_settings():
    """Install tight budgets and return the installed settings."""
    settings = Settings(path_budget=500, hom_budget=10, iso_max_vertices=4, coloring_exhaustive_vertices=4, coloring_samples=25)
    set_settings(settings)
    return settings


# ---------------------------------------------------------------------------
# Files
# ---------------------------------------------------------------------------

@pytest.fixture
def write_file(tmp_path):
    """Write ``text`` to a file under ``tmp_path`` and return its path as a string."""

    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write
