import random

import pytest
from flask import Flask


@pytest.fixture()
def app() -> Flask:
    return Flask(__name__)


@pytest.fixture()
def rng() -> random.Random:
    # Fixed seed so random-graph checks are reproducible.
    return random.Random(20240601)


@pytest.fixture(autouse=True)
def _api_env(monkeypatch):
    """Keep HTTP limits at their defaults regardless of the shell environment."""
    for name in ("IGRAPH_API_MAX_SEED_ORDER", "IGRAPH_API_DEFAULT_BUDGET", "IGRAPH_API_MAX_BUDGET", "IGRAPH_API_MAX_GRAPH_ORDER"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("DISABLE_SENTRY", "1")
