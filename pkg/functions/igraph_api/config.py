import os

DEFAULT_MAX_SEED_ORDER = 24
DEFAULT_BUDGET = 1_000_000
DEFAULT_MAX_BUDGET = 10**8
DEFAULT_MAX_GRAPH_ORDER = 500


def _int_env(name: str, default: int) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def get_max_seed_order() -> int:
    # Enumeration is exponential in the seed order; keep HTTP requests small.
    return _int_env("IGRAPH_API_MAX_SEED_ORDER", DEFAULT_MAX_SEED_ORDER)


def get_default_budget() -> int:
    return _int_env("IGRAPH_API_DEFAULT_BUDGET", DEFAULT_BUDGET)


def get_max_budget() -> int:
    return _int_env("IGRAPH_API_MAX_BUDGET", DEFAULT_MAX_BUDGET)


def get_max_graph_order() -> int:
    # Hamilton search on a given graph costs O(order) per step.
    return _int_env("IGRAPH_API_MAX_GRAPH_ORDER", DEFAULT_MAX_GRAPH_ORDER)
