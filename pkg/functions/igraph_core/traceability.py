from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Set, Tuple

from loguru import logger

from .errors import ConstructionError, InvalidParameterError
from .families import CycleISetLabel, bracelet, bracelet_labels, label_to_iset
from .graph_core import MAX_SEED_ORDER, Graph, cycle, from_edge_list
from .hamilton import DEFAULT_BUDGET, forced_subcycle_certificate, hamiltonian_cycle, is_hamiltonian_path
from .models import ForcedSubcycle, HamiltonReport
from .reconfig import IGraph, build_igraph


@lru_cache(maxsize=8)
def _bracelet_with_index(k: int) -> Tuple[Graph, Tuple[CycleISetLabel, ...], Dict[CycleISetLabel, int]]:
    labels = tuple(bracelet_labels(k))
    return bracelet(k), labels, {lab: v for v, lab in enumerate(labels)}


def _require_6k1(n: int) -> int:
    if n % 6 != 1:
        raise InvalidParameterError(f"n must be 6k+1, got {n}")
    k = (n - 1) // 6
    if k < 3:
        raise InvalidParameterError(f"n = 6k+1 needs k >= 3, got n={n}")
    return k


def _require_ell(k: int, ell: int) -> None:
    if ell % 6 != 2 or not (2 <= ell <= 3 * k - 1):
        raise InvalidParameterError(f"ell must be 2 mod 6 within 2..{3 * k - 1}, got {ell}")


def h_labels(n: int, ell: int) -> Set[CycleISetLabel]:
    k = _require_6k1(n)
    _require_ell(k, ell)
    out: Set[CycleISetLabel] = set()
    for j in range(n):
        out.add(CycleISetLabel.of(n, j, j + ell))
        out.add(CycleISetLabel.of(n, j, j + ell + 3))
    return out


def h_edges(n: int, ell: int) -> List[Tuple[CycleISetLabel, CycleISetLabel]]:
    """Consecutive pairs of h_cycle_sequence, closing pair included, each checked against the bracelet."""
    seq = h_cycle_sequence(n, ell)
    if len(set(seq)) != len(seq) or set(seq) != h_labels(n, ell):
        raise ConstructionError(f"walk for ell={ell} does not visit each H label of n={n} once")
    graph, _, index = _bracelet_with_index((n - 1) // 3)
    edges = list(zip(seq, seq[1:] + seq[:1]))
    for a, b in edges:
        if index[b] not in graph.adjacency[index[a]]:
            raise ConstructionError(f"walk step {a} -> {b} is not an edge of the i-graph of C_{n}")
    return edges


def h_subgraph(n: int, ell: int) -> Graph:
    """
    The cycle H traced by <0,ell>, <0,ell+3>, <3,ell+3>, ... in the predicted i-graph of C_n.

    Vertex v is the v-th label of the walk. H is not induced: for even k the labels at
    distance 3k-1 are also adjacent among themselves.
    """
    seq = h_cycle_sequence(n, ell)
    pos = {lab: v for v, lab in enumerate(seq)}
    edges = [(pos[a], pos[b]) for a, b in h_edges(n, ell)]
    return from_edge_list(len(seq), edges, [str(lab) for lab in seq])


def h_cycle_sequence(n: int, ell: int) -> List[CycleISetLabel]:
    """<0,ell>, <0,ell+3>, <3,ell+3>, <3,ell+6>, ... until the walk closes."""
    k = _require_6k1(n)
    _require_ell(k, ell)
    start = CycleISetLabel.of(n, 0, ell)
    seq: List[CycleISetLabel] = [start]
    x = 0
    while len(seq) <= 2 * n:
        nxt = CycleISetLabel.of(n, 3 * x, ell + 3 * x + 3)
        if nxt == start:
            return seq
        seq.append(nxt)
        x += 1
        nxt = CycleISetLabel.of(n, 3 * x, ell + 3 * x)
        if nxt == start:
            return seq
        seq.append(nxt)
    raise ConstructionError(f"walk for ell={ell} did not close on n={n}")


def construct_hamilton_path_6k1(k: int) -> List[CycleISetLabel]:
    """
    Hamiltonian path of the i-graph of C_{6k+1}, built from the H cycles.

    The connecting path <0,2>, <0,5>, <0,8>, ... alternates between an edge inside one H
    (dropped) and an edge between consecutive H's (kept). For odd k the last H is entered
    at <0,3k-1> and one of its cycle edges there is dropped.
    """
    if k < 3:
        raise InvalidParameterError(f"construction needs k >= 3, got {k}")
    n = 6 * k + 1
    graph, labels, index = _bracelet_with_index(2 * k)

    ells = list(range(2, 3 * k, 6))
    t_adj: Dict[CycleISetLabel, Set[CycleISetLabel]] = {lab: set() for lab in labels}
    for ell in ells:
        for a, b in h_edges(n, ell):
            t_adj[a].add(b)
            t_adj[b].add(a)

    connector = [CycleISetLabel.of(n, 0, d) for d in range(2, 3 * k, 3)]
    for a, b in zip(connector, connector[1:]):
        if b in t_adj[a]:
            t_adj[a].discard(b)
            t_adj[b].discard(a)
        else:
            t_adj[a].add(b)
            t_adj[b].add(a)
    if k % 2 == 1:
        tail = connector[-1]
        drop = min(t_adj[tail] - {connector[-2]})
        t_adj[tail].discard(drop)
        t_adj[drop].discard(tail)

    ends = sorted(lab for lab, nbrs in t_adj.items() if len(nbrs) == 1)
    if len(ends) != 2 or connector[0] not in ends:
        raise ConstructionError(f"spanning subgraph for k={k} has endpoints {[str(e) for e in ends]}")
    walk = [connector[0]]
    prev = None
    while True:
        step = [u for u in t_adj[walk[-1]] if u != prev]
        if not step:
            break
        prev = walk[-1]
        walk.append(step[0])
        if len(walk) > len(labels):
            raise ConstructionError(f"spanning subgraph for k={k} is not a path")

    seq = [index[lab] for lab in walk]
    if not is_hamiltonian_path(graph, seq):
        raise ConstructionError(f"constructed sequence for k={k} is not a Hamiltonian path of the bracelet")
    if n <= MAX_SEED_ORDER:
        ig = build_igraph(cycle(n))
        witness = [ig.index_of(label_to_iset(n, lab)) for lab in walk]
        if not is_hamiltonian_path(ig.graph, witness):
            raise ConstructionError(f"constructed sequence for k={k} is not a Hamiltonian path of the i-graph")
    logger.debug(f"constructed Hamiltonian path on {len(walk)} i-sets of C_{n}")
    return walk


def classify_cycle_igraph(n: int, budget: int = DEFAULT_BUDGET) -> Tuple[IGraph, HamiltonReport]:
    """Hamiltonicity report for the i-graph of C_n; n = 6k+1 >= 19 uses the constructed path."""
    ig = build_igraph(cycle(n))
    if n % 6 == 1 and n >= 19:
        cert = forced_subcycle_certificate(ig.graph)
        if cert is not None:
            walk = construct_hamilton_path_6k1((n - 1) // 6)
            witness = [ig.index_of(label_to_iset(n, lab)) for lab in walk]
            return ig, HamiltonReport(
                status="traceable_only",
                order=ig.graph.order,
                witness=witness,
                witness_kind="path",
                obstruction=ForcedSubcycle(vertices=cert),
            )
    return ig, hamiltonian_cycle(ig.graph, budget)
