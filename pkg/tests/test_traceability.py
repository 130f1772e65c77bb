import pytest

from functions.igraph_core.errors import InvalidParameterError
from functions.igraph_core.families import CycleISetLabel, bracelet, bracelet_labels, bracelet_neighbors
from functions.igraph_core.graph_core import is_connected
from functions.igraph_core.hamilton import is_hamiltonian_path
from functions.igraph_core.models import ForcedSubcycle
from functions.igraph_core.traceability import (
    classify_cycle_igraph,
    construct_hamilton_path_6k1,
    h_cycle_sequence,
    h_edges,
    h_labels,
    h_subgraph,
)


def _is_single_cycle(g):
    return g.order >= 3 and set(g.degrees()) == {2} and is_connected(g)


@pytest.mark.parametrize(
    "n,ell,length",
    [
        (19, 2, 38),
        (19, 8, 19),
        (25, 2, 50),
        (25, 8, 50),
        (31, 2, 62),
        (31, 8, 62),
        (31, 14, 31),
        (37, 2, 74),
        (37, 8, 74),
        (37, 14, 74),
    ],
)
def test_h_subgraphs_are_cycles(n, ell, length):
    h = h_subgraph(n, ell)
    assert h.order == length
    assert _is_single_cycle(h)


def test_h_cycle_sequence_walks_the_h_subgraph():
    for ell in (2, 8):
        seq = h_cycle_sequence(19, ell)
        assert set(seq) == h_labels(19, ell)
        assert len(seq) == len(set(seq))
        for a, b in zip(seq, seq[1:] + seq[:1]):
            assert b in bracelet_neighbors(a)


def test_h_errors():
    with pytest.raises(InvalidParameterError):
        h_labels(13, 2)
    with pytest.raises(InvalidParameterError):
        h_labels(19, 5)
    with pytest.raises(InvalidParameterError):
        h_subgraph(19, 14)


@pytest.mark.parametrize("k", [3, 4, 5, 6])
def test_constructed_path_spans_the_bracelet(k):
    walk = construct_hamilton_path_6k1(k)
    labels = bracelet_labels(2 * k)
    index = {lab: v for v, lab in enumerate(labels)}
    assert len(walk) == len(labels) == k * (6 * k + 1)
    assert walk[0] == CycleISetLabel.of(6 * k + 1, 0, 2)
    assert is_hamiltonian_path(bracelet(2 * k), [index[lab] for lab in walk])


def test_construction_needs_k_at_least_3():
    with pytest.raises(InvalidParameterError):
        construct_hamilton_path_6k1(2)


def test_classify_c19():
    ig, report = classify_cycle_igraph(19)
    assert report.status == "traceable_only"
    assert report.witness_kind == "path"
    assert len(report.witness) == 57
    assert is_hamiltonian_path(ig.graph, report.witness)
    assert isinstance(report.obstruction, ForcedSubcycle)
    assert len(report.obstruction.vertices) == 38


@pytest.mark.parametrize("n,expected", [(5, "hamiltonian"), (7, "hamiltonian"), (13, "hamiltonian"), (16, "neither"), (6, "neither")])
def test_classify_small_cycles(n, expected):
    _, report = classify_cycle_igraph(n)
    assert report.status == expected


@pytest.mark.parametrize("n,ell", [(25, 8), (37, 14)])
def test_h_is_the_walk_not_the_induced_subgraph(n, ell):
    # ell+3 = 3k-1 for even k: labels at that distance are also adjacent among themselves
    members = h_labels(n, ell)
    walk_edges = {frozenset(e) for e in h_edges(n, ell)}
    induced = {
        frozenset((a, b)) for a in members for b in bracelet_neighbors(a) if b in members
    }
    assert len(walk_edges) == len(members) == 2 * n
    assert walk_edges < induced
    assert set(h_subgraph(n, ell).degrees()) == {2}


def test_classify_c25_uses_the_constructed_path():
    ig, report = classify_cycle_igraph(25)
    assert report.status == "traceable_only"
    assert len(report.witness) == ig.graph.order == 100
    assert is_hamiltonian_path(ig.graph, report.witness)
    assert isinstance(report.obstruction, ForcedSubcycle)
