import pytest

from functions.igraph_core.analysis import are_isomorphic
from functions.igraph_core.errors import InvalidISetError, InvalidParameterError
from functions.igraph_core.families import (
    CycleISetLabel,
    ISetType,
    LatticeLabel,
    bracelet,
    bracelet_labels,
    bracelet_neighbors,
    count_cycle_isets,
    count_path_isets,
    cycle_gf_parameters,
    cycle_iset_label,
    gf_cycle_coefficient,
    is_valid_label,
    iset_type,
    label_to_iset,
    lattice_label_to_iset,
    lattice_labels,
    path_gf_coefficient,
    path_gf_parameters,
    path_iset_lattice_label,
    predicted_cycle_hamiltonicity,
    predicted_cycle_igraph,
    predicted_path_igraph,
    worn_lattice,
)
from functions.igraph_core.graph_core import VertexSet, cycle, path
from functions.igraph_core.reconfig import build_igraph


def _vs(*members):
    return VertexSet.of(members)


def test_count_path_isets():
    assert count_path_isets(10) == 10
    assert count_path_isets(3) == 1
    assert count_path_isets(8) == 4
    assert count_path_isets(1) == 1
    with pytest.raises(InvalidParameterError):
        count_path_isets(0)


def test_count_cycle_isets():
    assert count_cycle_isets(13) == 26
    assert count_cycle_isets(6) == 3
    assert count_cycle_isets(8) == 8
    with pytest.raises(InvalidParameterError):
        count_cycle_isets(2)


def test_gf_cycle_coefficient():
    assert gf_cycle_coefficient(6, 8) == 26
    assert gf_cycle_coefficient(5, 8) == 3
    assert gf_cycle_coefficient(2, 1) == 2
    assert gf_cycle_coefficient(3, 0) == 0


def test_generating_functions_agree_with_closed_forms():
    for n in range(3, 40):
        assert gf_cycle_coefficient(*cycle_gf_parameters(n)) == count_cycle_isets(n)
    for n in range(1, 40):
        assert path_gf_coefficient(*path_gf_parameters(n)) == count_path_isets(n)


def test_worn_lattice_small():
    l1 = worn_lattice(1)
    assert l1.labels == ("(1,2)", "(1,3)", "(2,3)")
    assert l1.edges() == [(0, 1), (1, 2)]

    l3 = worn_lattice(3)
    assert l3.order == 10
    v = l3.labels.index("(1,2)")
    assert [l3.label(u) for u in l3.adjacency[v]] == ["(1,3)"]
    with pytest.raises(InvalidParameterError):
        worn_lattice(0)


def test_lattice_labels_round_trip_path_isets():
    ig = build_igraph(path(10))
    labels = [path_iset_lattice_label(10, s) for s in ig.isets]
    assert sorted(labels) == lattice_labels(3)
    assert path_iset_lattice_label(10, _vs(0, 2, 5, 8)) == LatticeLabel(1, 2)
    assert path_iset_lattice_label(10, _vs(0, 3, 5, 8)) == LatticeLabel(1, 3)
    for lab, s in zip(labels, ig.isets):
        assert lattice_label_to_iset(10, lab) == s


def test_single_vertex_path_label():
    assert path_iset_lattice_label(1, _vs(0)) == LatticeLabel(1, 2)
    assert lattice_label_to_iset(1, LatticeLabel(1, 2)) == _vs(0)


def test_bracelet_small():
    b2 = bracelet(2)
    assert b2.order == 7
    assert set(b2.degrees()) == {2}
    assert are_isomorphic(b2, cycle(7)) is not None

    b1 = bracelet(1)
    assert b1.order == 2
    assert b1.edge_count == 0
    assert b1.labels == ("{0,2}", "{1,3}")


def test_bracelet_neighbor_rules():
    lab = CycleISetLabel.of(13, 0, 5)
    assert [str(u) for u in bracelet_neighbors(lab)] == ["{0,2}", "{0,8}", "{3,5}", "{5,10}"]
    # Type1 labels have the two rule-1 neighbors only
    assert [str(u) for u in bracelet_neighbors(CycleISetLabel.of(13, 0, 2))] == ["{0,5}", "{2,10}"]


def test_label_validation():
    assert is_valid_label(13, 0, 2)
    assert is_valid_label(13, 10, 5)
    assert not is_valid_label(13, 0, 3)
    assert not is_valid_label(12, 0, 2)
    assert CycleISetLabel.of(13, 10, 5) == CycleISetLabel.of(13, 5, 10)
    assert len(bracelet_labels(4)) == count_cycle_isets(13)


def test_iset_type():
    assert iset_type(19, CycleISetLabel.of(19, 0, 2)) is ISetType.TYPE1
    assert iset_type(19, CycleISetLabel.of(19, 0, 5)) is ISetType.TYPE2A
    assert iset_type(19, CycleISetLabel.of(19, 0, 8)) is ISetType.TYPE2B
    with pytest.raises(InvalidParameterError):
        iset_type(13, CycleISetLabel.of(19, 0, 8))


def test_cycle_labels_round_trip():
    x = _vs(1, 3, 6, 9, 12)
    y = _vs(1, 4, 6, 9, 12)
    assert cycle_iset_label(13, x) == CycleISetLabel.of(13, 0, 2)
    assert cycle_iset_label(13, y) == CycleISetLabel.of(13, 0, 5)
    assert label_to_iset(13, CycleISetLabel.of(13, 0, 2)) == x
    assert label_to_iset(13, CycleISetLabel.of(13, 0, 5)) == y
    for lab in bracelet_labels(4):
        assert cycle_iset_label(13, label_to_iset(13, lab)) == lab


def test_cycle_label_errors():
    with pytest.raises(InvalidParameterError):
        cycle_iset_label(12, _vs(0, 3, 6, 9))
    with pytest.raises(InvalidISetError):
        cycle_iset_label(13, _vs(0, 2, 4, 6, 8, 10))
    with pytest.raises(InvalidParameterError):
        CycleISetLabel.of(13, 0, 4)


def test_predicted_path_igraph():
    assert predicted_path_igraph(9).order == 1
    assert predicted_path_igraph(10) == worn_lattice(3)
    assert predicted_path_igraph(8) == path(4)
    assert predicted_path_igraph(1).labels == ("(1,2)",)


def test_predicted_cycle_igraph():
    assert predicted_cycle_igraph(3) == cycle(3)
    assert predicted_cycle_igraph(10).order == 15
    assert predicted_cycle_igraph(11) == cycle(11)
    assert predicted_cycle_igraph(12).edge_count == 0
    assert predicted_cycle_igraph(12).order == 3


@pytest.mark.parametrize("n", [4, 5, 7, 8, 10, 13, 14])
def test_predicted_cycle_igraph_is_the_built_one(n):
    assert are_isomorphic(build_igraph(cycle(n)).graph, predicted_cycle_igraph(n)) is not None


@pytest.mark.parametrize(
    "n,expected",
    [
        (3, "hamiltonian"),
        (4, "neither"),
        (5, "hamiltonian"),
        (6, "neither"),
        (7, "hamiltonian"),
        (10, "neither"),
        (13, "hamiltonian"),
        (16, "neither"),
        (19, "traceable_only"),
        (25, "traceable_only"),
    ],
)
def test_predicted_cycle_hamiltonicity(n, expected):
    assert predicted_cycle_hamiltonicity(n) == expected
