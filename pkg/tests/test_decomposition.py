import networkx as nx
import pytest

from mapkit.decomposition.elimination import (
    decomposition_from_order,
    exact_decompose_small,
    heuristic_decompose,
)
from mapkit.decomposition.nice import make_nice
from mapkit.decomposition.pace_io import format_td, parse_td
from mapkit.decomposition.validation import validate_td
from mapkit.models.graph import Graph
from mapkit.models.nice_tree_decomposition import NiceLabel, NiceTreeDecomposition
from mapkit.models.tree_decomposition import TreeDecomposition
from mapkit.utils.errors import InvalidDecompositionError, PreconditionError
from tests.helpers import random_witnesses

PATH5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
K4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
CYCLE5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
GRID3 = Graph.from_networkx(nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 3)))


@pytest.mark.parametrize("graph, width", [(PATH5, 1), (K4, 3), (CYCLE5, 2)])
def test_heuristic_width_on_small_graphs(graph, width):
    td = heuristic_decompose(graph, seed=3)
    assert td.width == width
    assert validate_td(td, graph).is_valid


@pytest.mark.parametrize("graph, width", [(PATH5, 1), (K4, 3), (CYCLE5, 2), (GRID3, 3)])
def test_exact_width(graph, width):
    td = exact_decompose_small(graph, width_budget=graph.n)
    assert td.width == width
    assert validate_td(td, graph).is_valid
    assert exact_decompose_small(graph, width_budget=width - 1) is None


def test_heuristic_never_beats_exact_on_the_grid():
    assert heuristic_decompose(GRID3).width >= exact_decompose_small(GRID3, 9).width


def test_exact_guard():
    with pytest.raises(PreconditionError):
        exact_decompose_small(Graph.from_edges(26, []), width_budget=3)


def test_empty_graph_has_one_empty_bag():
    td = decomposition_from_order(Graph.from_edges(0, []), [])
    assert td.node_count == 1
    assert td.bags == ((),)
    assert make_nice(td).labels == (NiceLabel(kind="leaf"),)


def test_order_places_last_vertex_at_root():
    td = decomposition_from_order(PATH5, [0, 1, 2, 3, 4])
    assert td.root == 0
    assert td.bags[0] == (4,)
    assert td.width == 1


def test_make_nice_on_a_single_bag():
    td = TreeDecomposition(node_count=1, parent=(-1,), bags=((0, 1),), root=0)
    nice = make_nice(td)
    assert [str(label) for label in nice.labels] == [
        "leaf",
        "introduce(0)",
        "introduce(1)",
        "forget(0)",
        "forget(1)",
    ]
    assert nice.root == nice.node_count - 1
    assert nice.bags[nice.root] == ()


def test_make_nice_keeps_width_and_validity():
    for seed, witness in enumerate(random_witnesses(200, 14)):
        graph = witness.graph
        td = heuristic_decompose(graph, seed=seed)
        nice = make_nice(td, graph)
        assert nice.width == td.width
        assert validate_td(nice, graph).is_valid
        assert nice.postorder() == list(range(nice.node_count))
        for v in range(graph.n):
            assert nice.labels[nice.forget_node(v)].vertex == v


def test_make_nice_rejects_a_broken_decomposition():
    td = TreeDecomposition(node_count=2, parent=(-1, 0), bags=((0, 1), (2, 3)), root=0)
    with pytest.raises(InvalidDecompositionError, match="axiom-b"):
        make_nice(td, PATH5)


def test_make_nice_without_a_graph_still_checks_connectivity():
    td = TreeDecomposition(
        node_count=3, parent=(-1, 0, 0), bags=((0, 2), (0, 1), (1, 2)), root=0
    )
    with pytest.raises(InvalidDecompositionError, match="axiom-c"):
        make_nice(td)


def test_axiom_violations_are_named():
    # vertex 1 appears in both leaves but not in the middle bag
    td = TreeDecomposition(
        node_count=3, parent=(-1, 0, 0), bags=((0, 2), (0, 1), (1, 2)), root=0
    )
    report = validate_td(td, Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]))
    assert report.kinds() == {"axiom-a", "axiom-b", "axiom-c"}
    assert any("vertex 1" in line for line in report.lines())


def test_label_grammar_is_checked():
    nice = NiceTreeDecomposition(
        node_count=3,
        parent=(1, 2, -1),
        bags=((), (0,), ()),
        root=2,
        labels=(
            NiceLabel(kind="leaf"),
            NiceLabel(kind="introduce", vertex=0),
            NiceLabel(kind="introduce", vertex=0),
        ),
    )
    kinds = validate_td(nice, Graph.from_edges(1, [])).kinds()
    assert "label-grammar" in kinds
    assert "forget-uniqueness" in kinds


def test_parent_cycles_are_rejected():
    with pytest.raises(ValueError):
        TreeDecomposition(node_count=3, parent=(-1, 2, 1), bags=((), (), ()), root=0)


def test_pace_output_reads_back():
    for seed, witness in enumerate(random_witnesses(10, 12)):
        td = heuristic_decompose(witness.graph, seed=seed)
        nice = make_nice(td)
        for decomposition in (td, nice):
            text = format_td(decomposition, witness.vertex_count)
            assert text.startswith(f"s td {decomposition.node_count} {decomposition.width + 1} ")
            again = parse_td(text)
            assert type(again) is type(decomposition)
            assert again.parent == decomposition.parent
            assert again.bags == decomposition.bags
            assert again.root == decomposition.root
        assert parse_td(format_td(nice, witness.vertex_count)).labels == nice.labels


def test_pace_reader_rejects_garbage():
    with pytest.raises(InvalidDecompositionError):
        parse_td("s td 2 1 1\nb 1 1\n")
