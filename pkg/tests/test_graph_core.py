import networkx as nx

from mapkit.graph_core.half_square import half_square, witness_graph
from mapkit.graph_core.validation import validate_witness
from mapkit.models.bipartite_witness import BipartiteWitness
from mapkit.models.graph import Graph
from tests.helpers import random_witnesses, witness_from_cliques


def _subdivided_k33() -> BipartiteWitness:
    # nations a0..a2 = 0..2 and y0..y2 = 3..5, specials b0..b2 = 6..8 and x0..x2 = 9..11
    edges = [(i, 6 + j) for i in range(3) for j in range(3) if i != j]
    for i in range(3):
        edges += [(i, 9 + i), (3 + i, 9 + i), (3 + i, 6 + i)]
    return BipartiteWitness(graph=Graph.from_edges(12, edges), nation_count=6, special_count=6)


def test_star_is_valid(star4):
    report = validate_witness(star4, strict=True)
    assert report.is_valid
    assert report.lines() == []


def test_same_side_edge_is_reported():
    witness = BipartiteWitness(
        graph=Graph.from_edges(3, [(0, 1), (1, 2)]), nation_count=2, special_count=1
    )
    report = validate_witness(witness)
    assert report.kinds() == {"bipartite"}


def test_euler_bound_on_k33():
    edges = [(i, 3 + j) for i in range(3) for j in range(3)]
    witness = BipartiteWitness(graph=Graph.from_edges(6, edges), nation_count=3, special_count=3)
    assert "euler-bound" in validate_witness(witness).kinds()


def test_strict_mode_catches_sparse_non_planar_witness():
    witness = _subdivided_k33()
    assert validate_witness(witness).is_valid
    report = validate_witness(witness, strict=True)
    assert report.kinds() == {"planarity"}
    assert report.lines()[0].startswith("planarity: ")


def test_half_square_of_star_is_k4(star4):
    map_graph = half_square(star4)
    assert map_graph.n == 4
    assert map_graph.graph.edge_count == 6
    assert map_graph.special_cliques == ((0, 1, 2, 3),)
    assert map_graph.largest_clique() == (0, 1, 2, 3)


def test_half_square_without_specials_is_edgeless():
    witness = BipartiteWitness(graph=Graph.from_edges(3, []), nation_count=3, special_count=0)
    map_graph = half_square(witness)
    assert map_graph.graph.edge_count == 0
    assert map_graph.largest_clique() == ()


def test_half_square_matches_distance_two():
    for witness in random_witnesses(500, 30, max_witness_vertices=30):
        map_graph = half_square(witness)
        lengths = dict(nx.all_pairs_shortest_path_length(witness.graph.to_networkx(), cutoff=2))
        expected = {
            (u, v)
            for u in range(witness.nation_count)
            for v in range(u + 1, witness.nation_count)
            if lengths[u].get(v) == 2
        }
        assert set(map_graph.graph.edges()) == expected
        assert witness_graph(map_graph) == witness.graph


def test_special_order_does_not_change_half_square():
    first = half_square(witness_from_cliques(5, [(0, 1, 2), (2, 3), (3, 4, 0)]))
    second = half_square(witness_from_cliques(5, [(3, 4, 0), (0, 1, 2), (2, 3)]))
    assert first.graph == second.graph
