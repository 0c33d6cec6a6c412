import pytest

from mapkit.crossing.profile import crossing_profile
from mapkit.crossing.rerouting import clique_fake_order
from mapkit.decomposition.elimination import heuristic_decompose
from mapkit.decomposition.nice import make_nice
from mapkit.few_cliques.crossing_edges import crossing_classification, edge_decision_points
from mapkit.few_cliques.derivation import derive_fcd
from mapkit.few_cliques.validation import validate_fcd
from mapkit.graph_core.half_square import half_square
from mapkit.models.few_cliques_decomposition import FcdLabel
from mapkit.testbench.generators import grid, star
from mapkit.utils.errors import InvalidDecompositionError
from tests.helpers import pipeline, random_instances, subtree_of


def test_star_forget_node_turns_the_nation_fake(star4_instance):
    _, fcd = star4_instance
    for v in range(4):
        t = fcd.source.forget_node(v)
        assert fcd.original[t] == ()
        assert fcd.fake[t] == (v,)
        assert fcd.cliques[t] == (0,)
        assert fcd.labels[t] == FcdLabel(kind="fake_introduce", vertex=v)
        assert fcd.fake_introduce_node(v) == t


def test_star_root_forgets_the_whole_clique(star4_instance):
    _, fcd = star4_instance
    root = fcd.root
    assert fcd.bag(root) == frozenset()
    assert fcd.labels[root] == FcdLabel(kind="forget_set", vertex=0, removed=(0, 1, 2, 3))
    assert str(fcd.labels[root]) == "forget_set(0,1,2,3)"
    assert fcd.gamma[root] == (0, 1, 2, 3)


def test_introducing_a_special_is_redundant(star4_instance):
    _, fcd = star4_instance
    redundant = [t for t, label in enumerate(fcd.labels) if label.kind == "redundant"]
    assert len(redundant) == 4
    for t in redundant:
        child = fcd.children(t)[0]
        assert fcd.bag(t) == fcd.bag(child)


def test_derived_decompositions_validate(star4_instance, grid3_instance):
    for _, fcd in [star4_instance, grid3_instance]:
        assert validate_fcd(fcd).lines() == []
    for _, _, fcd in random_instances(200, 14):
        assert validate_fcd(fcd).is_valid


def test_without_specials_nothing_is_fake():
    witness = grid(1, 1)
    _, fcd = pipeline(witness)
    assert all(not row for row in fcd.fake)
    assert validate_fcd(fcd).is_valid



def test_bags_follow_the_replacement_rule():
    for witness, map_graph, fcd in random_instances(100, 12):
        n = map_graph.n
        for t in range(fcd.node_count):
            below = set()
            for node in subtree_of(fcd, t):
                below |= {x for x in fcd.source.bag_set(node) if x < n}
            expected = {x for x in fcd.source.bag_set(t) if x < n}
            for x in fcd.source.bag_set(t):
                if x >= n:
                    expected |= set(witness.nations_of(x - n)) & below
            assert fcd.bag(t) == expected
            assert fcd.gamma_set(t) == below


def test_join_nodes_split_the_fake_vertices(star4_instance):
    _, fcd = star4_instance
    joins = [t for t, label in enumerate(fcd.labels) if label.kind == "join"]
    assert len(joins) == 3
    for t in joins:
        left, right = fcd.children(t)
        assert not set(fcd.fake[left]) & set(fcd.fake[right])
        assert set(fcd.fake[t]) == set(fcd.fake[left]) | set(fcd.fake[right])


def test_corrupted_join_is_reported(star4_instance):
    _, fcd = star4_instance
    t = next(t for t, label in enumerate(fcd.labels) if label.kind == "join")
    left, right = fcd.children(t)
    fake = list(fcd.fake)
    fake[right] = tuple(sorted(set(fake[right]) | set(fake[left])))
    broken = fcd.model_copy(update={"fake": tuple(fake)})
    assert "join-fake-disjoint" in validate_fcd(broken).kinds()


def test_derivation_rejects_a_foreign_decomposition(star4):
    nice = make_nice(heuristic_decompose(star(3).graph))
    with pytest.raises(InvalidDecompositionError):
        derive_fcd(nice, half_square(star4))


def test_star_boundary_edges_lie_inside_the_clique(star4_instance):
    _, fcd = star4_instance
    t = fcd.source.forget_node(0)
    classification = crossing_classification(fcd, t)
    assert classification.incident_to_original == ()
    assert classification.inside_clique == ((0, 1), (0, 2), (0, 3))
    assert crossing_classification(fcd, fcd.root).size == 0


def test_classification_matches_the_full_crossing_profile():
    for _, map_graph, fcd in random_instances(100, 12):
        profile = crossing_profile(map_graph.graph.edges(), fcd)
        for t in range(fcd.node_count):
            assert crossing_classification(fcd, t).size == profile.counts[t]


def test_decision_points_stay_inside_the_subtree():
    for _, map_graph, fcd in random_instances(100, 12):
        points = edge_decision_points(fcd)
        assert set(points) == set(map_graph.graph.edges())
        for (u, v), d in points.items():
            assert {u, v} <= fcd.bag(d)
        for t in range(fcd.node_count):
            below = subtree_of(fcd, t)
            gamma, bag = fcd.gamma_set(t), fcd.bag(t)
            for (u, v), d in points.items():
                if u in gamma and v in gamma and not {u, v} <= bag:
                    assert d in below


def test_fake_vertices_of_a_clique_form_a_segment_of_its_order():
    for _, map_graph, fcd in random_instances(100, 12):
        for s, members in enumerate(map_graph.special_cliques):
            order = clique_fake_order(fcd, s)
            assert sorted(order) == list(members)
            for t in range(fcd.node_count):
                positions = [i for i, v in enumerate(order) if v in fcd.fake[t]]
                if positions and s in fcd.cliques[t]:
                    assert positions == list(range(positions[0], positions[-1] + 1))
