import pytest

from mapkit.solvers.certificates import format_certificate, validate_certificate
from mapkit.solvers.cycles import (
    CycleDp,
    solve_cycle_packing,
    solve_longest_cycle,
    solve_longest_path,
)
from mapkit.solvers.early_exit import check_early_exit
from mapkit.solvers.feedback_vertex_set import solve_fvs
from mapkit.solvers.plan import build_plan
from mapkit.solvers.registry import solve_problem
from mapkit.solvers.vertex_cover import solve_vertex_cover
from mapkit.testbench.generators import grid, star
from mapkit.testbench.oracles import brute_force_solve
from mapkit.utils.errors import PreconditionError
from tests.helpers import pipeline, random_instances


@pytest.mark.parametrize(
    "problem, value",
    [("vc", 3), ("fvs", 2), ("longest-cycle", 4), ("longest-path", 4), ("cycle-packing", 1)],
)
def test_optimum_on_k4(star4_instance, problem, value):
    map_graph, fcd = star4_instance
    result = solve_problem(problem, map_graph, fcd)
    assert result.value == value
    assert result.answer is None
    assert result.answer_text == f"OPT={value}"
    assert validate_certificate(map_graph, result) == []


@pytest.mark.parametrize(
    "problem, value",
    [("vc", 4), ("fvs", 2), ("longest-cycle", 3), ("longest-path", 3), ("cycle-packing", 2)],
)
def test_optimum_on_two_triangles(two_triangles_instance, problem, value):
    map_graph, fcd = two_triangles_instance
    result = solve_problem(problem, map_graph, fcd)
    assert result.value == value
    assert validate_certificate(map_graph, result) == []


@pytest.mark.parametrize(
    "problem, value",
    [("vc", 2), ("fvs", 0), ("longest-cycle", 0), ("longest-path", 5), ("cycle-packing", 0)],
)
def test_optimum_on_a_path(problem, value):
    map_graph, fcd = pipeline(grid(1, 5))
    result = solve_problem(problem, map_graph, fcd)
    assert result.value == value
    assert validate_certificate(map_graph, result) == []


def test_single_nation():
    map_graph, fcd = pipeline(grid(1, 1))
    assert solve_vertex_cover(map_graph, fcd).value == 0
    assert solve_longest_path(map_graph, fcd).certificate == ((0,),)
    assert solve_longest_cycle(map_graph, fcd).certificate == ()


def test_decision_answers(star4_instance, two_triangles_instance):
    map_graph, fcd = star4_instance
    fvs = solve_fvs(map_graph, fcd, k=2)
    assert fvs.answer is True and fvs.value == 2
    assert format_certificate(fvs).splitlines()[0] == "SOLUTION fvs k=2 value=2"
    assert len(format_certificate(fvs).splitlines()[1].split()) == 2

    packing = solve_cycle_packing(map_graph, fcd, k=2)
    assert packing.answer is False
    assert packing.answer_text == "NO"

    map_graph, fcd = two_triangles_instance
    packing = solve_cycle_packing(map_graph, fcd, k=2)
    assert packing.answer is True
    assert packing.stats.early_exit is None
    assert validate_certificate(map_graph, packing) == []

    vc = solve_vertex_cover(map_graph, fcd, k=3)
    assert vc.answer is False and vc.value is None
    assert format_certificate(vc) == "SOLUTION vc k=3 value=-\n"


@pytest.mark.parametrize(
    "leaves, problem, k, answer",
    [
        (5, "longest-cycle", 5, True),
        (3, "cycle-packing", 1, True),
        (4, "fvs", 1, False),
        (4, "vc", 2, False),
        (4, "longest-path", 4, True),
    ],
)
def test_clique_early_exits(leaves, problem, k, answer):
    map_graph, fcd = pipeline(star(leaves))
    result = solve_problem(problem, map_graph, fcd, k=k)
    assert result.answer is answer
    assert result.stats.early_exit == "clique"
    assert not result.exact
    assert validate_certificate(map_graph, result) == []


def test_no_early_exit_without_k(star4):
    from mapkit.graph_core.half_square import half_square

    assert check_early_exit(half_square(star4), "fvs", None) is None
    assert check_early_exit(half_square(star4), "fvs", 2) is None


def test_unknown_problem(star4_instance):
    with pytest.raises(PreconditionError):
        solve_problem("coloring", *star4_instance)


def test_cap_is_reported_for_cycle_problems(grid3_instance):
    map_graph, fcd = grid3_instance
    capped = solve_longest_cycle(map_graph, fcd)
    uncapped = solve_longest_cycle(map_graph, fcd, capped=False)
    assert capped.stats.cap == build_plan(fcd, "cycle").max_cap
    assert uncapped.stats.cap is None
    assert capped.value == uncapped.value == 8
    assert solve_vertex_cover(map_graph, fcd).stats.cap is None


@pytest.mark.parametrize(
    "count, size", [(30, 12), pytest.param(100, 18, marks=pytest.mark.slow)]
)
def test_deletion_problems_match_the_oracle(count, size):
    for _, map_graph, fcd in random_instances(count, size, seed=3):
        for problem in ("vc", "fvs"):
            expected = brute_force_solve(map_graph, problem)
            result = solve_problem(problem, map_graph, fcd)
            assert result.value == expected.value, (map_graph.witness_name, problem)
            assert validate_certificate(map_graph, result) == []


@pytest.mark.parametrize(
    "count, size", [(25, 9), pytest.param(100, 14, marks=pytest.mark.slow)]
)
def test_cycle_problems_match_the_oracle_capped_and_uncapped(count, size):
    for _, map_graph, fcd in random_instances(count, size, seed=4):
        for problem in ("longest-cycle", "cycle-packing"):
            expected = brute_force_solve(map_graph, problem)
            capped = solve_problem(problem, map_graph, fcd)
            uncapped = solve_problem(problem, map_graph, fcd, capped=False)
            assert capped.value == uncapped.value == expected.value, (map_graph.witness_name, problem)
            assert validate_certificate(map_graph, capped) == []
            assert validate_certificate(map_graph, uncapped) == []


@pytest.mark.parametrize(
    "count, size", [(12, 7), pytest.param(100, 14, marks=pytest.mark.slow)]
)
def test_longest_path_matches_the_oracle(count, size):
    for _, map_graph, fcd in random_instances(count, size, seed=5):
        expected = brute_force_solve(map_graph, "longest-path")
        result = solve_longest_path(map_graph, fcd)
        assert result.exact
        assert result.value == expected.value, map_graph.witness_name
        assert validate_certificate(map_graph, result) == []


def test_longest_cycle_answers_are_monotone():
    for _, map_graph, fcd in random_instances(10, 8, seed=6):
        optimum = solve_longest_cycle(map_graph, fcd).value
        for k in range(optimum + 3):
            assert solve_longest_cycle(map_graph, fcd, k=k).answer is (optimum >= k)


def test_deletion_answers_follow_the_optimum():
    for _, map_graph, fcd in random_instances(10, 10, seed=8):
        optimum = solve_fvs(map_graph, fcd).value
        for k in range(optimum + 2):
            result = solve_fvs(map_graph, fcd, k=k)
            assert result.answer is (optimum <= k)
            assert validate_certificate(map_graph, result) == []


def test_cap_counts_only_fake_path_ends(star4_instance):
    _, fcd = star4_instance
    plan = build_plan(fcd, "cycle")
    dp = CycleDp(plan)
    node = plan.nodes[plan.root]
    # vertices 0 and 1 end one open path, 2 is absent
    key = ((1, 0, -1), False)
    verts = (0, 1, 2)
    one_original = node.model_copy(update={"cap": 1, "originals": frozenset({0})})
    all_fake = node.model_copy(update={"cap": 1, "originals": frozenset()})
    uncapped = node.model_copy(update={"cap": None, "originals": frozenset()})
    assert dp.keep(key, None, verts, one_original)
    assert not dp.keep(key, None, verts, all_fake)
    assert dp.keep(key, None, verts, uncapped)
