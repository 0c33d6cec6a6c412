from itertools import combinations

import networkx as nx

from mapkit.crossing.cycles import cycle_edges
from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult


def validate_certificate(map_graph: MapGraph, result: SolveResult) -> list[str]:
    """Re-checks a result against G without the DP; returns the problems found"""
    graph = map_graph.graph.to_networkx()
    problems = []
    if result.answer is False and result.stats.early_exit is not None:
        (clique,) = result.certificate
        if any(not graph.has_edge(u, v) for u, v in combinations(clique, 2)):
            problems.append(f"{clique} is not a clique")
        return problems
    if result.value is None:
        return problems

    if result.problem in ("vc", "fvs"):
        chosen = set(result.certificate[0]) if result.certificate else set()
        if len(chosen) != result.value:
            problems.append(f"set has {len(chosen)} vertices, value is {result.value}")
        if result.problem == "vc":
            uncovered = [e for e in graph.edges if not chosen & set(e)]
            if uncovered:
                problems.append(f"edges {uncovered} are not covered")
        else:
            rest = graph.subgraph(set(graph.nodes) - chosen)
            if rest.number_of_nodes() and not nx.is_forest(rest):
                problems.append("graph minus the set still has a cycle")
    elif result.problem == "longest-cycle":
        if result.value:
            (cycle,) = result.certificate
            problems.extend(_cycle_problems(graph, cycle))
            if len(cycle) != result.value:
                problems.append(f"cycle has {len(cycle)} vertices, value is {result.value}")
    elif result.problem == "longest-path":
        if result.value:
            (path,) = result.certificate
            if len(set(path)) != len(path) or len(path) != result.value:
                problems.append(f"{path} is not a simple path on {result.value} vertices")
            if any(not graph.has_edge(u, v) for u, v in zip(path, path[1:])):
                problems.append(f"{path} uses a non-edge")
    elif result.problem == "cycle-packing":
        used = [v for cycle in result.certificate for v in cycle]
        if len(used) != len(set(used)):
            problems.append("cycles are not vertex-disjoint")
        for cycle in result.certificate:
            problems.extend(_cycle_problems(graph, cycle))
        if len(result.certificate) != result.value:
            problems.append(f"{len(result.certificate)} cycles, value is {result.value}")
    return problems


def _cycle_problems(graph: nx.Graph, cycle) -> list[str]:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return [f"{cycle} is not a simple cycle"]
    if any(not graph.has_edge(u, v) for u, v in cycle_edges(cycle)):
        return [f"{cycle} uses a non-edge"]
    return []


def format_certificate(result: SolveResult) -> str:
    k = "-" if result.k is None else result.k
    value = "-" if result.value is None else result.value
    lines = [f"SOLUTION {result.problem} k={k} value={value}"]
    lines.extend(" ".join(str(v + 1) for v in row) for row in result.certificate)
    return "\n".join(lines) + "\n"
