from typing import Sequence

from mapkit.crossing.cycles import cycle_edges, cycle_from_edges
from mapkit.crossing.path_completion import complete_paths_to_cycle
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.path_system import PathSystem
from mapkit.utils.errors import PreconditionError


def clique_fake_order(fcd: FewCliquesDecomposition, s: int) -> list[int]:
    """Members fake-introduced somewhere, by postorder of that node, then the rest ascending"""
    members = fcd.clique_members(s)
    introduced = sorted(
        (fcd.fake_introduce_node(v), v) for v in members if fcd.fake_introduce_node(v) is not None
    )
    head = [v for _, v in introduced]
    return head + sorted(set(members) - set(head))


def reroute_cycle_in_clique(
    cycle: Sequence[int], s: int, fcd: FewCliquesDecomposition
) -> tuple[int, ...]:
    _check_cycle(cycle, fcd)
    members = set(fcd.clique_members(s))
    edges = cycle_edges(cycle)
    kept = {(u, v) for u, v in edges if not (u in members and v in members)}
    if len(kept) == len(edges):
        return cycle_from_edges(edges)
    paths = PathSystem.from_edges(cycle, kept)
    endpoints = set(paths.endpoint_list)
    if len(endpoints) < 3:
        return cycle_from_edges(edges)
    order = [v for v in clique_fake_order(fcd, s) if v in endpoints]
    return cycle_from_edges(kept | complete_paths_to_cycle(order, paths))


def normalize_cycle(cycle: Sequence[int], fcd: FewCliquesDecomposition) -> tuple[int, ...]:
    current = tuple(cycle)
    for s in range(len(fcd.map_graph.special_cliques)):
        current = reroute_cycle_in_clique(current, s, fcd)
    return current


def _check_cycle(cycle: Sequence[int], fcd: FewCliquesDecomposition) -> None:
    graph = fcd.map_graph.graph
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise PreconditionError(f"{tuple(cycle)} is not a simple cycle")
    for u, v in cycle_edges(cycle):
        if not graph.has_edge(u, v):
            raise PreconditionError(f"cycle uses the non-edge ({u}, {v})")
