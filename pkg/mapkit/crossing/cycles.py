from typing import Iterable, Sequence

import networkx as nx


def cycle_edges(cycle: Sequence[int]) -> set[tuple[int, int]]:
    return {
        (min(u, v), max(u, v)) for u, v in zip(cycle, list(cycle[1:]) + [cycle[0]])
    }


def cycle_from_edges(edges: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    """Vertex sequence of a single cycle, from its smallest vertex towards the smaller neighbour"""
    graph = nx.Graph(list(edges))
    if not graph.number_of_nodes():
        return ()
    start = min(graph.nodes)
    # cut the cycle open on the side of the larger neighbour
    graph.remove_edge(start, max(graph.neighbors(start)))
    return tuple(nx.dfs_preorder_nodes(graph, source=start))


def path_from_edges(edges: Iterable[tuple[int, int]], start: int) -> tuple[int, ...]:
    graph = nx.Graph(list(edges))
    graph.add_node(start)
    return tuple(nx.dfs_preorder_nodes(graph, source=start))


def edge_components(edges: Iterable[tuple[int, int]]) -> list[set[tuple[int, int]]]:
    """Edge sets of the connected components, ordered by smallest vertex"""
    graph = nx.Graph(list(edges))
    groups = [
        {(min(u, v), max(u, v)) for u, v in graph.subgraph(component).edges}
        for component in nx.connected_components(graph)
    ]
    return sorted(groups, key=lambda group: min(min(edge) for edge in group))
