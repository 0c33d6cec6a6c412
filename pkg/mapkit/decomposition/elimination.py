import random
from typing import Optional, Sequence

import networkx as nx

from mapkit.models.graph import Graph
from mapkit.models.tree_decomposition import ROOT_PARENT, TreeDecomposition
from mapkit.utils.constants import EXACT_DECOMPOSE_MAX_VERTICES
from mapkit.utils.errors import PreconditionError


def heuristic_decompose(graph: Graph, seed: int = 0) -> TreeDecomposition:
    """Greedy min-degree elimination, min-fill then a seeded rank break ties"""
    elimination = graph.to_networkx()
    vertices = list(range(graph.n))
    random.Random(seed).shuffle(vertices)
    rank = {v: position for position, v in enumerate(vertices)}

    order = []
    while elimination.number_of_nodes():
        v = min(
            elimination.nodes,
            key=lambda u: (elimination.degree(u), _fill_in(elimination, u), rank[u], u),
        )
        _eliminate(elimination, v)
        order.append(v)
    return decomposition_from_order(graph, order)


def exact_decompose_small(graph: Graph, width_budget: int) -> Optional[TreeDecomposition]:
    """
    Minimum-width decomposition by dynamic programming over eliminated vertex sets.
    Returns None when the treewidth exceeds width_budget.
    """
    n = graph.n
    if n > EXACT_DECOMPOSE_MAX_VERTICES:
        raise PreconditionError(
            f"exact search is limited to {EXACT_DECOMPOSE_MAX_VERTICES} vertices, got {n}"
        )
    if n == 0:
        return decomposition_from_order(graph, [])
    neighbour_masks = [sum(1 << u for u in graph.adjacency[v]) for v in range(n)]

    # best[S] = (width of the best order eliminating S first, last vertex, previous S)
    layer: dict[int, tuple[int, int, int]] = {0: (-1, -1, -1)}
    history: list[dict[int, tuple[int, int, int]]] = [layer]
    for _ in range(n):
        next_layer: dict[int, tuple[int, int, int]] = {}
        for eliminated, (width, _, _) in layer.items():
            for v in range(n):
                if eliminated >> v & 1:
                    continue
                candidate = max(width, _reachable_count(neighbour_masks, eliminated, v))
                if candidate > width_budget:
                    continue
                grown = eliminated | 1 << v
                if grown not in next_layer or candidate < next_layer[grown][0]:
                    next_layer[grown] = (candidate, v, eliminated)
        if not next_layer:
            return None
        history.append(next_layer)
        layer = next_layer

    order = []
    mask = (1 << n) - 1
    for level in range(n, 0, -1):
        _, v, previous = history[level][mask]
        order.append(v)
        mask = previous
    order.reverse()
    return decomposition_from_order(graph, order)


def decomposition_from_order(graph: Graph, order: Sequence[int]) -> TreeDecomposition:
    """
    Node i holds the vertex eliminated i-th from the end, so the last one is the root, node 0.
    Each node hangs below the node of its earliest-eliminated later neighbour.
    """
    if not order:
        return TreeDecomposition(node_count=1, parent=(ROOT_PARENT,), bags=((),), root=0)
    n = len(order)
    node_of = {v: n - 1 - position for position, v in enumerate(order)}
    position_of = {v: position for position, v in enumerate(order)}
    elimination = graph.to_networkx()
    parent = [ROOT_PARENT] * n
    bags: list[tuple[int, ...]] = [()] * n
    for v in order:
        later = sorted(elimination.neighbors(v))
        bags[node_of[v]] = tuple(sorted([v, *later]))
        if later:
            parent[node_of[v]] = node_of[min(later, key=position_of.__getitem__)]
        elif node_of[v] != 0:
            parent[node_of[v]] = 0
        _eliminate(elimination, v)
    return TreeDecomposition(node_count=n, parent=tuple(parent), bags=tuple(bags), root=0)


def _fill_in(graph: nx.Graph, v: int) -> int:
    neighbours = list(graph.neighbors(v))
    missing = 0
    for i, a in enumerate(neighbours):
        for b in neighbours[i + 1 :]:
            if not graph.has_edge(a, b):
                missing += 1
    return missing


def _eliminate(graph: nx.Graph, v: int) -> None:
    neighbours = list(graph.neighbors(v))
    for i, a in enumerate(neighbours):
        for b in neighbours[i + 1 :]:
            graph.add_edge(a, b)
    graph.remove_node(v)


def _reachable_count(neighbour_masks: list[int], eliminated: int, v: int) -> int:
    """Vertices outside eliminated + v reachable from v through eliminated vertices"""
    seen = 1 << v
    frontier = [v]
    reached = 0
    while frontier:
        u = frontier.pop()
        fresh = neighbour_masks[u] & ~seen
        seen |= fresh
        while fresh:
            low = fresh & -fresh
            w = low.bit_length() - 1
            fresh ^= low
            if eliminated >> w & 1:
                frontier.append(w)
            else:
                reached += 1
    return reached
