from mapkit.models.crossing_classification import CrossingClassification
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.utils.errors import InvariantBreach


def crossing_classification(fcd: FewCliquesDecomposition, t: int) -> CrossingClassification:
    """Splits the edges leaving gamma'(t) into those at Original(t) and those inside Cliques(t)"""
    graph = fcd.map_graph.graph
    gamma = fcd.gamma_set(t)
    original = fcd.original_set(t)
    clique_sets = [frozenset(fcd.clique_members(s)) for s in fcd.cliques[t]]
    incident, inside = [], []
    for u in sorted(gamma):
        for w in graph.adjacency[u]:
            if w in gamma:
                continue
            if u in original:
                incident.append((u, w))
            elif any(u in members and w in members for members in clique_sets):
                inside.append((u, w))
            else:
                raise InvariantBreach(
                    "boundary edge is neither at an original vertex nor inside a bag clique",
                    {"node": t, "edge": (u, w)},
                )
    return CrossingClassification(
        node=t, incident_to_original=tuple(incident), inside_clique=tuple(inside)
    )


def edge_decision_points(fcd: FewCliquesDecomposition) -> dict[tuple[int, int], int]:
    bags = [fcd.bag(t) for t in range(fcd.node_count)]
    depth = [fcd.depth(t) for t in range(fcd.node_count)]
    return decision_points(fcd.map_graph.graph.edges(), bags, depth)


def decision_points(edges, bags, depth) -> dict[tuple[int, int], int]:
    """Deepest node holding both endpoints, ties to the smallest postorder id"""
    best: dict[tuple[int, int], int] = {}
    wanted = set(edges)
    for t, bag in enumerate(bags):
        members = sorted(bag)
        for i, u in enumerate(members):
            for v in members[i + 1 :]:
                edge = (u, v)
                if edge not in wanted:
                    continue
                current = best.get(edge)
                if current is None or depth[t] > depth[current]:
                    best[edge] = t
    missing = wanted - best.keys()
    if missing:
        raise InvariantBreach("edge has no node holding both endpoints", {"edges": sorted(missing)})
    return best
