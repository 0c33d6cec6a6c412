from itertools import combinations

from mapkit.models.bipartite_witness import BipartiteWitness
from mapkit.models.graph import Graph
from mapkit.models.map_graph import MapGraph


def half_square(witness: BipartiteWitness) -> MapGraph:
    cliques = tuple(witness.nations_of(s) for s in range(witness.special_count))
    edges = {pair for clique in cliques for pair in combinations(clique, 2)}
    return MapGraph(
        graph=Graph.from_edges(witness.nation_count, sorted(edges)),
        special_cliques=cliques,
        witness_name=witness.name,
    )


def witness_graph(map_graph: MapGraph) -> Graph:
    """The witness B rebuilt from the special cliques: special s is vertex n + s"""
    n = map_graph.n
    edges = [
        (v, n + s) for s, clique in enumerate(map_graph.special_cliques) for v in clique
    ]
    return Graph.from_edges(n + len(map_graph.special_cliques), edges)
