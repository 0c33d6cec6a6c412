import random

from mapkit.decomposition.elimination import decomposition_from_order, heuristic_decompose
from mapkit.decomposition.nice import make_nice
from mapkit.few_cliques.derivation import derive_fcd
from mapkit.graph_core.half_square import half_square
from mapkit.models.bipartite_witness import BipartiteWitness
from mapkit.models.graph import Graph
from mapkit.testbench.generators import random_incidence, random_planar_bipartite

STAR4_TEXT = "c the four-nation star\np tmap 4 1 4\ne 1 5\ne 2 5\ne 3 5\ne 4 5\n"


def pipeline(witness: BipartiteWitness, seed: int = 0, order=None):
    map_graph = half_square(witness)
    if order is None:
        td = heuristic_decompose(witness.graph, seed=seed)
    else:
        td = decomposition_from_order(witness.graph, order)
    nice = make_nice(td)
    return map_graph, derive_fcd(nice, map_graph)


def witness_from_cliques(nations: int, cliques) -> BipartiteWitness:
    edges = [(v, nations + s) for s, clique in enumerate(cliques) for v in clique]
    return BipartiteWitness(
        graph=Graph.from_edges(nations + len(cliques), edges),
        nation_count=nations,
        special_count=len(cliques),
    )


def random_witnesses(count: int, max_vertices: int, seed: int = 7, max_witness_vertices: int = None):
    """Alternates the two random families; sizes stay at or below max_vertices nations"""
    rng = random.Random(seed)
    produced = 0
    attempt = 0
    while produced < count:
        attempt += 1
        n = rng.randint(3, max_vertices + 3)
        if attempt % 2:
            witness = random_planar_bipartite(n, rng.uniform(0.25, 0.5), seed=attempt)
        else:
            witness = random_incidence(min(n, max_vertices), rng.uniform(0.4, 0.9), seed=attempt)
        if max_witness_vertices is not None and witness.vertex_count > max_witness_vertices:
            continue
        if 1 <= witness.nation_count <= max_vertices:
            produced += 1
            yield witness


def random_instances(count: int, max_vertices: int, seed: int = 7):
    for i, witness in enumerate(random_witnesses(count, max_vertices, seed)):
        map_graph, fcd = pipeline(witness, seed=i)
        yield witness, map_graph, fcd


def subtree_of(fcd, t: int) -> set[int]:
    nodes = {t}
    stack = [t]
    while stack:
        for child in fcd.children(stack.pop()):
            nodes.add(child)
            stack.append(child)
    return nodes
