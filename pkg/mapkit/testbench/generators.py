import random

from mapkit.models.bipartite_witness import BipartiteWitness
from mapkit.models.gen_spec import GenSpec
from mapkit.models.graph import Graph


def generate(spec: GenSpec) -> BipartiteWitness:
    if spec.family == "star":
        return star(spec.size[0])
    if spec.family == "grid":
        return grid(*spec.size)
    if spec.family == "random_incidence":
        return random_incidence(spec.size[0], spec.probability, spec.seed)
    return random_planar_bipartite(spec.size[0], spec.probability, spec.seed)


def star(leaves: int) -> BipartiteWitness:
    """One special adjacent to every nation; the map graph is a clique"""
    return _witness(leaves, [tuple(range(leaves))], f"star{leaves}")


def grid(rows: int, columns: int) -> BipartiteWitness:
    """Nation r*columns+c per grid point, one special per grid edge"""
    specials = []
    for r in range(rows):
        for c in range(columns):
            v = r * columns + c
            if c + 1 < columns:
                specials.append((v, v + 1))
            if r + 1 < rows:
                specials.append((v, v + columns))
    return _witness(rows * columns, specials, f"grid{rows}x{columns}")


def random_incidence(n: int, keep: float, seed: int) -> BipartiteWitness:
    """Incidence graph of a stacked triangulation; each edge survives as a special with probability keep"""
    rng = random.Random(seed)
    edges = _stacked_triangulation(n, rng)
    kept = [edge for edge in edges if rng.random() < keep]
    return _witness(n, kept, f"incidence{n}-{seed}")


def random_planar_bipartite(n: int, special_probability: float, seed: int) -> BipartiteWitness:
    """Stacked triangulation with random sides; edges inside one side are dropped"""
    rng = random.Random(seed)
    edges = _stacked_triangulation(n, rng)
    is_special = [False] + [rng.random() < special_probability for _ in range(1, n)]
    nations = [v for v in range(n) if not is_special[v]]
    specials = [v for v in range(n) if is_special[v]]
    nation_id = {v: i for i, v in enumerate(nations)}
    neighbourhoods: list[list[int]] = [[] for _ in specials]
    special_id = {v: i for i, v in enumerate(specials)}
    for u, v in edges:
        if is_special[u] == is_special[v]:
            continue
        nation, special = (u, v) if is_special[v] else (v, u)
        neighbourhoods[special_id[special]].append(nation_id[nation])
    return _witness(len(nations), [tuple(sorted(row)) for row in neighbourhoods], f"planar{n}-{seed}")


def _stacked_triangulation(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n < 3:
        return [(0, 1)] if n == 2 else []
    edges = {(0, 1), (1, 2), (0, 2)}
    faces = [(0, 1, 2)]
    for v in range(3, n):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.update({(a, v), (b, v), (c, v)})
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    return sorted(edges)


def _witness(nations: int, cliques, name: str) -> BipartiteWitness:
    edges = [(v, nations + s) for s, clique in enumerate(cliques) for v in clique]
    return BipartiteWitness(
        graph=Graph.from_edges(nations + len(cliques), edges),
        nation_count=nations,
        special_count=len(cliques),
        name=name,
    )
