from itertools import combinations
from typing import Optional

import networkx as nx

from mapkit.models.graph import Graph
from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult
from mapkit.utils.constants import ORACLE_MAX_VERTICES_CYCLES, ORACLE_MAX_VERTICES_DELETION
from mapkit.utils.errors import OracleSizeError, PreconditionError


def brute_force_solve(map_graph: MapGraph, problem: str, k: Optional[int] = None) -> SolveResult:
    graph = map_graph.graph
    if problem in ("vc", "fvs"):
        _guard(graph, ORACLE_MAX_VERTICES_DELETION)
        chosen = _smallest_deletion(graph, problem)
        value, certificate = len(chosen), (chosen,)
        answer = None if k is None else value <= k
    elif problem in ("longest-cycle", "longest-path", "cycle-packing"):
        _guard(graph, ORACLE_MAX_VERTICES_CYCLES)
        if problem == "longest-cycle":
            cycle = _longest_cycle(graph)
            value, certificate = len(cycle), ((cycle,) if cycle else ())
        elif problem == "longest-path":
            path = _longest_path(graph)
            value, certificate = len(path), ((path,) if path else ())
        else:
            certificate = _max_packing(graph)
            value = len(certificate)
        answer = None if k is None else value >= k
    else:
        raise PreconditionError(f"unknown problem {problem!r}")
    return SolveResult(problem=problem, k=k, value=value, answer=answer, certificate=certificate)


def _guard(graph: Graph, limit: int) -> None:
    if graph.n > limit:
        raise OracleSizeError(f"oracle is limited to {limit} vertices, got {graph.n}")


def _smallest_deletion(graph: Graph, problem: str) -> tuple[int, ...]:
    edges = graph.edges()
    full = graph.to_networkx()
    for size in range(graph.n + 1):
        for chosen in combinations(range(graph.n), size):
            removed = set(chosen)
            if problem == "vc":
                if all(u in removed or v in removed for u, v in edges):
                    return chosen
                continue
            rest = full.subgraph(set(full.nodes) - removed)
            if not rest.number_of_nodes() or nx.is_forest(rest):
                return chosen
    return tuple(range(graph.n))


def _longest_cycle(graph: Graph) -> tuple[int, ...]:
    """Backtracking over cycles whose smallest vertex is the start"""
    best: list[int] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        nonlocal best
        if len(best) == graph.n:
            return
        start, last = path[0], path[-1]
        for w in graph.adjacency[last]:
            if w == start and len(path) >= 3 and len(path) > len(best):
                best = list(path)
            if w > start and w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for start in range(graph.n):
        extend([start], {start})
    return tuple(best)


def _longest_path(graph: Graph) -> tuple[int, ...]:
    best: list[int] = []

    def extend(path: list[int], on_path: set[int]) -> None:
        nonlocal best
        if len(path) > len(best):
            best = list(path)
        if len(best) == graph.n:
            return
        for w in graph.adjacency[path[-1]]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                extend(path, on_path)
                on_path.discard(w)
                path.pop()

    for start in range(graph.n):
        extend([start], {start})
    return tuple(best)


def _max_packing(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Memoized over the vertex set still free: drop its smallest vertex or spend it on an induced cycle"""
    memo: dict[int, tuple[tuple[int, ...], ...]] = {}
    neighbours = [set(row) for row in graph.adjacency]

    def induced_cycles_through(v: int, free: int):
        def walk(path: list[int]):
            last = path[-1]
            for w in sorted(neighbours[last]):
                if not free >> w & 1 or w in path:
                    continue
                if any(w in neighbours[x] for x in path[1:-1]):
                    continue
                if len(path) == 1:
                    yield from walk(path + [w])
                elif v in neighbours[w]:
                    yield tuple(path + [w])
                else:
                    yield from walk(path + [w])

        yield from walk([v])

    def best(free: int) -> tuple[tuple[int, ...], ...]:
        if free in memo:
            return memo[free]
        if not free:
            return ()
        v = (free & -free).bit_length() - 1
        rest = free & ~(1 << v)
        chosen = best(rest)
        for cycle in induced_cycles_through(v, rest):
            remaining = rest
            for w in cycle[1:]:
                remaining &= ~(1 << w)
            candidate = (cycle,) + best(remaining)
            if len(candidate) > len(chosen):
                chosen = candidate
        memo[free] = chosen
        return chosen

    return best((1 << graph.n) - 1)
