from typing import Optional

from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult, SolveStats


def check_early_exit(map_graph: MapGraph, problem: str, k: Optional[int]) -> Optional[SolveResult]:
    """Answers from the largest special clique alone, or None"""
    if k is None:
        return None
    clique = map_graph.largest_clique()
    size = len(clique)
    stats = SolveStats(early_exit="clique")

    if problem == "fvs" and size >= k + 3:
        return SolveResult(
            problem=problem, k=k, exact=False, answer=False, certificate=(clique,), stats=stats
        )
    if problem == "vc" and size >= k + 2:
        return SolveResult(
            problem=problem, k=k, exact=False, answer=False, certificate=(clique,), stats=stats
        )
    if problem == "longest-cycle" and size >= max(k, 3):
        cycle = clique[: max(k, 3)]
        return SolveResult(
            problem=problem,
            k=k,
            value=len(cycle),
            exact=False,
            answer=True,
            certificate=(cycle,),
            stats=stats,
        )
    if problem == "longest-path" and size >= max(k, 1):
        path = clique[: max(k, 1)]
        return SolveResult(
            problem=problem,
            k=k,
            value=len(path),
            exact=False,
            answer=True,
            certificate=(path,),
            stats=stats,
        )
    if problem == "cycle-packing" and k >= 1 and size >= 3 * k:
        triangles = tuple(clique[3 * i : 3 * i + 3] for i in range(k))
        return SolveResult(
            problem=problem,
            k=k,
            value=k,
            exact=False,
            answer=True,
            certificate=triangles,
            stats=stats,
        )
    return None
