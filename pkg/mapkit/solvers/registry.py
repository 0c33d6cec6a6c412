from typing import Optional

from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult
from mapkit.solvers.cycles import solve_cycle_packing, solve_longest_cycle, solve_longest_path
from mapkit.solvers.feedback_vertex_set import solve_fvs
from mapkit.solvers.vertex_cover import solve_vertex_cover
from mapkit.utils.errors import PreconditionError

_CAPPED = {
    "longest-cycle": solve_longest_cycle,
    "longest-path": solve_longest_path,
    "cycle-packing": solve_cycle_packing,
}
_UNCAPPED = {"vc": solve_vertex_cover, "fvs": solve_fvs}


def solve_problem(
    problem: str,
    map_graph: MapGraph,
    fcd: FewCliquesDecomposition,
    k: Optional[int] = None,
    cap_override: Optional[int] = None,
    capped: bool = True,
) -> SolveResult:
    if problem in _CAPPED:
        return _CAPPED[problem](map_graph, fcd, k, cap_override=cap_override, capped=capped)
    if problem in _UNCAPPED:
        return _UNCAPPED[problem](map_graph, fcd, k)
    raise PreconditionError(f"unknown problem {problem!r}")
