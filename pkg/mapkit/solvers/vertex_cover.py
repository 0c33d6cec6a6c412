import time
from typing import Optional

from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult, SolveStats
from mapkit.solvers.early_exit import check_early_exit
from mapkit.solvers.plan import build_plan
from mapkit.solvers.table_dp import TableDp, merged_vertices, with_vertex, without_vertex

COVERED = 1
UNCOVERED = 0


class VertexCoverDp(TableDp):
    """Keys give covered/uncovered per bag vertex; at most one uncovered vertex per bag clique"""

    def __init__(self, plan, bound: int):
        super().__init__(plan)
        self.bound = bound

    def introduce(self, table, verts, v):
        grown = with_vertex(verts, v)
        position = grown.index(v)
        result = {}
        for key, (score, payload) in table.items():
            for code in (COVERED, UNCOVERED):
                self.store(result, key[:position] + (code,) + key[position:], score, payload)
        return result, grown

    def count(self, table, verts, v):
        position = verts.index(v)
        result = {}
        for key, (score, payload) in table.items():
            if key[position] == COVERED:
                self.store(result, key, score + 1, payload | {v})
            else:
                self.store(result, key, score, payload)
        return result

    def forget(self, table, verts, v):
        position = verts.index(v)
        result = {}
        for key, (score, payload) in table.items():
            self.store(result, key[:position] + key[position + 1 :], score, payload)
        return result, without_vertex(verts, v)

    def edge(self, table, verts, edge, forced):
        a, b = verts.index(edge[0]), verts.index(edge[1])
        return {
            key: entry
            for key, entry in table.items()
            if key[a] == COVERED or key[b] == COVERED
        }

    def join(self, left, left_verts, right, right_verts):
        verts = merged_vertices(left_verts, right_verts)
        shared = [v for v in left_verts if v in set(right_verts)]
        left_at = [left_verts.index(v) for v in shared]
        right_at = [right_verts.index(v) for v in shared]
        by_trace: dict[tuple, list] = {}
        for key, entry in right.items():
            by_trace.setdefault(tuple(key[i] for i in right_at), []).append((key, entry))
        result = {}
        for left_key, (left_score, left_payload) in left.items():
            codes = dict(zip(left_verts, left_key))
            for right_key, (right_score, right_payload) in by_trace.get(
                tuple(left_key[i] for i in left_at), ()
            ):
                codes.update(zip(right_verts, right_key))
                self.store(
                    result,
                    tuple(codes[v] for v in verts),
                    left_score + right_score,
                    left_payload | right_payload,
                )
        return result, verts

    def keep(self, key, entry, verts, node):
        if entry[0] > self.bound:
            return False
        codes = dict(zip(verts, key))
        return all(
            sum(codes[v] == UNCOVERED for v in clique) <= 1 for clique in node.cliques
        )


def solve_vertex_cover(
    map_graph: MapGraph, fcd: FewCliquesDecomposition, k: Optional[int] = None
) -> SolveResult:
    early = check_early_exit(map_graph, "vc", k)
    if early is not None:
        return early
    started = time.perf_counter()
    plan = build_plan(fcd)
    dp = VertexCoverDp(plan, bound=map_graph.n if k is None else k)
    root_table, _ = dp.run()
    found = dp.best(root_table)
    value = None if found is None else found[0]
    return SolveResult(
        problem="vc",
        k=k,
        value=value,
        answer=None if k is None else value is not None,
        certificate=() if found is None else (tuple(sorted(found[1])),),
        stats=SolveStats(
            width_d=plan.width_d,
            maxbag_dprime=plan.maxbag_dprime,
            node_states=tuple(dp.node_states),
            millis=(time.perf_counter() - started) * 1000,
        ),
    )
