import time
from typing import Optional

from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult, SolveStats
from mapkit.solvers.early_exit import check_early_exit
from mapkit.solvers.plan import build_plan
from mapkit.solvers.table_dp import TableDp, merged_vertices, with_vertex, without_vertex

DELETED = -1


def _canonical(verts: tuple[int, ...], codes: dict[int, int]) -> tuple[int, ...]:
    """Labels every forest block by its smallest bag vertex"""
    smallest: dict[int, int] = {}
    for v in verts:
        label = codes[v]
        if label != DELETED and label not in smallest:
            smallest[label] = v
    return tuple(DELETED if codes[v] == DELETED else smallest[codes[v]] for v in verts)


class FeedbackVertexSetDp(TableDp):
    """
    Keys give, per bag vertex, DELETED or the block of the surviving forest it lies in.
    Each bag clique keeps at most two survivors.
    """

    def __init__(self, plan, bound: int):
        super().__init__(plan)
        self.bound = bound

    def introduce(self, table, verts, v):
        grown = with_vertex(verts, v)
        result = {}
        for key, (score, payload) in table.items():
            for code in (DELETED, v):
                codes = dict(zip(verts, key))
                codes[v] = code
                self.store(result, _canonical(grown, codes), score, payload)
        return result, grown

    def count(self, table, verts, v):
        position = verts.index(v)
        result = {}
        for key, (score, payload) in table.items():
            if key[position] == DELETED:
                self.store(result, key, score + 1, payload | {v})
            else:
                self.store(result, key, score, payload)
        return result

    def forget(self, table, verts, v):
        shrunk = without_vertex(verts, v)
        result = {}
        for key, (score, payload) in table.items():
            codes = dict(zip(verts, key))
            self.store(result, _canonical(shrunk, codes), score, payload)
        return result, shrunk

    def edge(self, table, verts, edge, forced):
        a, b = verts.index(edge[0]), verts.index(edge[1])
        result = {}
        for key, (score, payload) in table.items():
            if key[a] == DELETED or key[b] == DELETED:
                self.store(result, key, score, payload)
                continue
            if key[a] == key[b]:
                continue
            merged_from, merged_into = key[b], key[a]
            codes = {
                v: merged_into if code == merged_from else code for v, code in zip(verts, key)
            }
            self.store(result, _canonical(verts, codes), score, payload)
        return result

    def join(self, left, left_verts, right, right_verts):
        verts = merged_vertices(left_verts, right_verts)
        right_set = set(right_verts)
        shared = [v for v in left_verts if v in right_set]
        result = {}
        for left_key, (left_score, left_payload) in left.items():
            left_codes = dict(zip(left_verts, left_key))
            for right_key, (right_score, right_payload) in right.items():
                right_codes = dict(zip(right_verts, right_key))
                if any((left_codes[v] == DELETED) != (right_codes[v] == DELETED) for v in shared):
                    continue
                codes = _fuse_forests(verts, left_codes, right_codes)
                if codes is None:
                    continue
                self.store(
                    result,
                    _canonical(verts, codes),
                    left_score + right_score,
                    left_payload | right_payload,
                )
        return result, verts

    def keep(self, key, entry, verts, node):
        if entry[0] > self.bound:
            return False
        codes = dict(zip(verts, key))
        return all(sum(codes[v] != DELETED for v in clique) <= 2 for clique in node.cliques)


def _fuse_forests(verts, left_codes, right_codes) -> Optional[dict[int, int]]:
    """Union of two forests glued on the shared bag vertices, None when a cycle appears"""
    root: dict[int, int] = {}

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for v in verts:
        root[v] = v
    for codes, check in ((left_codes, False), (right_codes, True)):
        first_of_block: dict[int, int] = {}
        for v, label in codes.items():
            if label == DELETED:
                continue
            if label not in first_of_block:
                first_of_block[label] = v
                continue
            a, b = find(first_of_block[label]), find(v)
            if a == b:
                if check:
                    return None
                continue
            root[b] = a
    merged = {}
    for v in verts:
        code = left_codes.get(v, right_codes.get(v))
        merged[v] = DELETED if code == DELETED else find(v)
    return merged


def solve_fvs(
    map_graph: MapGraph, fcd: FewCliquesDecomposition, k: Optional[int] = None
) -> SolveResult:
    early = check_early_exit(map_graph, "fvs", k)
    if early is not None:
        return early
    started = time.perf_counter()
    plan = build_plan(fcd)
    dp = FeedbackVertexSetDp(plan, bound=map_graph.n if k is None else k)
    root_table, _ = dp.run()
    found = dp.best(root_table)
    value = None if found is None else found[0]
    return SolveResult(
        problem="fvs",
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
