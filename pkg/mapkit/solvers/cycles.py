import time
from typing import Optional

import networkx as nx

from mapkit.crossing.cycles import cycle_from_edges, edge_components, path_from_edges
from mapkit.models.dp_plan import DpPlan
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.map_graph import MapGraph
from mapkit.models.solve_result import SolveResult, SolveStats
from mapkit.solvers.early_exit import check_early_exit
from mapkit.solvers.plan import build_plan
from mapkit.solvers.table_dp import TableDp, merged_vertices, with_vertex, without_vertex

# any other code is the partner at the far end of the vertex's path
ABSENT = -1
SATURATED = -2


class CycleDp(TableDp):
    """
    Keys are (statuses, closed). A status is ABSENT (degree 0), SATURATED (degree 2)
    or the partner endpoint of the path ending at the vertex. The score is the edge count.
    """

    minimize = False
    packing = False

    def empty_key(self):
        return ((), False)

    def empty_payload(self):
        return ()

    def introduce(self, table, verts, v):
        grown = with_vertex(verts, v)
        position = grown.index(v)
        result = {}
        for (codes, closed), (score, payload) in table.items():
            self.store(result, (codes[:position] + (ABSENT,) + codes[position:], closed), score, payload)
        return result, grown

    def forget(self, table, verts, v):
        position = verts.index(v)
        result = {}
        for (codes, closed), (score, payload) in table.items():
            if codes[position] >= 0:
                continue
            self.store(result, (codes[:position] + codes[position + 1 :], closed), score, payload)
        return result, without_vertex(verts, v)

    def edge(self, table, verts, edge, forced):
        result = {}
        for key, (score, payload) in table.items():
            if not forced:
                self.store(result, key, score, payload)
            taken = self._take(verts, key, edge)
            if taken is not None:
                new_key, closes = taken
                self.store(result, new_key, score + self._gain(closes), payload + (edge,))
        return result

    def _gain(self, closes: bool) -> int:
        return 1

    def _take(self, verts, key, edge):
        codes, closed = key
        if closed:
            return None
        status = dict(zip(verts, codes))
        u, v = edge
        cu, cv = status[u], status[v]
        if cu == SATURATED or cv == SATURATED:
            return None
        closes = False
        if cu == ABSENT and cv == ABSENT:
            status[u], status[v] = v, u
        elif cu == ABSENT:
            status[u], status[cv], status[v] = cv, u, SATURATED
        elif cv == ABSENT:
            status[v], status[cu], status[u] = cu, v, SATURATED
        elif cu == v:
            status[u] = status[v] = SATURATED
            closes = True
            if not self.packing and any(code >= 0 for code in status.values()):
                return None
        else:
            status[cu], status[cv] = cv, cu
            status[u] = status[v] = SATURATED
        return (tuple(status[x] for x in verts), closes and not self.packing), closes

    def join(self, left, left_verts, right, right_verts):
        verts = merged_vertices(left_verts, right_verts)
        result = {}
        for (left_codes, left_closed), (left_score, left_payload) in left.items():
            left_status = dict(zip(left_verts, left_codes))
            for (right_codes, right_closed), (right_score, right_payload) in right.items():
                if (left_closed and right_score) or (right_closed and left_score):
                    continue
                glued = _glue(left_status, dict(zip(right_verts, right_codes)))
                if glued is None:
                    continue
                status, cycles = glued
                closed = left_closed or right_closed
                if not self.packing and cycles:
                    if cycles > 1 or any(code >= 0 for code in status.values()):
                        continue
                    closed = True
                score = left_score + right_score + (cycles if self.packing else 0)
                self.store(
                    result,
                    (tuple(status[v] for v in verts), closed),
                    score,
                    left_payload + right_payload,
                )
        return result, verts

    def keep(self, key, entry, verts, node):
        """Counts only open path ends on fake bag vertices against the cap; original ends are never capped"""
        if node.cap is None:
            return True
        codes, _ = key
        fake_ends = sum(
            1 for v, code in zip(verts, codes) if code >= 0 and v not in node.originals
        )
        return fake_ends <= node.cap


class PackingDp(CycleDp):
    """Same statuses; every closure completes one more cycle and the score counts cycles"""

    packing = True

    def _gain(self, closes: bool) -> int:
        return 1 if closes else 0


def _glue(left: dict[int, int], right: dict[int, int]):
    """Statuses after gluing two partial path systems on their shared vertices, and the cycles closed"""
    status: dict[int, int] = {}
    for v in left.keys() | right.keys():
        a, b = left.get(v, ABSENT), right.get(v, ABSENT)
        if a == ABSENT:
            status[v] = b
        elif b == ABSENT:
            status[v] = a
        elif a == SATURATED or b == SATURATED:
            return None
        else:
            status[v] = SATURATED

    links: dict[int, list[int]] = {}
    for side in (left, right):
        for v, partner in side.items():
            if partner >= 0 and v < partner:
                links.setdefault(v, []).append(partner)
                links.setdefault(partner, []).append(v)

    seen: set[int] = set()
    for start in sorted(links):
        if start in seen or len(links[start]) != 1:
            continue
        previous, current = None, start
        seen.add(start)
        while True:
            step = [w for w in links[current] if w != previous]
            if not step:
                break
            previous, current = current, step[0]
            seen.add(current)
        status[start], status[current] = current, start

    cycles = 0
    for start in sorted(links):
        if start in seen:
            continue
        cycles += 1
        stack = [start]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            stack.extend(links[node])
    return status, cycles


def _stats(plan: DpPlan, node_states, started: float) -> SolveStats:
    return SolveStats(
        width_d=plan.width_d,
        maxbag_dprime=plan.maxbag_dprime,
        cap=plan.max_cap,
        node_states=tuple(node_states),
        millis=(time.perf_counter() - started) * 1000,
    )


def solve_longest_cycle(
    map_graph: MapGraph,
    fcd: FewCliquesDecomposition,
    k: Optional[int] = None,
    cap_override: Optional[int] = None,
    capped: bool = True,
) -> SolveResult:
    early = check_early_exit(map_graph, "longest-cycle", k)
    if early is not None:
        return early
    started = time.perf_counter()
    plan = build_plan(fcd, "cycle", cap_override, capped)
    dp = CycleDp(plan)
    root_table, _ = dp.run()
    found = dp.best(root_table, accept=lambda key: key[1])
    value = 0 if found is None else found[0]
    return SolveResult(
        problem="longest-cycle",
        k=k,
        value=value,
        answer=None if k is None else value >= k,
        certificate=() if found is None else (cycle_from_edges(found[1]),),
        stats=_stats(plan, dp.node_states, started),
    )


def solve_longest_path(
    map_graph: MapGraph,
    fcd: FewCliquesDecomposition,
    k: Optional[int] = None,
    cap_override: Optional[int] = None,
    capped: bool = True,
) -> SolveResult:
    """Longest path counted in vertices, via one capped cycle DP per guessed endpoint pair"""
    early = check_early_exit(map_graph, "longest-path", k)
    if early is not None:
        return early
    started = time.perf_counter()
    graph = map_graph.graph
    best_value, best_path = 0, ()
    if graph.n:
        best_value, best_path = 1, (0,)
    if graph.edge_count:
        best_value, best_path = 2, graph.edges()[0]

    plan = build_plan(fcd, "cycle", cap_override, capped)
    node_states = [0] * len(plan.nodes)
    stopped_early = False
    components = sorted(
        (sorted(component) for component in nx.connected_components(graph.to_networkx())),
        key=lambda component: component[0],
    )
    for component in components:
        for i, u in enumerate(component):
            for v in component[i + 1 :]:
                if best_value >= len(component):
                    break
                if k is not None and best_value >= k:
                    stopped_early = True
                    break
                plan = build_plan(fcd, "cycle", cap_override, capped, path_ends=(u, v))
                dp = CycleDp(plan)
                root_table, _ = dp.run()
                node_states = [max(a, b) for a, b in zip(node_states, dp.node_states)]
                found = dp.best(root_table, accept=lambda key: key[1])
                if found is not None and found[0] > best_value:
                    best_value = found[0]
                    best_path = path_from_edges([e for e in found[1] if e != (u, v)], u)
    return SolveResult(
        problem="longest-path",
        k=k,
        value=best_value,
        exact=not stopped_early,
        answer=None if k is None else best_value >= k,
        certificate=(tuple(best_path),) if best_path else (),
        stats=_stats(plan, node_states, started),
    )


def solve_cycle_packing(
    map_graph: MapGraph,
    fcd: FewCliquesDecomposition,
    k: Optional[int] = None,
    cap_override: Optional[int] = None,
    capped: bool = True,
) -> SolveResult:
    early = check_early_exit(map_graph, "cycle-packing", k)
    if early is not None:
        return early
    started = time.perf_counter()
    plan = build_plan(fcd, "packing", cap_override, capped)
    dp = PackingDp(plan)
    root_table, _ = dp.run()
    found = dp.best(root_table, accept=lambda key: all(code < 0 for code in key[0]))
    value, edges = (0, ()) if found is None else found
    return SolveResult(
        problem="cycle-packing",
        k=k,
        value=value,
        answer=None if k is None else value >= k,
        certificate=tuple(cycle_from_edges(component) for component in edge_components(edges)),
        stats=_stats(plan, node_states=dp.node_states, started=started),
    )
