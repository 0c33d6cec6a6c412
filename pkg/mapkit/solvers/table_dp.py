from typing import Any, Hashable, Optional

from mapkit.models.dp_plan import DpPlan, PlanNode

# key -> (score, payload); the payload carries the partial solution for the certificate
Table = dict[Hashable, tuple[int, Any]]


class TableDp:
    """
    Bottom-up dynamic program over a DpPlan. Per node: combine the child tables,
    introduce new vertices, pay for vertices that stop being original, forget,
    decide the node's edges, then filter. Subclasses supply the transitions.
    """

    minimize = True

    def __init__(self, plan: DpPlan):
        self.plan = plan
        self.node_states = [0] * len(plan.nodes)

    def run(self) -> tuple[Table, tuple[int, ...]]:
        tables: dict[int, tuple[Table, tuple[int, ...]]] = {}
        for t, node in enumerate(self.plan.nodes):
            if not node.children:
                table: Table = {self.empty_key(): (0, self.empty_payload())}
                verts: tuple[int, ...] = ()
            else:
                table, verts = tables.pop(node.children[0])
                for child in node.children[1:]:
                    other, other_verts = tables.pop(child)
                    table, verts = self.join(table, verts, other, other_verts)
            for v in node.introduced:
                table, verts = self.introduce(table, verts, v)
            for v in node.counted:
                table = self.count(table, verts, v)
            for v in node.forgotten:
                table, verts = self.forget(table, verts, v)
            for edge in node.edges:
                table = self.edge(table, verts, edge, forced=False)
            for edge in node.forced_edges:
                table = self.edge(table, verts, edge, forced=True)
            table = {key: entry for key, entry in table.items() if self.keep(key, entry, verts, node)}
            tables[t] = (table, verts)
            self.node_states[t] = len(table)
        return tables[self.plan.root]

    def store(self, table: Table, key: Hashable, score: int, payload: Any) -> None:
        current = table.get(key)
        if current is None or (score < current[0] if self.minimize else score > current[0]):
            table[key] = (score, payload)

    def best(self, table: Table, accept=lambda key: True) -> Optional[tuple[int, Any]]:
        chosen = None
        for key, entry in table.items():
            if not accept(key):
                continue
            if chosen is None or (entry[0] < chosen[0] if self.minimize else entry[0] > chosen[0]):
                chosen = entry
        return chosen

    def empty_key(self) -> Hashable:
        return ()

    def empty_payload(self) -> Any:
        return frozenset()

    def introduce(self, table: Table, verts: tuple[int, ...], v: int):
        raise NotImplementedError

    def count(self, table: Table, verts: tuple[int, ...], v: int) -> Table:
        return table

    def forget(self, table: Table, verts: tuple[int, ...], v: int):
        raise NotImplementedError

    def edge(self, table: Table, verts: tuple[int, ...], edge: tuple[int, int], forced: bool) -> Table:
        raise NotImplementedError

    def join(self, left: Table, left_verts, right: Table, right_verts):
        raise NotImplementedError

    def keep(self, key: Hashable, entry: tuple[int, Any], verts: tuple[int, ...], node: PlanNode) -> bool:
        return True


def with_vertex(verts: tuple[int, ...], v: int) -> tuple[int, ...]:
    return tuple(sorted(verts + (v,)))


def without_vertex(verts: tuple[int, ...], v: int) -> tuple[int, ...]:
    return tuple(u for u in verts if u != v)


def merged_vertices(left: tuple[int, ...], right: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(set(left) | set(right)))
