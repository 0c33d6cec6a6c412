from typing import Sequence

from mapkit.models.graph import Graph
from mapkit.models.nice_tree_decomposition import NiceTreeDecomposition
from mapkit.models.tree_decomposition import ROOT_PARENT, TreeDecomposition
from mapkit.models.validation_report import ValidationReport, Violation


def validate_td(td: TreeDecomposition, graph: Graph) -> ValidationReport:
    violations = axiom_violations(graph, td.parent, [td.bag_set(t) for t in range(td.node_count)])
    if isinstance(td, NiceTreeDecomposition):
        violations.extend(_label_violations(td))
    return ValidationReport(violations=violations)


def axiom_violations(
    graph: Graph, parent: Sequence[int], bags: Sequence[frozenset[int]]
) -> list[Violation]:
    """Coverage, edge coverage and connectivity of a tree of bags over graph"""
    violations = []
    occurrences: dict[int, list[int]] = {}
    for t, bag in enumerate(bags):
        for v in bag:
            if not 0 <= v < graph.n:
                violations.append(
                    Violation(kind="unknown-vertex", detail=f"bag {t} holds vertex {v} outside the graph")
                )
            occurrences.setdefault(v, []).append(t)

    for v in range(graph.n):
        if v not in occurrences:
            violations.append(Violation(kind="axiom-a", detail=f"vertex {v} is in no bag"))

    for u, v in graph.edges():
        if not any(v in bags[t] for t in occurrences.get(u, ())):
            violations.append(
                Violation(kind="axiom-b", detail=f"edge ({u}, {v}) shares no bag")
            )

    violations.extend(connectivity_violations(parent, bags))
    return violations


def connectivity_violations(parent: Sequence[int], bags: Sequence[frozenset[int]]) -> list[Violation]:
    """Axiom (c) alone; it needs no graph"""
    violations = []
    occurrences: dict[int, list[int]] = {}
    for t, bag in enumerate(bags):
        for v in bag:
            occurrences.setdefault(v, []).append(t)
    for v, nodes in sorted(occurrences.items()):
        node_set = set(nodes)
        # a connected occurrence set has exactly one node whose parent lies outside it
        tops = [t for t in nodes if parent[t] == ROOT_PARENT or parent[t] not in node_set]
        if len(tops) != 1:
            violations.append(
                Violation(
                    kind="axiom-c",
                    detail=f"vertex {v} occurs in {len(tops)} disconnected parts rooted at {sorted(tops)}",
                )
            )
    return violations


def _label_violations(td: NiceTreeDecomposition) -> list[Violation]:
    violations = []
    if len(td.labels) != td.node_count:
        return [Violation(kind="labels", detail="one label per node is required")]
    if td.bag_set(td.root):
        violations.append(Violation(kind="root-bag", detail=f"root {td.root} has a nonempty bag"))

    forgets: dict[int, list[int]] = {}
    for t, label in enumerate(td.labels):
        bag = td.bag_set(t)
        children = td.children(t)
        child_bags = [td.bag_set(c) for c in children]
        expected_children = {"leaf": 0, "introduce": 1, "forget": 1, "join": 2}[label.kind]
        if len(children) != expected_children:
            violations.append(
                Violation(
                    kind="label-grammar",
                    detail=f"{label} node {t} has {len(children)} children",
                )
            )
            continue
        if label.kind == "leaf" and bag:
            violations.append(Violation(kind="label-grammar", detail=f"leaf {t} has a nonempty bag"))
        elif label.kind == "introduce" and (
            label.vertex in child_bags[0] or bag != child_bags[0] | {label.vertex}
        ):
            violations.append(
                Violation(kind="label-grammar", detail=f"node {t} does not introduce exactly {label.vertex}")
            )
        elif label.kind == "forget" and (
            label.vertex not in child_bags[0] or bag != child_bags[0] - {label.vertex}
        ):
            violations.append(
                Violation(kind="label-grammar", detail=f"node {t} does not forget exactly {label.vertex}")
            )
        elif label.kind == "join" and any(child_bag != bag for child_bag in child_bags):
            violations.append(
                Violation(kind="label-grammar", detail=f"join {t} has a child with a different bag")
            )
        if label.kind == "forget":
            forgets.setdefault(label.vertex, []).append(t)

    vertices = set().union(*(td.bag_set(t) for t in range(td.node_count)))
    for v in sorted(vertices):
        count = len(forgets.get(v, ()))
        if count != 1:
            violations.append(
                Violation(kind="forget-uniqueness", detail=f"vertex {v} has {count} forget nodes")
            )
    return violations
