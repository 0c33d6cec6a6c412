import networkx as nx

from mapkit.models.bipartite_witness import BipartiteWitness
from mapkit.models.validation_report import ValidationReport, Violation


def validate_witness(witness: BipartiteWitness, strict: bool = False) -> ValidationReport:
    violations = []
    graph = witness.graph
    vertex_count = witness.vertex_count
    if graph.n != vertex_count:
        violations.append(
            Violation(
                kind="sides",
                detail=f"graph has {graph.n} vertices, sides declare {vertex_count}",
            )
        )
    for u, v in graph.edges():
        if witness.is_nation(u) == witness.is_nation(v):
            violations.append(
                Violation(kind="bipartite", detail=f"edge ({u}, {v}) joins vertices of one side")
            )
    if vertex_count >= 3 and graph.edge_count > 2 * vertex_count - 4:
        violations.append(
            Violation(
                kind="euler-bound",
                detail=f"{graph.edge_count} edges exceed 2(W+U)-4 = {2 * vertex_count - 4}",
            )
        )
    if strict:
        is_planar, _ = nx.check_planarity(graph.to_networkx())
        if not is_planar:
            violations.append(Violation(kind="planarity", detail="witness graph is not planar"))
    return ValidationReport(violations=violations)
