from mapkit.decomposition.validation import axiom_violations
from mapkit.few_cliques.crossing_edges import crossing_classification
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.validation_report import ValidationReport, Violation
from mapkit.utils.errors import InvariantBreach


def validate_fcd(fcd: FewCliquesDecomposition) -> ValidationReport:
    violations = axiom_violations(
        fcd.map_graph.graph, fcd.source.parent, [fcd.bag(t) for t in range(fcd.node_count)]
    )
    violations.extend(_bag_violations(fcd))
    violations.extend(_fake_path_violations(fcd))
    violations.extend(_node_identity_violations(fcd))
    violations.extend(_fake_introduce_violations(fcd))
    for t in range(fcd.node_count):
        try:
            crossing_classification(fcd, t)
        except InvariantBreach as e:
            violations.append(Violation(kind="crossing-classification", detail=str(e)))
    return ValidationReport(violations=violations)


def _bag_violations(fcd: FewCliquesDecomposition) -> list[Violation]:
    """Recomputes gamma_D and the replaced bags from the source decomposition alone"""
    source = fcd.source
    n = fcd.nation_count
    budget = source.width + 1
    violations = []
    gamma: list[set[int]] = []
    for t in range(fcd.node_count):
        below = set(source.bag_set(t))
        for child in source.children(t):
            below |= gamma[child]
        gamma.append(below)
        nations = {x for x in source.bag_set(t) if x < n}
        expected = set(nations)
        for x in source.bag_set(t):
            if x >= n:
                expected |= set(fcd.clique_members(x - n)) & below
        original, fake = set(fcd.original[t]), set(fcd.fake[t])
        if original & fake:
            violations.append(
                Violation(kind="original-fake-overlap", detail=f"node {t}: {sorted(original & fake)}")
            )
        if original != nations or original | fake != expected:
            violations.append(
                Violation(kind="bag-definition", detail=f"node {t} bag differs from the replaced bag")
            )
        if set(fcd.gamma[t]) != {x for x in below if x < n}:
            violations.append(Violation(kind="gamma", detail=f"node {t} stores a wrong subtree set"))
        if len(original) + len(fcd.cliques[t]) > budget:
            violations.append(
                Violation(kind="bag-budget", detail=f"node {t} exceeds width(D)+1 = {budget}")
            )
    return violations


def _fake_path_violations(fcd: FewCliquesDecomposition) -> list[Violation]:
    """For v in N_B(s), the nodes with v fake and s in the source bag run from Forget(v) up to below Forget(s)"""
    source = fcd.source
    n = fcd.nation_count
    violations = []
    for s, members in enumerate(fcd.map_graph.special_cliques):
        forget_s = source.forget_node(n + s)
        for v in members:
            nodes = {
                t
                for t in range(fcd.node_count)
                if v in fcd.fake[t] and fcd.special_in_source_bag(s, t)
            }
            if not nodes:
                continue
            expected = set()
            t = source.forget_node(v)
            while t != forget_s and t >= 0:
                expected.add(t)
                t = source.parent[t]
            if t != forget_s or nodes != expected:
                violations.append(
                    Violation(
                        kind="fake-path",
                        detail=f"vertex {v}, special {s}: nodes {sorted(nodes)} are not the path {sorted(expected)}",
                    )
                )
    return violations


def _node_identity_violations(fcd: FewCliquesDecomposition) -> list[Violation]:
    violations = []
    for t, label in enumerate(fcd.labels):
        children = fcd.children(t)
        if label.kind == "redundant":
            child = children[0]
            if fcd.original[t] != fcd.original[child] or fcd.fake[t] != fcd.fake[child]:
                violations.append(
                    Violation(kind="redundant", detail=f"node {t} changes Original or Fake")
                )
        elif label.kind == "join":
            left, right = children
            if not fcd.original[t] == fcd.original[left] == fcd.original[right]:
                violations.append(Violation(kind="join-original", detail=f"join {t}"))
            if not fcd.cliques[t] == fcd.cliques[left] == fcd.cliques[right]:
                violations.append(Violation(kind="join-cliques", detail=f"join {t}"))
            shared = set(fcd.fake[left]) & set(fcd.fake[right])
            if shared:
                violations.append(
                    Violation(kind="join-fake-disjoint", detail=f"join {t} children share {sorted(shared)}")
                )
            if set(fcd.fake[t]) != set(fcd.fake[left]) | set(fcd.fake[right]):
                violations.append(Violation(kind="join-fake-union", detail=f"join {t}"))
    return violations


def _fake_introduce_violations(fcd: FewCliquesDecomposition) -> list[Violation]:
    violations = []
    fake_introduced: dict[int, list[int]] = {}
    for t, label in enumerate(fcd.labels):
        if label.kind == "fake_introduce":
            fake_introduced.setdefault(label.vertex, []).append(t)
    for v in range(fcd.nation_count):
        fake_nodes = [t for t in range(fcd.node_count) if v in fcd.fake[t]]
        nodes = fake_introduced.get(v, [])
        if len(nodes) > 1:
            violations.append(
                Violation(kind="fake-introduce-unique", detail=f"vertex {v} at nodes {nodes}")
            )
            continue
        if not nodes:
            if fake_nodes:
                violations.append(
                    Violation(kind="fake-introduce-missing", detail=f"vertex {v} is fake without a label")
                )
            continue
        start = nodes[0]
        child = fcd.children(start)[0]
        if v not in fcd.fake[start] or v not in fcd.original[child]:
            violations.append(
                Violation(kind="fake-introduce-switch", detail=f"vertex {v} at node {start}")
            )
        # fake occurrences climb from the label node without gaps
        path = []
        t = start
        while t >= 0 and v in fcd.fake[t]:
            path.append(t)
            t = fcd.parent(t)
        if sorted(path) != fake_nodes:
            violations.append(
                Violation(kind="fake-introduce-path", detail=f"vertex {v} is fake off the upward path")
            )
    return violations
