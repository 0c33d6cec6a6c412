from mapkit.decomposition.validation import validate_td
from mapkit.graph_core.half_square import witness_graph
from mapkit.models.few_cliques_decomposition import FcdLabel, FewCliquesDecomposition
from mapkit.models.map_graph import MapGraph
from mapkit.models.nice_tree_decomposition import NiceTreeDecomposition
from mapkit.utils.errors import InvalidDecompositionError


def derive_fcd(nice: NiceTreeDecomposition, map_graph: MapGraph) -> FewCliquesDecomposition:
    """
    Replaces every special s of a bag by N_B(s) restricted to the nations below the node.
    One bottom-up pass; node ids are a postorder so children are always done first.
    """
    report = validate_td(nice, witness_graph(map_graph))
    if not report.is_valid:
        raise InvalidDecompositionError(
            "source is not a nice decomposition of the witness: " + "; ".join(report.lines())
        )

    n = map_graph.n
    cliques_of_special = [frozenset(clique) for clique in map_graph.special_cliques]
    gamma: list[frozenset[int]] = []
    original: list[tuple[int, ...]] = []
    fake: list[tuple[int, ...]] = []
    cliques: list[tuple[int, ...]] = []
    bags: list[frozenset[int]] = []
    labels: list[FcdLabel] = []

    for t in range(nice.node_count):
        bag = nice.bag_set(t)
        nations_here = frozenset(x for x in bag if x < n)
        below = frozenset().union(*(gamma[c] for c in nice.children(t)))
        gamma_t = below | nations_here
        specials_here = tuple(sorted(x - n for x in bag if x >= n))
        fake_t = frozenset().union(
            *(cliques_of_special[s] & gamma_t for s in specials_here)
        ) - nations_here

        gamma.append(gamma_t)
        original.append(tuple(sorted(nations_here)))
        fake.append(tuple(sorted(fake_t)))
        cliques.append(specials_here)
        bags.append(nations_here | fake_t)
        labels.append(_label(nice, t, n, fake_t, bags))

    return FewCliquesDecomposition(
        source=nice,
        map_graph=map_graph,
        original=tuple(original),
        fake=tuple(fake),
        cliques=tuple(cliques),
        gamma=tuple(tuple(sorted(row)) for row in gamma),
        labels=tuple(labels),
    )


def _label(nice: NiceTreeDecomposition, t: int, n: int, fake_t, bags) -> FcdLabel:
    label = nice.labels[t]
    x = label.vertex
    if label.kind in ("leaf", "join"):
        return FcdLabel(kind=label.kind)
    if label.kind == "introduce":
        if x < n:
            return FcdLabel(kind="introduce", vertex=x)
        return FcdLabel(kind="redundant", vertex=x - n)
    if x < n:
        return FcdLabel(kind="fake_introduce" if x in fake_t else "forget", vertex=x)
    child = nice.children(t)[0]
    return FcdLabel(kind="forget_set", vertex=x - n, removed=tuple(sorted(bags[child] - bags[t])))
