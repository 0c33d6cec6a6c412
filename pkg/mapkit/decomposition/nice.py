from mapkit.decomposition.validation import connectivity_violations, validate_td
from mapkit.models.graph import Graph
from mapkit.models.nice_tree_decomposition import NiceLabel, NiceTreeDecomposition
from mapkit.models.tree_decomposition import ROOT_PARENT, TreeDecomposition
from mapkit.models.validation_report import ValidationReport
from mapkit.utils.errors import InvalidDecompositionError


class _Builder:
    def __init__(self):
        self.labels: list[NiceLabel] = []
        self.bags: list[frozenset[int]] = []
        self.children: list[tuple[int, ...]] = []

    def add(self, kind: str, bag: frozenset[int], children: tuple[int, ...], vertex=None) -> int:
        self.labels.append(NiceLabel(kind=kind, vertex=vertex))
        self.bags.append(bag)
        self.children.append(children)
        return len(self.labels) - 1

    def morph(self, top: int, target: frozenset[int]) -> int:
        """Forget then introduce, one vertex per node, until the bag equals target"""
        bag = self.bags[top]
        for v in sorted(bag - target):
            bag = bag - {v}
            top = self.add("forget", bag, (top,), v)
        for v in sorted(target - bag):
            bag = bag | {v}
            top = self.add("introduce", bag, (top,), v)
        return top


def make_nice(td: TreeDecomposition, graph: Graph = None) -> NiceTreeDecomposition:
    """Same-width nice decomposition with an empty root; node ids follow a postorder"""
    if graph is not None:
        report = validate_td(td, graph)
    else:
        report = ValidationReport(
            violations=connectivity_violations(td.parent, [td.bag_set(t) for t in range(td.node_count)])
        )
    if not report.is_valid:
        raise InvalidDecompositionError("; ".join(report.lines()))

    builder = _Builder()
    top_of: dict[int, int] = {}
    for node in td.postorder():
        target = td.bag_set(node)
        chains = [builder.morph(top_of.pop(child), target) for child in td.children(node)]
        if not chains:
            top = builder.morph(builder.add("leaf", frozenset(), ()), target)
        else:
            top = chains[0]
            for chain in chains[1:]:
                top = builder.add("join", target, (top, chain))
        top_of[node] = top
    root = builder.morph(top_of[td.root], frozenset())
    return _renumber(builder, root)


def _renumber(builder: _Builder, root: int) -> NiceTreeDecomposition:
    order: list[int] = []
    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        stack.append((node, True))
        for child in reversed(builder.children[node]):
            stack.append((child, False))
    new_id = {old: new for new, old in enumerate(order)}
    parent = [ROOT_PARENT] * len(order)
    for old in order:
        for child in builder.children[old]:
            parent[new_id[child]] = new_id[old]
    return NiceTreeDecomposition(
        node_count=len(order),
        parent=tuple(parent),
        bags=tuple(tuple(sorted(builder.bags[old])) for old in order),
        root=new_id[root],
        labels=tuple(builder.labels[old] for old in order),
    )
