from typing import Literal, Optional

from mapkit.few_cliques.crossing_edges import decision_points
from mapkit.models.dp_plan import DpPlan, PlanNode
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.utils.constants import (
    CYCLE_CAP_PER_CLIQUE,
    CYCLE_CAP_PER_ORIGINAL,
    PACKING_CAP_PER_BAG_SLOT,
)

CapRule = Literal["none", "cycle", "packing"]


def build_plan(
    fcd: FewCliquesDecomposition,
    cap_rule: CapRule = "none",
    cap_override: Optional[int] = None,
    capped: bool = True,
    path_ends: Optional[tuple[int, int]] = None,
) -> DpPlan:
    """
    With path_ends=(u, v) both ends join every bag as originals, the real edge uv
    is dropped and a virtual uv edge is forced at the root.
    """
    extra = frozenset(path_ends or ())
    width_d = fcd.source.width
    bags = [fcd.bag(t) | extra for t in range(fcd.node_count)]
    depth = [fcd.depth(t) for t in range(fcd.node_count)]
    edges = fcd.map_graph.graph.edges()
    if path_ends is not None:
        edges = [edge for edge in edges if set(edge) != extra]
    deciding = decision_points(edges, bags, depth)
    edges_at: dict[int, list[tuple[int, int]]] = {}
    for edge in edges:
        edges_at.setdefault(deciding[edge], []).append(edge)

    nodes = []
    for t in range(fcd.node_count):
        bag = bags[t]
        originals = fcd.original_set(t) | extra
        children = fcd.children(t)
        below = frozenset().union(*(bags[c] for c in children))
        originals_below = frozenset().union(*(fcd.original_set(c) | extra for c in children))
        clique_parts = tuple(
            part
            for part in (
                tuple(v for v in fcd.clique_members(s) if v in bag) for s in fcd.cliques[t]
            )
            if len(part) >= 2
        )
        nodes.append(
            PlanNode(
                children=children,
                bag=tuple(sorted(bag)),
                originals=originals,
                introduced=tuple(sorted(bag - below)),
                forgotten=tuple(sorted(below - bag)),
                counted=tuple(sorted(originals_below - originals)),
                cliques=clique_parts,
                edges=tuple(edges_at.get(t, ())),
                forced_edges=(tuple(sorted(extra)),) if path_ends is not None and t == fcd.root else (),
                cap=_cap(cap_rule, cap_override, capped, len(originals), len(fcd.cliques[t]), width_d),
            )
        )
    return DpPlan(
        nodes=tuple(nodes),
        root=fcd.root,
        width_d=width_d,
        maxbag_dprime=max(len(bag) for bag in bags),
    )


def _cap(rule: CapRule, override: Optional[int], capped: bool, originals: int, cliques: int, width_d: int):
    if rule == "none" or not capped:
        return None
    if override is not None:
        return override
    if rule == "cycle":
        return CYCLE_CAP_PER_ORIGINAL * originals + CYCLE_CAP_PER_CLIQUE * cliques
    return PACKING_CAP_PER_BAG_SLOT * (width_d + 1)
