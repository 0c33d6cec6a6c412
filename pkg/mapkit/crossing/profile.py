from typing import Iterable

from mapkit.models.crossing_profile import CrossingProfile
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition


def crossing_profile(edges: Iterable[tuple[int, int]], fcd: FewCliquesDecomposition) -> CrossingProfile:
    edges = list(edges)
    counts = []
    for t in range(fcd.node_count):
        bag, gamma = fcd.bag(t), fcd.gamma_set(t)
        counts.append(
            sum(
                1
                for u, v in edges
                if (u in bag and v not in gamma) or (v in bag and u not in gamma)
            )
        )
    return CrossingProfile(counts=tuple(counts))


def clique_fake_crossing(
    edges: Iterable[tuple[int, int]], s: int, fcd: FewCliquesDecomposition
) -> CrossingProfile:
    """Per node, edges of K_s with one endpoint in Fake(t) of K_s and the other outside gamma'(t)"""
    members = set(fcd.clique_members(s))
    inside = [(u, v) for u, v in edges if u in members and v in members]
    counts = []
    for t in range(fcd.node_count):
        fake = set(fcd.fake[t]) & members
        gamma = fcd.gamma_set(t)
        counts.append(
            sum(
                1
                for u, v in inside
                if (u in fake and v not in gamma) or (v in fake and u not in gamma)
            )
        )
    return CrossingProfile(counts=tuple(counts))
