from typing import Sequence

from mapkit.crossing.rerouting import clique_fake_order
from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.utils.errors import PreconditionError

Triangle = tuple[int, tuple[int, int, int]]


def normalize_triangle_packing(
    triangles: Sequence[Triangle], fcd: FewCliquesDecomposition
) -> list[Triangle]:
    """
    Regroups the triangles of every hosting clique into consecutive blocks of three
    along the clique's fake order. Input and output entries are (host special, vertices).
    """
    used: set[int] = set()
    by_host: dict[int, set[int]] = {}
    for host, vertices in triangles:
        members = set(fcd.clique_members(host))
        if len(set(vertices)) != 3 or not set(vertices) <= members:
            raise PreconditionError(f"triangle {vertices} does not lie inside clique {host}")
        if used & set(vertices):
            raise PreconditionError(f"triangle {vertices} overlaps an earlier triangle")
        used |= set(vertices)
        by_host.setdefault(host, set()).update(vertices)

    regrouped: list[Triangle] = []
    for host in sorted(by_host):
        vertices = by_host[host]
        if len(vertices) % 3:
            raise PreconditionError(f"clique {host} hosts {len(vertices)} vertices")
        order = [v for v in clique_fake_order(fcd, host) if v in vertices]
        for i in range(0, len(order), 3):
            regrouped.append((host, tuple(order[i : i + 3])))
    return regrouped
