from typing import Sequence

from mapkit.models.path_system import PathSystem
from mapkit.utils.errors import PreconditionError


def complete_paths_to_cycle(order: Sequence[int], paths: PathSystem) -> set[tuple[int, int]]:
    """
    Adds edges between the listed endpoints so that the paths close into one cycle.
    Every added edge joins the first remaining endpoint to the second or third one,
    which keeps at most two added edges across any prefix of `order`.
    """
    order = list(order)
    if len(order) < 3:
        raise PreconditionError("at least three endpoints are needed")
    if len(set(order)) != len(order) or sorted(order) != paths.endpoint_list:
        raise PreconditionError("order must list every endpoint of the path system once")
    listed = set(order)
    if any(u in listed and v in listed for u, v in paths.edges):
        raise PreconditionError("a path edge joins two listed endpoints")

    degree = {v: paths.degree(v) for v in order}
    other_end = {v: paths.other_end(v) for v in order}
    added: set[tuple[int, int]] = set()

    def join(u: int, v: int) -> None:
        added.add((min(u, v), max(u, v)))
        far_u, far_v = other_end[u], other_end[v]
        degree[u] += 1
        degree[v] += 1
        other_end[far_u] = far_v
        other_end[far_v] = far_u

    remaining = order
    while len(remaining) > 3:
        u1, u2, u3 = remaining[:3]
        if degree[u1] == 0 and degree[u2] == 1:
            join(u1, u2)
        elif degree[u1] == 0:
            join(u1, u2)
            join(u1, u3)
        else:
            join(u1, u2 if other_end[u1] != u2 else u3)
        remaining = [v for v in remaining if degree[v] < 2]

    if len(remaining) == 3:
        isolated = [v for v in remaining if degree[v] == 0]
        if len(isolated) == 3:
            a, b, c = remaining
            join(a, b)
            join(b, c)
            join(c, a)
        else:
            z = isolated[0]
            x, y = [v for v in remaining if v != z]
            join(x, z)
            join(y, z)
    elif len(remaining) == 2:
        join(*remaining)
    return added
