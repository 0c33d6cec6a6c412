from collections import Counter
from typing import Hashable, Sequence

from mapkit.utils.errors import PreconditionError


def system_of_distinct_representatives(sets: Sequence[set]) -> list[Hashable]:
    """
    One distinct element per set when all sets but one are pairs and no element
    occurs in more than two sets. A singleton is always served first, and every
    choice turns at most one other set into a singleton.
    """
    remaining = [set(members) for members in sets]
    if any(not members for members in remaining):
        raise PreconditionError("every set must be nonempty")
    if sum(len(members) != 2 for members in remaining) > 1:
        raise PreconditionError("all but at most one set must have exactly two elements")
    occurrences = Counter(element for members in remaining for element in members)
    if any(count > 2 for count in occurrences.values()):
        raise PreconditionError("an element occurs in more than two sets")

    chosen: list = [None] * len(remaining)
    open_sets = set(range(len(remaining)))
    while open_sets:
        singles = sorted(i for i in open_sets if len(remaining[i]) == 1)
        i = singles[0] if singles else min(open_sets)
        if not remaining[i]:
            raise PreconditionError(f"set {i} ran out of candidates")
        element = min(remaining[i])
        chosen[i] = element
        open_sets.discard(i)
        for j in open_sets:
            remaining[j].discard(element)
    return chosen
