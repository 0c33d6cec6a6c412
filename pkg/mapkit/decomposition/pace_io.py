from collections import deque
from typing import Optional, Union

from mapkit.models.few_cliques_decomposition import FewCliquesDecomposition
from mapkit.models.nice_tree_decomposition import NiceLabel, NiceTreeDecomposition
from mapkit.models.tree_decomposition import ROOT_PARENT, TreeDecomposition
from mapkit.utils.errors import InvalidDecompositionError

_NICE_NAMES = {"leaf": "Leaf", "introduce": "Introduce", "forget": "Forget", "join": "Join"}
_NICE_KINDS = {name: kind for kind, name in _NICE_NAMES.items()}
_FCD_NAMES = {
    **_NICE_NAMES,
    "fake_introduce": "FakeIntroduce",
    "forget_set": "ForgetSet",
    "redundant": "Redundant",
}


def _ids(values) -> str:
    return " ".join(str(v + 1) for v in values)


def _tree_lines(parent, bags, root: int, vertex_count: int) -> list[str]:
    lines = [f"s td {len(bags)} {max(len(bag) for bag in bags)} {vertex_count}", f"c root {root + 1}"]
    lines.extend(f"b {t + 1} {_ids(bag)}".rstrip() for t, bag in enumerate(bags))
    lines.extend(f"{p + 1} {t + 1}" for t, p in enumerate(parent) if p != ROOT_PARENT)
    return lines


def format_td(td: TreeDecomposition, vertex_count: int) -> str:
    lines = _tree_lines(td.parent, td.bags, td.root, vertex_count)
    if isinstance(td, NiceTreeDecomposition):
        for t, label in enumerate(td.labels):
            suffix = "" if label.vertex is None else f" {label.vertex + 1}"
            lines.append(f"c label {t + 1} {_NICE_NAMES[label.kind]}{suffix}")
    return "\n".join(lines) + "\n"


def format_fcd(fcd: FewCliquesDecomposition) -> str:
    bags = [tuple(sorted(fcd.bag(t))) for t in range(fcd.node_count)]
    lines = _tree_lines(fcd.source.parent, bags, fcd.root, fcd.nation_count)
    for t in range(fcd.node_count):
        lines.append(f"c original {t + 1} {_ids(fcd.original[t])}".rstrip())
        lines.append(f"c fake {t + 1} {_ids(fcd.fake[t])}".rstrip())
        lines.append(f"c cliques {t + 1} {_ids(fcd.cliques[t])}".rstrip())
        label = fcd.labels[t]
        if label.kind == "forget_set":
            suffix = f" {label.vertex + 1} {_ids(label.removed)}".rstrip()
        elif label.vertex is not None:
            suffix = f" {label.vertex + 1}"
        else:
            suffix = ""
        lines.append(f"c label {t + 1} {_FCD_NAMES[label.kind]}{suffix}")
    return "\n".join(lines) + "\n"


def parse_td(text: str) -> Union[TreeDecomposition, NiceTreeDecomposition]:
    """Reads format_td output back; labelled files give a nice decomposition"""
    header = None
    root = 0
    bags: dict[int, tuple[int, ...]] = {}
    labels: dict[int, NiceLabel] = {}
    adjacent: dict[int, list[int]] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        fields = raw_line.split()
        if not fields:
            continue
        try:
            if fields[0] == "s":
                header = (int(fields[2]), int(fields[3]), int(fields[4]))
            elif fields[0] == "c":
                if fields[1:2] == ["root"]:
                    root = int(fields[2]) - 1
                elif fields[1:2] == ["label"]:
                    vertex: Optional[int] = int(fields[4]) - 1 if len(fields) > 4 else None
                    labels[int(fields[2]) - 1] = NiceLabel(kind=_NICE_KINDS[fields[3]], vertex=vertex)
            elif fields[0] == "b":
                bags[int(fields[1]) - 1] = tuple(sorted(int(v) - 1 for v in fields[2:]))
            else:
                a, b = int(fields[0]) - 1, int(fields[1]) - 1
                adjacent.setdefault(a, []).append(b)
                adjacent.setdefault(b, []).append(a)
        except (IndexError, KeyError, ValueError) as e:
            raise InvalidDecompositionError(f"line {line_number}: cannot read {raw_line!r}") from e

    if header is None or len(bags) != header[0] or set(bags) != set(range(header[0])):
        raise InvalidDecompositionError("bag lines do not match the header")
    node_count = header[0]
    parent = [ROOT_PARENT] * node_count
    seen = {root}
    queue = deque([root])
    while queue:
        node = queue.popleft()
        for other in adjacent.get(node, ()):
            if other not in seen:
                seen.add(other)
                parent[other] = node
                queue.append(other)
    if len(seen) != node_count:
        raise InvalidDecompositionError("tree edges do not connect every bag")
    fields = dict(
        node_count=node_count,
        parent=tuple(parent),
        bags=tuple(bags[t] for t in range(node_count)),
        root=root,
    )
    if labels and len(labels) == node_count:
        return NiceTreeDecomposition(**fields, labels=tuple(labels[t] for t in range(node_count)))
    return TreeDecomposition(**fields)
