from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

ROOT_PARENT = -1


class TreeDecomposition(BaseModel):
    model_config = ConfigDict(frozen=True)

    node_count: int = Field(ge=1, description="Number of tree nodes")
    parent: tuple[int, ...] = Field(description="Parent of every node, -1 at the root")
    bags: tuple[tuple[int, ...], ...] = Field(description="Sorted bag of every node")
    root: int = Field(ge=0, description="Root node id")

    _children: tuple[tuple[int, ...], ...] = PrivateAttr(default=())
    _bag_sets: tuple[frozenset[int], ...] = PrivateAttr(default=())

    @model_validator(mode="after")
    def _check_shape(self):
        if len(self.parent) != self.node_count or len(self.bags) != self.node_count:
            raise ValueError("parent and bags must have one entry per node")
        if not 0 <= self.root < self.node_count or self.parent[self.root] != ROOT_PARENT:
            raise ValueError(f"root {self.root} must carry the root sentinel")
        for t, p in enumerate(self.parent):
            if t != self.root and not 0 <= p < self.node_count:
                raise ValueError(f"node {t} has invalid parent {p}")
        # every node must reach the root
        reached = {self.root}
        for t in range(self.node_count):
            path = []
            node = t
            while node not in reached:
                if node in path:
                    raise ValueError(f"parent pointers form a cycle through {node}")
                path.append(node)
                node = self.parent[node]
            reached.update(path)
        return self

    def model_post_init(self, __context) -> None:
        children: list[list[int]] = [[] for _ in range(self.node_count)]
        for t, p in enumerate(self.parent):
            if p != ROOT_PARENT:
                children[p].append(t)
        self._children = tuple(tuple(row) for row in children)
        self._bag_sets = tuple(frozenset(bag) for bag in self.bags)

    @property
    def width(self) -> int:
        return max(len(bag) for bag in self.bags) - 1

    def children(self, t: int) -> tuple[int, ...]:
        return self._children[t]

    def bag_set(self, t: int) -> frozenset[int]:
        return self._bag_sets[t]

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(p, t) for t, p in enumerate(self.parent) if p != ROOT_PARENT]

    def postorder(self) -> list[int]:
        order: list[int] = []
        stack = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            stack.append((node, True))
            for child in reversed(self._children[node]):
                stack.append((child, False))
        return order
