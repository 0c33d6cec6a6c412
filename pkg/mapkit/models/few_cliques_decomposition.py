from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from mapkit.models.map_graph import MapGraph
from mapkit.models.nice_tree_decomposition import NiceTreeDecomposition

FcdKind = Literal[
    "leaf", "introduce", "fake_introduce", "forget", "forget_set", "join", "redundant"
]


class FcdLabel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: FcdKind = Field(description="Node type of the few-cliques decomposition")
    vertex: Optional[int] = Field(
        None, description="Nation for (fake) introduce/forget, special id for forget_set/redundant"
    )
    removed: tuple[int, ...] = Field(
        (), description="Nations leaving the bag at a forget_set node"
    )

    def __str__(self) -> str:
        if self.kind == "forget_set":
            return f"forget_set({','.join(map(str, self.removed))})"
        return self.kind if self.vertex is None else f"{self.kind}({self.vertex})"


class FewCliquesDecomposition(BaseModel):
    """
    Decomposition of the map graph derived from a nice decomposition of its witness.
    Node ids, parents and the root are those of `source`.
    """

    model_config = ConfigDict(frozen=True)

    source: NiceTreeDecomposition = Field(description="Nice decomposition of the witness")
    map_graph: MapGraph = Field(description="Map graph the decomposition covers")
    original: tuple[tuple[int, ...], ...] = Field(description="Original(t) per node")
    fake: tuple[tuple[int, ...], ...] = Field(description="Fake(t) per node")
    cliques: tuple[tuple[int, ...], ...] = Field(description="Cliques(t) per node")
    gamma: tuple[tuple[int, ...], ...] = Field(
        description="Nations in the subtree of every node, the vertex set of gamma'(t)"
    )
    labels: tuple[FcdLabel, ...] = Field(description="Label of every node")

    _bag_sets: tuple[frozenset[int], ...] = PrivateAttr(default=())
    _original_sets: tuple[frozenset[int], ...] = PrivateAttr(default=())
    _gamma_sets: tuple[frozenset[int], ...] = PrivateAttr(default=())
    _depth: tuple[int, ...] = PrivateAttr(default=())
    _fake_introduce_node: dict[int, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._original_sets = tuple(frozenset(row) for row in self.original)
        self._bag_sets = tuple(
            frozenset(original) | frozenset(fake)
            for original, fake in zip(self.original, self.fake)
        )
        self._gamma_sets = tuple(frozenset(row) for row in self.gamma)
        depth = [0] * self.node_count
        # parents carry larger postorder ids, so a reverse sweep sees them first
        for t in reversed(range(self.node_count)):
            p = self.source.parent[t]
            depth[t] = 0 if p < 0 else depth[p] + 1
        self._depth = tuple(depth)
        self._fake_introduce_node = {
            label.vertex: t
            for t, label in enumerate(self.labels)
            if label.kind == "fake_introduce"
        }

    @property
    def node_count(self) -> int:
        return self.source.node_count

    @property
    def root(self) -> int:
        return self.source.root

    @property
    def nation_count(self) -> int:
        return self.map_graph.n

    def parent(self, t: int) -> int:
        return self.source.parent[t]

    def children(self, t: int) -> tuple[int, ...]:
        return self.source.children(t)

    def depth(self, t: int) -> int:
        return self._depth[t]

    def bag(self, t: int) -> frozenset[int]:
        return self._bag_sets[t]

    def original_set(self, t: int) -> frozenset[int]:
        return self._original_sets[t]

    def gamma_set(self, t: int) -> frozenset[int]:
        return self._gamma_sets[t]

    def fake_introduce_node(self, v: int) -> Optional[int]:
        return self._fake_introduce_node.get(v)

    def clique_members(self, s: int) -> tuple[int, ...]:
        return self.map_graph.special_cliques[s]

    def special_in_source_bag(self, s: int, t: int) -> bool:
        return self.nation_count + s in self.source.bag_set(t)

    @property
    def max_bag(self) -> int:
        return max(len(bag) for bag in self._bag_sets)

    @property
    def width(self) -> int:
        return self.max_bag - 1
