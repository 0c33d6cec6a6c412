from typing import Iterable

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator


class PathSystem(BaseModel):
    """Vertex-disjoint paths, single vertices allowed"""

    model_config = ConfigDict(frozen=True)

    vertices: frozenset[int] = Field(description="Vertices covered by the paths")
    edges: frozenset[tuple[int, int]] = Field(description="Path edges as (low, high) pairs")

    _degree: dict[int, int] = PrivateAttr(default_factory=dict)
    _other_end: dict[int, int] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_paths(self):
        for u, v in self.edges:
            if u >= v or u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) must be ordered and inside the vertex set")
        graph = self._graph()
        if any(degree > 2 for _, degree in graph.degree):
            raise ValueError("a path system has maximum degree 2")
        if graph.number_of_nodes() and not nx.is_forest(graph):
            raise ValueError("a path system contains no cycles")
        return self

    def model_post_init(self, __context) -> None:
        graph = self._graph()
        self._degree = dict(graph.degree)
        other_end: dict[int, int] = {}
        for component in nx.connected_components(graph):
            ends = sorted(v for v in component if graph.degree[v] <= 1)
            if not ends:
                continue
            other_end[ends[0]] = ends[-1]
            other_end[ends[-1]] = ends[0]
        self._other_end = other_end

    def _graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]]) -> "PathSystem":
        return cls(
            vertices=frozenset(vertices),
            edges=frozenset((min(u, v), max(u, v)) for u, v in edges),
        )

    def degree(self, v: int) -> int:
        return self._degree[v]

    @property
    def endpoint_list(self) -> list[int]:
        return sorted(v for v in self.vertices if self._degree[v] <= 1)

    def other_end(self, v: int) -> int:
        """Far end of the path that ends at v; v itself for a single vertex"""
        return self._other_end[v]
