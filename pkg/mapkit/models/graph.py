from typing import Iterable

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator


class Graph(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0, description="Number of vertices, labelled 0..n-1")
    adjacency: tuple[tuple[int, ...], ...] = Field(
        description="Sorted neighbour tuple for every vertex"
    )

    _neighbour_sets: tuple[frozenset[int], ...] = PrivateAttr(default=())

    @model_validator(mode="after")
    def _check_simple_and_symmetric(self) -> "Graph":
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        rows = [frozenset(row) for row in self.adjacency]
        for v, row in enumerate(self.adjacency):
            if list(row) != sorted(rows[v]):
                raise ValueError(f"neighbours of {v} must be sorted and distinct")
            for u in row:
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if v not in rows[u]:
                    raise ValueError(f"edge {v}-{u} is not symmetric")
        return self

    def model_post_init(self, __context) -> None:
        self._neighbour_sets = tuple(frozenset(row) for row in self.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            rows[u].add(v)
            rows[v].add(u)
        return cls(n=n, adjacency=tuple(tuple(sorted(row)) for row in rows))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        return cls.from_edges(graph.number_of_nodes(), graph.edges())

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbour_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, row in enumerate(self.adjacency) for v in row if u < v]

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph
