from pydantic import BaseModel, ConfigDict, Field

from mapkit.models.graph import Graph


class BipartiteWitness(BaseModel):
    """Planar bipartite graph B; vertices 0..W-1 are nations, W..W+U-1 specials"""

    model_config = ConfigDict(frozen=True)

    graph: Graph = Field(description="The bipartite graph B")
    nation_count: int = Field(ge=0, description="W, the number of nations")
    special_count: int = Field(ge=0, description="U, the number of special vertices")
    name: str = Field("", description="Identifier of the source witness")

    @property
    def vertex_count(self) -> int:
        return self.nation_count + self.special_count

    def is_nation(self, v: int) -> bool:
        return v < self.nation_count

    def special_vertex(self, s: int) -> int:
        """Vertex of B carrying special index s"""
        return self.nation_count + s

    def nations_of(self, s: int) -> tuple[int, ...]:
        return self.graph.adjacency[self.special_vertex(s)]
