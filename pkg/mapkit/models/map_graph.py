from pydantic import BaseModel, ConfigDict, Field

from mapkit.models.graph import Graph


class MapGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph: Graph = Field(description="Half-square G on the nations")
    special_cliques: tuple[tuple[int, ...], ...] = Field(
        description="N_B(s) for every special s, sorted"
    )
    witness_name: str = Field("", description="Identifier of the source witness")

    @property
    def n(self) -> int:
        return self.graph.n

    def largest_clique(self) -> tuple[int, ...]:
        return max(self.special_cliques, key=len, default=())
