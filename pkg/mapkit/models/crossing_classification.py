from pydantic import BaseModel, ConfigDict, Field


class CrossingClassification(BaseModel):
    """Boundary edges of a node as (inside, outside) pairs"""

    model_config = ConfigDict(frozen=True)

    node: int = Field(description="Node the boundary belongs to")
    incident_to_original: tuple[tuple[int, int], ...] = Field(
        description="Edges whose inner endpoint is in Original(t)"
    )
    inside_clique: tuple[tuple[int, int], ...] = Field(
        description="Remaining edges, each inside a special clique of Cliques(t)"
    )

    @property
    def size(self) -> int:
        return len(self.incident_to_original) + len(self.inside_clique)
