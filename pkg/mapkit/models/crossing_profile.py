from pydantic import BaseModel, ConfigDict, Field


class CrossingProfile(BaseModel):
    model_config = ConfigDict(frozen=True)

    counts: tuple[int, ...] = Field(
        description="Per node, edges with one endpoint in bag(t) and the other outside gamma'(t)"
    )

    @property
    def maximum(self) -> int:
        return max(self.counts, default=0)

    def to_csv_rows(self) -> list[tuple[int, int]]:
        return list(enumerate(self.counts))
