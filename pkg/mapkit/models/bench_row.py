from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class BenchRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    instance: str = Field(description="Witness file name")
    problem: str
    k: int
    width_D: int = Field(description="Width of the witness decomposition")
    maxbag_Dprime: int = Field(description="Largest bag of the derived decomposition")
    cap: Optional[int] = Field(None, description="Largest crossing cap, empty when not applicable")
    max_states: int
    answer: str = Field(description="YES or NO")
    millis: int
    node_states: tuple[int, ...] = Field((), exclude=True)
    node_crossing: Optional[tuple[int, ...]] = Field(None, exclude=True)
