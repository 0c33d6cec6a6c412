from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class SolveStats(BaseModel):
    model_config = ConfigDict(frozen=True)

    width_d: Optional[int] = Field(None, description="Width of the witness decomposition")
    maxbag_dprime: Optional[int] = Field(None, description="Largest bag of the derived decomposition")
    cap: Optional[int] = Field(None, description="Largest per-node crossing cap, None when uncapped")
    node_states: tuple[int, ...] = Field((), description="Stored DP states per node")
    millis: float = Field(0.0, description="Wall time of the solve")
    early_exit: Optional[str] = Field(None, description="Name of the early exit that answered")

    @property
    def max_states(self) -> int:
        return max(self.node_states, default=0)


class SolveResult(BaseModel):
    """
    Outcome of a solver or oracle.
    `value` is the optimum (or the certificate value when `exact` is false) and is None
    when no solution within k exists. `answer` is None when no k was asked.
    """

    model_config = ConfigDict(frozen=True)

    problem: str = Field(description="Problem name")
    k: Optional[int] = Field(None, description="Decision parameter")
    value: Optional[int] = Field(None, description="Solution value")
    exact: bool = Field(True, description="Whether value is the true optimum")
    answer: Optional[bool] = Field(None, description="Decision answer for k")
    certificate: tuple[tuple[int, ...], ...] = Field(
        (), description="Vertex set, vertex sequence, or one row per cycle"
    )
    stats: SolveStats = Field(default_factory=SolveStats)

    @property
    def answer_text(self) -> str:
        if self.answer is None:
            return f"OPT={self.value}"
        return "YES" if self.answer else "NO"
