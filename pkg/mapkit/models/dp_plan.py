from typing import Optional

from pydantic import BaseModel, ConfigDict, Field


class PlanNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    children: tuple[int, ...]
    bag: tuple[int, ...] = Field(description="Sorted bag of the derived decomposition")
    originals: frozenset[int]
    introduced: tuple[int, ...] = Field(description="Bag vertices absent from every child bag")
    forgotten: tuple[int, ...] = Field(description="Child bag vertices absent from this bag")
    counted: tuple[int, ...] = Field(
        description="Vertices that stop being original here; deletions are paid at this node"
    )
    cliques: tuple[tuple[int, ...], ...] = Field(
        description="Bag part of every special clique in Cliques(t) with two or more members"
    )
    edges: tuple[tuple[int, int], ...] = Field(description="Edges decided at this node")
    forced_edges: tuple[tuple[int, int], ...] = Field(
        (), description="Virtual edges every solution must take here"
    )
    cap: Optional[int] = Field(None, description="Crossing cap, None when uncapped")


class DpPlan(BaseModel):
    """Per-node work list shared by every solver; node ids are a postorder"""

    model_config = ConfigDict(frozen=True)

    nodes: tuple[PlanNode, ...]
    root: int
    width_d: int
    maxbag_dprime: int

    @property
    def max_cap(self) -> Optional[int]:
        caps = [node.cap for node in self.nodes if node.cap is not None]
        return max(caps) if caps else None
