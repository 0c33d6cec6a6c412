from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from mapkit.models.tree_decomposition import TreeDecomposition

NiceKind = Literal["leaf", "introduce", "forget", "join"]


class NiceLabel(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: NiceKind = Field(description="Node type of the nice decomposition")
    vertex: Optional[int] = Field(None, description="Vertex introduced or forgotten")

    def __str__(self) -> str:
        return self.kind if self.vertex is None else f"{self.kind}({self.vertex})"


class NiceTreeDecomposition(TreeDecomposition):
    """Nice decomposition whose node ids follow a postorder, so the root is the last node"""

    labels: tuple[NiceLabel, ...] = Field(description="Label of every node")

    _forget_node: dict[int, int] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        super().model_post_init(__context)
        self._forget_node = {
            label.vertex: t for t, label in enumerate(self.labels) if label.kind == "forget"
        }

    def forget_node(self, v: int) -> int:
        return self._forget_node[v]
