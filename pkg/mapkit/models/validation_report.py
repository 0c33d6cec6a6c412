from pydantic import BaseModel, ConfigDict, Field


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: str = Field(description="Short name of the violated invariant")
    detail: str = Field(description="Human readable description naming the witnesses")


class ValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    violations: list[Violation] = Field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[str]:
        return {violation.kind for violation in self.violations}

    def lines(self) -> list[str]:
        return [f"{violation.kind}: {violation.detail}" for violation in self.violations]
