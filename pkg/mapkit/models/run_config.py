from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mapkit.utils.constants import PROBLEMS

Subcommand = Literal["validate", "decompose", "solve", "gen", "bench"]

_CAPPED_PROBLEMS = ("longest-cycle", "longest-path", "cycle-packing")

_FAMILY_PARAMS = {"star": 1, "grid": 2, "incidence": 2, "planar-bipartite": 2}


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    subcommand: Subcommand
    input_path: Optional[str] = Field(None, description="Witness file or bench directory")
    problem: Optional[str] = None
    k: Optional[int] = Field(None, ge=0)
    seed: Optional[int] = Field(None, description="Explicit seed, wins over the environment")
    strict: bool = False
    exact: bool = Field(False, description="Use the exact decomposition search")
    cap: Optional[int] = Field(None, ge=0, description="Uniform crossing cap override")
    oracle: bool = False
    cert: bool = False
    emit_td: Optional[str] = None
    emit_fcd: Optional[str] = None
    family: Optional[str] = None
    params: tuple[float, ...] = ()
    output: Optional[str] = None
    kmax: Optional[int] = Field(None, ge=1)
    threads: int = Field(1, ge=1)
    profiles: Optional[str] = None

    @model_validator(mode="after")
    def _check_combination(self):
        if self.subcommand in ("validate", "decompose", "solve", "bench") and not self.input_path:
            raise ValueError(f"{self.subcommand} needs an input path")
        if self.subcommand in ("solve", "bench"):
            if self.problem not in PROBLEMS:
                raise ValueError(f"unknown problem {self.problem!r}")
            if self.cap is not None and self.problem not in _CAPPED_PROBLEMS:
                raise ValueError(f"--cap does not apply to {self.problem}")
        if self.subcommand == "bench" and (self.kmax is None or not self.output):
            raise ValueError("bench needs --kmax and -o")
        if self.subcommand == "gen":
            if self.family not in _FAMILY_PARAMS:
                raise ValueError(f"unknown family {self.family!r}")
            if len(self.params) != _FAMILY_PARAMS[self.family]:
                raise ValueError(f"{self.family} takes {_FAMILY_PARAMS[self.family]} parameter(s)")
            sizes = self.params if self.family in ("star", "grid") else self.params[:1]
            if any(not float(value).is_integer() for value in sizes):
                raise ValueError(f"size parameters of {self.family} must be integers")
            if not self.output:
                raise ValueError("gen needs -o")
        return self
