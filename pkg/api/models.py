from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator


# Graph models
class GraphPayload(BaseModel):
    graph6: Optional[str] = Field(None, description="Graph in graph6 format")
    n: Optional[int] = Field(None, description="Vertex count", ge=0)
    edges: Optional[List[List[int]]] = Field(None, description="Edge list [[u, v], ...]")

    @model_validator(mode="after")
    def one_source(self) -> "GraphPayload":
        if (self.graph6 is None) == (self.n is None):
            raise ValueError("Give either graph6 or n with edges")
        return self


class GraphResponse(BaseModel):
    n: int
    edges: List[List[int]]
    graph6: str
    blocks: Optional[List[str]] = Field(None, description="Block tags, left to right")


class BlockResponse(BaseModel):
    tag: str
    kind: str
    labels: List[str]
    n: int
    edges: List[List[int]]
    left_port: List[int]
    right_port: List[int]
    cells: List[List[int]]
    symmetric: bool


# Spectral models
class SpectrumRequest(GraphPayload):
    pass


class SpectrumResponse(BaseModel):
    n: int
    mu: float
    eigenvalues: List[float]
    fiedler: List[float]
    gap23: Optional[float]
    residual: float


class StructureRequest(BaseModel):
    family: str = Field(..., description='Family spec, e.g. "gn:16" or "D0,M0,~D1"')
    tolerance: Optional[float] = Field(None, gt=0, description="Allowed in-cell spread")


class StructureResponse(BaseModel):
    blocks: List[str]
    mu: float
    gap23: Optional[float]
    status: Literal["pass", "fail", "indeterminate"]
    report: Dict[str, Any]


# Verification models
class VerificationResponse(BaseModel):
    all_passed: bool
    report: Dict[str, Any]
