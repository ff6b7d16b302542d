"""
HyperBall - Report and Benchmark Schemas

Licensed under the MIT License.
"""

from typing import List, Literal, Optional

from pydantic import BaseModel, Field

Status = Literal["yes", "no"]


class SolveReport(BaseModel):
    status: Status
    center: Optional[List[int]] = Field(None, description="1-indexed support of the center")
    radius: Optional[int] = None
    conciseness: Optional[int] = None
    algo: str
    time_ms: float = Field(..., ge=0)
    width: Optional[int] = Field(None, description="Width of the tree decomposition (treewidth only)")
    nodes_expanded: Optional[int] = None
    scp: Optional[int] = Field(None, ge=0)
    real_center: Optional[List[str]] = Field(None, description="Exact rational center coordinates")
    radius_squared: Optional[str] = None


class BenchEntry(BaseModel):
    instance: str = Field(..., min_length=1, description="Instance file, relative to the manifest")
    algos: List[str] = Field(..., min_length=1)
    timeout: Optional[float] = Field(None, gt=0, description="Seconds per solver call")
    scp: Optional[int] = Field(None, ge=0)


class BenchManifest(BaseModel):
    timeout: Optional[float] = Field(None, gt=0, description="Default seconds per solver call")
    entries: List[BenchEntry] = Field(default_factory=list)


class BenchRow(BaseModel):
    instance: str
    d: int
    nR: int
    nB: int
    icon: int
    algo: str
    status: Literal["yes", "no", "timeout", "refused", "error"]
    conciseness: Optional[int] = None
    radius: Optional[int] = None
    time_ms: Optional[float] = None
    td_width: Optional[int] = None
    nodes_expanded: Optional[int] = None
