from datetime import datetime
from enum import Enum
from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, model_validator

from .config.settings import settings

GirthJson = Union[int, Literal["inf"]]


# Decomposition file schema; field order is the on-disk order
class Decomposition(BaseModel):
    n: int = Field(ge=0)
    girth_claim: int = Field(default=4, ge=3)
    optimal: bool = True
    parts: List[List[Tuple[int, int]]]

    @property
    def parts_count(self) -> int:
        return len(self.parts)

    def part_sizes(self) -> List[int]:
        return [len(part) for part in self.parts]


# Verification findings
class MissingEdge(BaseModel):
    kind: Literal["MissingEdge"] = "MissingEdge"
    u: int
    v: int

    def sort_key(self) -> tuple:
        return (self.kind, self.u, self.v)


class DuplicateEdge(BaseModel):
    kind: Literal["DuplicateEdge"] = "DuplicateEdge"
    u: int
    v: int
    part_a: int
    part_b: int

    def sort_key(self) -> tuple:
        return (self.kind, self.u, self.v, self.part_a, self.part_b)


class ForeignEdge(BaseModel):
    kind: Literal["ForeignEdge"] = "ForeignEdge"
    u: int
    v: int
    part: int

    def sort_key(self) -> tuple:
        return (self.kind, self.u, self.v, self.part)


class NonPlanar(BaseModel):
    kind: Literal["NonPlanar"] = "NonPlanar"
    part: int
    witness: Optional[List[Tuple[int, int]]] = None

    def sort_key(self) -> tuple:
        return (self.kind, self.part)


class GirthViolation(BaseModel):
    kind: Literal["GirthViolation"] = "GirthViolation"
    part: int
    cycle: List[int]

    def sort_key(self) -> tuple:
        return (self.kind, self.part, tuple(self.cycle))


Violation = Annotated[
    Union[MissingEdge, DuplicateEdge, ForeignEdge, NonPlanar, GirthViolation],
    Field(discriminator="kind"),
]


class PartResult(BaseModel):
    part: int
    size: int
    planar: bool
    girth: GirthJson


class VerificationReport(BaseModel):
    ok: bool
    n: int
    girth_claim: int
    part_results: List[PartResult]
    violations: List[Violation]
    violation_count: int
    truncated: bool = False

    @model_validator(mode="after")
    def check_ok_matches_violations(self):
        if self.ok != (self.violation_count == 0):
            raise ValueError("ok must be true exactly when there are no violations")
        return self


class UpperBoundClaim(BaseModel):
    n: int
    parts_count: int
    girth: int = 4

    @property
    def statement(self) -> str:
        return f"theta({self.girth}, K_{self.n}) <= {self.parts_count}"


class CertificationRejected(BaseModel):
    n: int
    report: VerificationReport


# Search
class SearchStatus(str, Enum):
    FOUND = "Found"
    EXHAUSTED = "ExhaustedNoSolution"
    BUDGET_EXCEEDED = "BudgetExceeded"


class SearchConfig(BaseModel):
    n: int = Field(ge=1)
    t: int = Field(ge=1)
    g: int = Field(default=4, ge=3)
    node_budget: int = Field(default_factory=lambda: settings.search_node_budget, gt=0)
    time_budget: float = Field(default_factory=lambda: settings.search_time_budget, gt=0)
    seed: int = Field(default_factory=lambda: settings.search_seed, ge=0)
    symmetry_breaking: bool = True


class SearchStats(BaseModel):
    nodes: int = 0
    max_depth: int = 0
    prunes: Dict[str, int] = Field(
        default_factory=lambda: {"size": 0, "girth": 0, "planarity": 0, "capacity": 0}
    )
    workers: int = 1


class SearchOutcome(BaseModel):
    status: SearchStatus
    config: SearchConfig
    decomposition: Optional[Decomposition] = None
    stats: SearchStats

    @model_validator(mode="after")
    def check_decomposition_presence(self):
        if (self.status is SearchStatus.FOUND) != (self.decomposition is not None):
            raise ValueError("decomposition must be present exactly when status is Found")
        return self


class RamseyResult(BaseModel):
    n: int
    total_colorings: int
    triangle_free_count: int


class ExperimentLogEntry(BaseModel):
    config: SearchConfig
    status: SearchStatus
    nodes: int
    depth: int
    prunes: Dict[str, int]
    wall_ms: int
    timestamp: datetime
    rss_mb: Optional[float] = None
    cpu_seconds: Optional[float] = None


# Bounds
class ThetaKind(str, Enum):
    EXACT = "exact"
    RANGE = "range"


class ThetaValue(BaseModel):
    n: int
    kind: ThetaKind
    lo: int
    hi: int

    @model_validator(mode="after")
    def check_bounds(self):
        if self.lo > self.hi:
            raise ValueError("lower end of theta range exceeds upper end")
        if self.kind is ThetaKind.EXACT and self.lo != self.hi:
            raise ValueError("exact theta value needs lo == hi")
        return self

    @property
    def value(self) -> Optional[int]:
        return self.lo if self.kind is ThetaKind.EXACT else None


class LowerBoundReport(BaseModel):
    n: int
    lower_bound: int
    closed_form: int
    theta: ThetaValue
