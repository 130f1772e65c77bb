from __future__ import annotations

from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, Field


class GraphDocument(BaseModel):
    n: int = Field(ge=0)
    edges: List[tuple[int, int]] = Field(default_factory=list)
    labels: Optional[List[str]] = None


class SlideEdge(BaseModel):
    # i-graph vertex indices, plus the seed vertices the token leaves and enters
    a: int
    b: int
    leave: int
    enter: int


class IGraphDocument(BaseModel):
    seed: GraphDocument
    isets: List[List[int]]
    edges: List[SlideEdge]
    labels: List[str]


class BipartiteImbalance(BaseModel):
    kind: Literal["bipartite_imbalance"] = "bipartite_imbalance"
    size_a: int
    size_b: int


class ForcedSubcycle(BaseModel):
    kind: Literal["forced_subcycle"] = "forced_subcycle"
    vertices: List[int]


class Disconnected(BaseModel):
    kind: Literal["disconnected"] = "disconnected"
    components: int


Obstruction = Annotated[
    Union[BipartiteImbalance, ForcedSubcycle, Disconnected],
    Field(discriminator="kind"),
]

HamiltonStatus = Literal["hamiltonian", "traceable_only", "neither", "unknown"]


class HamiltonReport(BaseModel):
    """
    Hamiltonicity classification.

    `witness` is a cycle (status hamiltonian) or a path (traceable_only, or a partial
    answer while the cycle question stays open under status unknown).
    """

    status: HamiltonStatus
    order: int
    witness: Optional[List[int]] = None
    witness_kind: Optional[Literal["cycle", "path"]] = None
    obstruction: Optional[Obstruction] = None
    steps: int = 0


class VerifyRow(BaseModel):
    n: int
    family: Literal["path", "cycle"]
    count_closed_form: int
    count_enumerated: int
    count_oracle: int
    count_generating_function: int
    iso_ok: bool
    labels_ok: Optional[bool] = None
    # Timing stays out of the JSON payload so reports are reproducible.
    seconds: float = Field(default=0.0, exclude=True)

    @property
    def passed(self) -> bool:
        counts = {
            self.count_closed_form,
            self.count_enumerated,
            self.count_oracle,
            self.count_generating_function,
        }
        return len(counts) == 1 and self.iso_ok and self.labels_ok is not False


class VerifyReport(BaseModel):
    rows: List[VerifyRow]
    passed: int
    failed: int

    @classmethod
    def from_rows(cls, rows: List[VerifyRow]) -> "VerifyReport":
        ordered = sorted(rows, key=lambda r: (r.family != "path", r.n))
        ok = sum(1 for r in ordered if r.passed)
        return cls(rows=ordered, passed=ok, failed=len(ordered) - ok)
