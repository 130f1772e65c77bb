from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, Field


class FamilyRequest(BaseModel):
    # "path:N", "cycle:N", "bracelet:K" or "lattice:K"
    family: str = Field(min_length=3)


class HamiltonRequest(BaseModel):
    target: str = Field(min_length=3)
    budget: Optional[int] = Field(default=None, ge=1)
    # Analyse the target's i-graph instead of the target itself (bracelet/lattice targets).
    igraph: bool = False


class CountsResponse(BaseModel):
    family: str
    n: int
    closed_form: int
    generating_function: int
    enumerated: Optional[int] = None
