from __future__ import annotations

from typing import Any, Dict, Optional


class IGraphError(ValueError):
    """Base error; `code` is the stable machine-readable tag used in API bodies."""

    code = "IGRAPH_ERROR"

    def to_payload(self) -> Dict[str, Any]:
        return {"error": str(self), "code": self.code}


class InvalidParameterError(IGraphError):
    code = "INVALID_PARAMETER"


class InvalidEdgeError(IGraphError):
    code = "INVALID_EDGE"


class GraphParseError(IGraphError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, position: Optional[str] = None) -> None:
        self.position = position
        super().__init__(f"{message} (at {position})" if position else message)

    def to_payload(self) -> Dict[str, Any]:
        body = super().to_payload()
        if self.position is not None:
            body["position"] = self.position
        return body


class TooLargeError(IGraphError):
    code = "TOO_LARGE"


class InvalidISetError(IGraphError):
    code = "INVALID_ISET"


class InvalidGraphError(IGraphError):
    code = "INVALID_GRAPH"


class ConstructionError(IGraphError):
    code = "CONSTRUCTION_ERROR"
