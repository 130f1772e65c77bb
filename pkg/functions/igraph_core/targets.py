from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from .errors import InvalidParameterError
from .families import bracelet, worn_lattice
from .graph_core import Graph, cycle, path
from .serialization import from_json

FAMILIES = ("path", "cycle", "bracelet", "lattice")

_SPEC_RE = re.compile(r"^\s*([a-z]+)\s*:\s*(-?\d+)\s*$")


@dataclass(frozen=True)
class FamilySpec:
    """`name:param`, e.g. cycle:13 or bracelet:4."""

    name: str
    param: int

    @property
    def is_seed_family(self) -> bool:
        return self.name in ("path", "cycle")

    def graph(self) -> Graph:
        if self.name == "path":
            return path(self.param)
        if self.name == "cycle":
            return cycle(self.param)
        if self.name == "bracelet":
            return bracelet(self.param)
        return worn_lattice(self.param)

    def __str__(self) -> str:
        return f"{self.name}:{self.param}"


def parse_family_spec(text: str) -> FamilySpec:
    m = _SPEC_RE.match(text or "")
    if not m:
        raise InvalidParameterError(f"expected <family>:<int>, got {text!r}")
    name, param = m.group(1), int(m.group(2))
    if name not in FAMILIES:
        raise InvalidParameterError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    return FamilySpec(name=name, param=param)


def looks_like_family_spec(text: str) -> bool:
    return bool(_SPEC_RE.match(text or "")) and not Path(text).exists()


def load_target(text: str) -> Tuple[Optional[FamilySpec], Graph]:
    """A family spec, or the path of a JSON graph document."""
    if looks_like_family_spec(text):
        spec = parse_family_spec(text)
        return spec, spec.graph()
    try:
        raw = Path(text).read_text(encoding="utf-8")
    except OSError as e:
        raise InvalidParameterError(f"cannot read graph document {text!r}: {e.strerror or e}") from e
    return None, from_json(raw)
