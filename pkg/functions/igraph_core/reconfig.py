from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from loguru import logger

from .domination import enumerate_isets, require_iset
from .errors import ConstructionError, InvalidISetError
from .graph_core import Graph, VertexSet, format_vertex_set, from_edge_list, is_dominating, is_independent


@dataclass(frozen=True)
class Slide:
    """A token moving from seed vertex `leave` to its neighbor `enter`."""

    leave: int
    enter: int

    def reversed(self) -> "Slide":
        return Slide(leave=self.enter, enter=self.leave)


@dataclass(frozen=True, eq=False)
class IGraph:
    """
    Token-slide graph of a seed graph's i-sets.

    Vertex v of `graph` is `isets[v]`. `slides[(a, b)]` (a < b) is the move that turns
    isets[a] into isets[b].
    """

    seed: Graph
    graph: Graph
    isets: Tuple[VertexSet, ...]
    slides: Mapping[Tuple[int, int], Slide] = field(default_factory=dict)

    @cached_property
    def _index(self) -> Dict[int, int]:
        return {s.mask: i for i, s in enumerate(self.isets)}

    def index_of(self, s: VertexSet) -> int:
        try:
            return self._index[s.mask]
        except KeyError:
            raise InvalidISetError(f"{list(s.members)} is not an i-set of this seed graph") from None

    def slide(self, a: int, b: int) -> Slide:
        if a < b:
            return self.slides[(a, b)]
        return self.slides[(b, a)].reversed()

    def relabeled(self, labels: Optional[Sequence[str]]) -> "IGraph":
        return IGraph(seed=self.seed, graph=self.graph.relabel(labels), isets=self.isets, slides=self.slides)


def _slide_targets(g: Graph, s: VertexSet):
    """Every (x, y, mask) with x in s, y a non-member neighbor of x, mask = (s - x) + y."""
    for x in s.members:
        for y in g.adjacency[x]:
            if y not in s:
                yield x, y, (s.mask & ~(1 << x)) | (1 << y)


def token_slide_adjacent(g: Graph, s1: VertexSet, s2: VertexSet) -> Optional[Slide]:
    require_iset(g, s1)
    require_iset(g, s2)
    diff = s1.mask ^ s2.mask
    if diff.bit_count() != 2:
        return None
    x = (s1.mask & diff).bit_length() - 1
    y = (s2.mask & diff).bit_length() - 1
    if not g.has_edge(x, y):
        return None
    return Slide(leave=x, enter=y)


def build_igraph(g: Graph) -> IGraph:
    isets = enumerate_isets(g)
    index = {s.mask: i for i, s in enumerate(isets)}
    slides: Dict[Tuple[int, int], Slide] = {}
    for a, s in enumerate(isets):
        for x, y, mask in _slide_targets(g, s):
            b = index.get(mask)
            if b is None or b < a:
                continue
            if (a, b) in slides:
                raise ConstructionError(f"i-sets {a} and {b} are joined by two different slides")
            slides[(a, b)] = Slide(leave=x, enter=y)

    labels: List[str] = [format_vertex_set(g, s) for s in isets]
    graph = from_edge_list(len(isets), list(slides), labels)
    logger.debug(f"i-graph: {graph.order} vertices, {graph.edge_count} edges")
    return IGraph(seed=g, graph=graph, isets=tuple(isets), slides=slides)


def _slide_neighbors(g: Graph, s: VertexSet) -> Dict[int, Slide]:
    out: Dict[int, Slide] = {}
    for x, y, mask in _slide_targets(g, s):
        t = VertexSet.from_mask(mask)
        if is_independent(g, t) and is_dominating(g, t):
            out[mask] = Slide(leave=x, enter=y)
    return out


def frozen_tokens(g: Graph, s: VertexSet) -> VertexSet:
    require_iset(g, s)
    mobile = {slide.leave for slide in _slide_neighbors(g, s).values()}
    return VertexSet(tuple(x for x in s.members if x not in mobile))


def degree_in_igraph(g: Graph, s: VertexSet) -> int:
    require_iset(g, s)
    return len(_slide_neighbors(g, s))
