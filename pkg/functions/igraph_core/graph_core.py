from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidEdgeError, InvalidParameterError

# Seed graphs are capped so a vertex set fits one machine word.
MAX_SEED_ORDER = 64


@dataclass(frozen=True)
class Graph:
    """
    Undirected simple graph on vertices 0..order-1.

    `adjacency[v]` is the sorted neighbor tuple of v. `labels` are optional display
    names (i-set member lists, lattice coordinates, pair labels).
    """

    order: int
    adjacency: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self) -> None:
        if self.order < 0:
            raise InvalidParameterError("order must be >= 0")
        if len(self.adjacency) != self.order:
            raise InvalidEdgeError(f"adjacency has {len(self.adjacency)} rows, expected {self.order}")
        if self.labels is not None and len(self.labels) != self.order:
            raise InvalidParameterError(f"got {len(self.labels)} labels for {self.order} vertices")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if u <= prev:
                    raise InvalidEdgeError(f"neighbors of {v} are not strictly increasing")
                if u >= self.order or u < 0:
                    raise InvalidEdgeError(f"neighbor {u} of {v} is out of range")
                if u == v:
                    raise InvalidEdgeError(f"self-loop at {v}")
                prev = u
        masks = self.neighbor_masks
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not (masks[u] >> v) & 1:
                    raise InvalidEdgeError(f"edge ({v},{u}) is not symmetric")

    @cached_property
    def neighbor_masks(self) -> Tuple[int, ...]:
        out = []
        for nbrs in self.adjacency:
            m = 0
            for u in nbrs:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def closed_masks(self) -> Tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.neighbor_masks))

    @property
    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(v, u) for v, nbrs in enumerate(self.adjacency) for u in nbrs if v < u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.neighbor_masks[u] >> v) & 1)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def relabel(self, labels: Optional[Sequence[str]]) -> "Graph":
        return Graph(self.order, self.adjacency, tuple(labels) if labels is not None else None)


@dataclass(frozen=True, order=True)
class VertexSet:
    """Strictly increasing member tuple of seed-graph vertex indices."""

    members: Tuple[int, ...]

    def __post_init__(self) -> None:
        prev = -1
        for v in self.members:
            if v <= prev:
                raise InvalidParameterError(f"vertex set members must be distinct, sorted, >= 0: {self.members}")
            prev = v

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        return cls(tuple(sorted(set(vertices))))

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        out = []
        v = 0
        while mask:
            if mask & 1:
                out.append(v)
            mask >>= 1
            v += 1
        return cls(tuple(out))

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v and bool((self.mask >> v) & 1)


def from_edge_list(
    n: int,
    edges: Iterable[Sequence[int]],
    labels: Optional[Sequence[str]] = None,
) -> Graph:
    """Build a simple graph; duplicate edges collapse, self-loops and bad endpoints raise."""
    if n < 0:
        raise InvalidParameterError("n must be >= 0")
    nbrs: List[set] = [set() for _ in range(n)]
    for e in edges:
        if len(e) != 2:
            raise InvalidEdgeError(f"edge {list(e)} must have exactly two endpoints")
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdgeError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InvalidEdgeError(f"self-loop at {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(
        order=n,
        adjacency=tuple(tuple(sorted(s)) for s in nbrs),
        labels=tuple(labels) if labels is not None else None,
    )


def empty_graph(n: int, labels: Optional[Sequence[str]] = None) -> Graph:
    return from_edge_list(n, [], labels)


def path(n: int) -> Graph:
    """P_n; vertex i carries the 1-based name v_{i+1}."""
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], [f"v_{i + 1}" for i in range(n)])


def cycle(n: int) -> Graph:
    """C_n; vertex i carries the 0-based name v_i."""
    if n < 3:
        raise InvalidParameterError(f"cycle needs n >= 3, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], [f"v_{i}" for i in range(n)])


def check_vertex_set(g: Graph, s: VertexSet) -> None:
    if s.members and s.members[-1] >= g.order:
        raise InvalidParameterError(f"vertex {s.members[-1]} is not a vertex of a graph of order {g.order}")


def is_independent(g: Graph, s: VertexSet) -> bool:
    check_vertex_set(g, s)
    mask = s.mask
    return all(not (g.neighbor_masks[v] & mask) for v in s.members)


def is_dominating(g: Graph, s: VertexSet) -> bool:
    check_vertex_set(g, s)
    covered = 0
    for v in s.members:
        covered |= g.closed_masks[v]
    return covered == (1 << g.order) - 1


def format_vertex_set(g: Graph, s: VertexSet) -> str:
    return "{" + ",".join(g.label(v) for v in s.members) + "}"


def connected_components(g: Graph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by smallest member."""
    seen = [False] * g.order
    out: List[List[int]] = []
    for root in range(g.order):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph; new vertex i is the i-th smallest of `vertices`, labels carried over."""
    keep = sorted(set(vertices))
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[v], index[u]) for v in keep for u in g.adjacency[v] if u in index and v < u]
    labels = [g.label(v) for v in keep] if g.labels is not None else None
    return from_edge_list(len(keep), edges, labels)


def to_networkx(g: Graph):
    import networkx as nx

    out = nx.Graph()
    for v in range(g.order):
        out.add_node(v, label=g.label(v))
    out.add_edges_from(g.edges())
    return out
