from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .errors import TooLargeError
from .graph_core import Graph, connected_components

MAX_ISO_ORDER = 700


@dataclass(frozen=True)
class IsoWitness:
    """`mapping[v]` is the image in the second graph of vertex v of the first."""

    mapping: Tuple[int, ...]


def verify_iso_witness(g1: Graph, g2: Graph, witness: IsoWitness) -> bool:
    m = witness.mapping
    if g1.order != g2.order or len(m) != g1.order or sorted(m) != list(range(g2.order)):
        return False
    if g1.edge_count != g2.edge_count:
        return False
    return all(g2.has_edge(m[u], m[v]) for u, v in g1.edges())


def _refine_colors(g1: Graph, g2: Graph) -> Tuple[List[int], List[int]]:
    """Joint colour refinement; equal colours across the two graphs mean equal signatures."""
    c1 = g1.degrees()
    c2 = g2.degrees()
    classes = len(set(c1) | set(c2))
    while True:
        palette: dict = {}

        def step(g: Graph, colors: List[int]) -> List[int]:
            return [
                palette.setdefault((colors[v], tuple(sorted(colors[u] for u in g.adjacency[v]))), len(palette))
                for v in range(g.order)
            ]

        n1, n2 = step(g1, c1), step(g2, c2)
        c1, c2 = n1, n2
        if len(palette) == classes:
            return c1, c2
        classes = len(palette)


def _search_order(g: Graph, colors: List[int]) -> Tuple[List[int], List[int]]:
    """BFS order per component, each rooted at a vertex of its rarest colour; returns (order, parent)."""
    freq = Counter(colors)
    order: List[int] = []
    parent = [-1] * g.order
    for comp in connected_components(g):
        root = min(comp, key=lambda v: (freq[colors[v]], v))
        seen = {root}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in g.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    parent[u] = v
                    queue.append(u)
    return order, parent


def are_isomorphic(g1: Graph, g2: Graph) -> Optional[IsoWitness]:
    """Exact isomorphism test; returns a verified mapping or None."""
    for g in (g1, g2):
        if g.order > MAX_ISO_ORDER:
            raise TooLargeError(f"isomorphism is limited to {MAX_ISO_ORDER} vertices, got {g.order}")
    if g1.order != g2.order or g1.edge_count != g2.edge_count:
        return None
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return None
    n = g1.order
    if n == 0:
        return IsoWitness(())

    col1, col2 = _refine_colors(g1, g2)
    if Counter(col1) != Counter(col2):
        return None

    order, parent = _search_order(g1, col1)
    image = [-1] * n
    preimage = [-1] * n

    def candidates(v: int) -> List[int]:
        p = parent[v]
        pool = g2.adjacency[image[p]] if p >= 0 else range(n)
        mapped_nbrs = [image[u] for u in g1.adjacency[v] if image[u] >= 0]
        out = []
        for c in pool:
            if preimage[c] >= 0 or col2[c] != col1[v]:
                continue
            if not all(g2.has_edge(c, w) for w in mapped_nbrs):
                continue
            if sum(1 for w in g2.adjacency[c] if preimage[w] >= 0) != len(mapped_nbrs):
                continue
            out.append(c)
        return out

    pending = [iter(candidates(order[0]))] + [iter(())] * (n - 1)
    depth = 0
    while depth >= 0:
        v = order[depth]
        if image[v] >= 0:
            preimage[image[v]] = -1
            image[v] = -1
        c = next(pending[depth], None)
        if c is None:
            depth -= 1
            continue
        image[v] = c
        preimage[c] = v
        if depth + 1 == n:
            witness = IsoWitness(tuple(image))
            assert verify_iso_witness(g1, g2, witness)
            return witness
        depth += 1
        pending[depth] = iter(candidates(order[depth]))
    return None


def two_coloring(g: Graph) -> Optional[List[int]]:
    """Colour 0/1 per vertex, colour 0 on each component's smallest vertex; None on an odd cycle."""
    color = [-1] * g.order
    for root in range(g.order):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return color


def bipartite_parts(g: Graph) -> Optional[Tuple[int, int]]:
    """Class sizes, larger first per component, summed over components."""
    color = two_coloring(g)
    if color is None:
        return None
    size_a = size_b = 0
    for comp in connected_components(g):
        ones = sum(color[v] for v in comp)
        zeros = len(comp) - ones
        size_a += max(ones, zeros)
        size_b += min(ones, zeros)
    return size_a, size_b
