from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, List, Tuple

from loguru import logger

from .errors import InvalidGraphError, InvalidISetError, InvalidParameterError, TooLargeError
from .graph_core import MAX_SEED_ORDER, Graph, VertexSet, check_vertex_set, is_dominating, is_independent

# Subset scans are exponential; keep the oracle on small inputs.
MAX_ORACLE_ORDER = 30


def _require_seed(g: Graph, limit: int = MAX_SEED_ORDER) -> None:
    if g.order < 1:
        raise InvalidParameterError("graph must have at least one vertex")
    if g.order > limit:
        raise TooLargeError(f"graph has {g.order} vertices, limit is {limit}")


def _sets_of_size(g: Graph, size: int) -> Iterator[int]:
    """
    Independent dominating sets of exactly `size` vertices, as masks, in lexicographic
    order of their sorted member lists.

    Vertices are decided in index order, include-branch first. A vertex whose closed
    neighborhood is fully decided must already be dominated.
    """
    n = g.order
    adj = g.neighbor_masks
    closed = g.closed_masks
    full = (1 << n) - 1
    reach = max(g.degrees(), default=0) + 1
    due: List[int] = [0] * n
    for u in range(n):
        due[max((u, *g.adjacency[u]))] |= 1 << u

    def rec(v: int, chosen: int, dominated: int, count: int) -> Iterator[int]:
        if count == size:
            if dominated == full:
                yield chosen
            return
        left = size - count
        if n - v < left:
            return
        undominated = (full & ~dominated).bit_count()
        if left * reach < undominated:
            return
        if not (adj[v] & chosen):
            dom = dominated | closed[v]
            if dom & due[v] == due[v]:
                yield from rec(v + 1, chosen | (1 << v), dom, count + 1)
        if dominated & due[v] == due[v]:
            yield from rec(v + 1, chosen, dominated, count)

    return rec(0, 0, 0, 0)


def independent_domination_number(g: Graph) -> int:
    _require_seed(g)
    for size in range(1, g.order + 1):
        for _ in _sets_of_size(g, size):
            return size
    raise AssertionError("every graph has an independent dominating set")


def enumerate_isets(g: Graph) -> List[VertexSet]:
    _require_seed(g)
    size = independent_domination_number(g)
    out = [VertexSet.from_mask(m) for m in _sets_of_size(g, size)]
    logger.debug(f"enumerated {len(out)} i-sets of size {size} on {g.order} vertices")
    return out


def oracle_count_isets(g: Graph) -> int:
    """Plain subset scan by increasing size, using only the two predicates."""
    _require_seed(g, MAX_ORACLE_ORDER)
    n = g.order
    reach = max(g.degrees(), default=0) + 1
    for size in range(1, n + 1):
        if size * reach < n:
            continue
        found = 0
        for combo in combinations(range(n), size):
            s = VertexSet(combo)
            if is_independent(g, s) and is_dominating(g, s):
                found += 1
        if found:
            return found
    raise AssertionError("every graph has an independent dominating set")


def is_maximal_independent(g: Graph, s: VertexSet) -> bool:
    """Independent, and no outside vertex can be added without breaking independence."""
    check_vertex_set(g, s)
    members = set(s.members)
    for v in members:
        if any(u in members for u in g.adjacency[v]):
            return False
    for v in range(g.order):
        if v not in members and not any(u in members for u in g.adjacency[v]):
            return False
    return True


def is_iset(g: Graph, s: VertexSet) -> bool:
    check_vertex_set(g, s)
    return (
        is_independent(g, s)
        and is_dominating(g, s)
        and len(s) == _cached_domination_number(g)
    )


def require_iset(g: Graph, s: VertexSet) -> None:
    if not is_iset(g, s):
        raise InvalidISetError(f"{list(s.members)} is not a minimum independent dominating set")


_I_CACHE: dict = {}


def _cached_domination_number(g: Graph) -> int:
    hit = _I_CACHE.get(g)
    if hit is None:
        if len(_I_CACHE) > 256:
            _I_CACHE.clear()
        hit = _I_CACHE[g] = independent_domination_number(g)
    return hit


class GapMode(str, Enum):
    LINEAR = "linear"
    CIRCULAR = "circular"


@dataclass(frozen=True)
class GapProfile:
    mode: GapMode
    gaps: Tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.gaps)

    @property
    def t(self) -> int:
        return len(self.gaps)

    def lower_bound(self, position: int) -> int:
        """Smallest legal size of gap `position` (0-based)."""
        if self.mode is GapMode.LINEAR and position in (0, len(self.gaps) - 1):
            return 0
        return 1

    def is_small(self, position: int) -> bool:
        return self.gaps[position] == self.lower_bound(position)

    def small_positions(self) -> List[int]:
        """1-based positions of the small gaps."""
        return [p + 1 for p in range(len(self.gaps)) if self.is_small(p)]


def _is_path_graph(g: Graph) -> bool:
    return all(g.adjacency[v] == tuple(u for u in (v - 1, v + 1) if 0 <= u < g.order) for v in range(g.order))


def _is_cycle_graph(g: Graph) -> bool:
    n = g.order
    return n >= 3 and all(g.adjacency[v] == tuple(sorted({(v - 1) % n, (v + 1) % n})) for v in range(n))


def gap_profile(g: Graph, s: VertexSet, mode: GapMode | str) -> GapProfile:
    """
    Run lengths of non-members between consecutive members.

    Linear mode (paths) has t = |s|+1 entries with the two end runs first and last.
    Circular mode (cycles) has |s| entries, starting with the run after the first member.
    """
    mode = GapMode(mode)
    if mode is GapMode.LINEAR and not _is_path_graph(g):
        raise InvalidGraphError("linear gap profiles need a path graph")
    if mode is GapMode.CIRCULAR and not _is_cycle_graph(g):
        raise InvalidGraphError("circular gap profiles need a cycle graph")
    require_iset(g, s)
    m = s.members
    inner = [m[i + 1] - m[i] - 1 for i in range(len(m) - 1)]
    if mode is GapMode.LINEAR:
        gaps = [m[0], *inner, g.order - 1 - m[-1]]
    else:
        gaps = [*inner, g.order - 1 - m[-1] + m[0]]
    return GapProfile(mode=mode, gaps=tuple(gaps))


def small_gap_count(profile: GapProfile) -> int:
    return len(profile.small_positions())
