from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from loguru import logger

from .analysis import bipartite_parts, two_coloring
from .graph_core import Graph, connected_components
from .models import BipartiteImbalance, Disconnected, ForcedSubcycle, HamiltonReport

DEFAULT_BUDGET = 10**8


class _BudgetExhausted(Exception):
    pass


@dataclass
class _Budget:
    limit: int
    used: int = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise _BudgetExhausted()


def is_hamiltonian_cycle(g: Graph, seq: Sequence[int]) -> bool:
    n = g.order
    if n < 3 or len(seq) != n or sorted(seq) != list(range(n)):
        return False
    return all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n))


def is_hamiltonian_path(g: Graph, seq: Sequence[int]) -> bool:
    n = g.order
    if n < 1 or len(seq) != n or sorted(seq) != list(range(n)):
        return False
    return all(g.has_edge(seq[i], seq[i + 1]) for i in range(n - 1))


def forced_subcycle_certificate(g: Graph) -> Optional[List[int]]:
    """
    Closed neighborhood of the degree-2 vertices, when it is a proper vertex subset that
    induces a 2-regular subgraph made only of forced edges (each touches a degree-2 vertex).
    """
    deg2 = [v for v in range(g.order) if g.degree(v) == 2]
    if not deg2:
        return None
    closed: Set[int] = set(deg2)
    for v in deg2:
        closed.update(g.adjacency[v])
    if len(closed) == g.order:
        return None
    for v in closed:
        inside = [u for u in g.adjacency[v] if u in closed]
        if len(inside) != 2:
            return None
        if g.degree(v) != 2 and any(g.degree(u) != 2 for u in inside):
            return None
    return sorted(closed)


def _propagate_forced(g: Graph) -> Optional[Tuple[List[Set[int]], List[Set[int]]]]:
    """
    Degree-2 forcing to a fixpoint. Returns (reduced adjacency, forced edges per vertex),
    or None when no Hamiltonian cycle can exist.
    """
    n = g.order
    adj = [set(a) for a in g.adjacency]
    forced: List[Set[int]] = [set() for _ in range(n)]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if len(adj[v]) < 2:
                return None
            if len(adj[v]) == 2:
                for u in adj[v]:
                    if u not in forced[v]:
                        forced[v].add(u)
                        forced[u].add(v)
                        changed = True
        for v in range(n):
            if len(forced[v]) > 2:
                return None
            if len(forced[v]) == 2 and len(adj[v]) > 2:
                for u in adj[v] - forced[v]:
                    adj[u].discard(v)
                adj[v] = set(forced[v])
                changed = True

    seen = [False] * n
    for root in range(n):
        if seen[root] or not forced[root]:
            continue
        comp = [root]
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            for u in forced[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        closed_loop = all(len(forced[v]) == 2 for v in comp)
        if closed_loop and len(comp) < n:
            return None
    return adj, forced


class _SpanningSearch:
    """
    Depth-first spanning path/cycle search from a fixed start.

    Extensions are tried in order of fewest free neighbors, then smallest index. Each
    extension costs one budget step. Branches are cut on dead ends, on more than one
    forced endpoint, on disconnected leftovers and, for bipartite graphs, on colour counts.
    """

    def __init__(
        self,
        adj: Sequence[Set[int]],
        budget: _Budget,
        *,
        closed: bool,
        forced: Optional[Sequence[Set[int]]] = None,
        colors: Optional[List[int]] = None,
    ) -> None:
        self.adj = [sorted(a) for a in adj]
        self.adj_sets = [set(a) for a in adj]
        self.n = len(adj)
        self.budget = budget
        self.closed = closed
        self.forced = forced
        self.colors = colors

    def run(self, start: int) -> Optional[List[int]]:
        n = self.n
        self.on = [False] * n
        self.path = [start]
        self.on[start] = True
        self.left = [0, 0]
        if self.colors is not None:
            for v in range(n):
                if v != start:
                    self.left[self.colors[v]] += 1
        if n == 1:
            return None if self.closed else [start]

        stack = [iter(self._candidates(start))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                if len(self.path) > 1:
                    self._retreat()
                continue
            self.budget.tick()
            self._advance(nxt)
            if len(self.path) == n:
                if not self.closed or start in self.adj_sets[nxt]:
                    return list(self.path)
                self._retreat()
                continue
            if not self._viable(nxt):
                self._retreat()
                continue
            stack.append(iter(self._candidates(nxt)))
        return None

    def _advance(self, v: int) -> None:
        self.path.append(v)
        self.on[v] = True
        if self.colors is not None:
            self.left[self.colors[v]] -= 1

    def _retreat(self) -> None:
        v = self.path.pop()
        self.on[v] = False
        if self.colors is not None:
            self.left[self.colors[v]] += 1

    def _free_degree(self, v: int) -> int:
        return sum(1 for u in self.adj[v] if not self.on[u])

    def _candidates(self, head: int) -> List[int]:
        if self.forced is not None:
            prev = self.path[-2] if len(self.path) > 1 else -1
            ahead = sorted(u for u in self.forced[head] if u != prev)
            if ahead:
                # a forced edge leaving the head must be the next step
                return [ahead[0]] if not self.on[ahead[0]] else []
        free = [u for u in self.adj[head] if not self.on[u]]
        free.sort(key=lambda u: (self._free_degree(u), u))
        return free

    def _viable(self, head: int) -> bool:
        start = self.path[0]
        remaining = self.n - len(self.path)
        if self.colors is not None:
            nxt = 1 - self.colors[head]
            diff = self.left[nxt] - self.left[1 - nxt]
            if diff not in (0, 1):
                return False
            if self.closed:
                last = nxt if diff == 1 else 1 - nxt
                if last == self.colors[start]:
                    return False
        if self.closed and not any(not self.on[u] for u in self.adj[start]):
            return False

        ends = 0
        first_free = -1
        for v in range(self.n):
            if self.on[v]:
                continue
            if first_free < 0:
                first_free = v
            avail = 0
            for u in self.adj[v]:
                if not self.on[u] or u == head or (self.closed and u == start):
                    avail += 1
            if self.closed:
                if avail < 2:
                    return False
            else:
                if avail == 0:
                    return False
                if avail == 1:
                    ends += 1
                    if ends > 1:
                        return False

        if not any(not self.on[u] for u in self.adj[head]):
            return False
        seen = {first_free}
        stack = [first_free]
        while stack:
            v = stack.pop()
            for u in self.adj[v]:
                if not self.on[u] and u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == remaining


def _start_vertex(g: Graph, adj: Sequence[Set[int]]) -> int:
    return min(range(g.order), key=lambda v: (len(adj[v]), v))


def _search_cycle(g: Graph, budget: _Budget) -> Optional[List[int]]:
    reduced = _propagate_forced(g)
    if reduced is None:
        return None
    adj, forced = reduced
    search = _SpanningSearch(adj, budget, closed=True, forced=forced, colors=two_coloring(g))
    return search.run(_start_vertex(g, adj))


def _search_path(g: Graph, budget: _Budget) -> Optional[List[int]]:
    adj = [set(a) for a in g.adjacency]
    leaves = [v for v in range(g.order) if len(adj[v]) == 1]
    if len(leaves) > 2:
        return None
    if leaves:
        starts = leaves[:1]
    else:
        starts = sorted(range(g.order), key=lambda v: (len(adj[v]), v))
    search = _SpanningSearch(adj, budget, closed=False, colors=two_coloring(g))
    for start in starts:
        found = search.run(start)
        if found is not None:
            return found
    return None


def _trivial_report(g: Graph) -> Optional[HamiltonReport]:
    n = g.order
    if n == 0:
        return HamiltonReport(status="neither", order=0)
    comps = connected_components(g)
    if len(comps) > 1:
        return HamiltonReport(status="neither", order=n, obstruction=Disconnected(components=len(comps)))
    if n <= 2:
        return HamiltonReport(status="traceable_only", order=n, witness=list(range(n)), witness_kind="path")
    return None


def _cycle_obstruction(g: Graph):
    """(cycle ruled out, certificate or None)."""
    parts = bipartite_parts(g)
    if parts is not None and parts[0] - parts[1] >= 2:
        return True, BipartiteImbalance(size_a=parts[0], size_b=parts[1])
    if parts is not None and parts[0] != parts[1]:
        return True, None
    if min(g.degrees()) < 2:
        return True, None
    cert = forced_subcycle_certificate(g)
    if cert is not None:
        return True, ForcedSubcycle(vertices=cert)
    return False, None


def hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> HamiltonReport:
    trivial = _trivial_report(g)
    if trivial is not None:
        return trivial
    n = g.order
    steps = _Budget(budget)
    ruled_out, obstruction = _cycle_obstruction(g)
    try:
        if not ruled_out:
            found = _search_cycle(g, steps)
            if found is not None:
                return HamiltonReport(status="hamiltonian", order=n, witness=found, witness_kind="cycle", steps=steps.used)
        if isinstance(obstruction, BipartiteImbalance):
            return HamiltonReport(status="neither", order=n, obstruction=obstruction, steps=steps.used)
        path = _search_path(g, steps)
    except _BudgetExhausted:
        logger.warning(f"hamiltonian_cycle: budget of {budget} steps exhausted on {n} vertices")
        return HamiltonReport(status="unknown", order=n, obstruction=obstruction, steps=steps.limit)
    if path is None:
        return HamiltonReport(status="neither", order=n, obstruction=obstruction, steps=steps.used)
    return HamiltonReport(
        status="traceable_only", order=n, witness=path, witness_kind="path", obstruction=obstruction, steps=steps.used
    )


def hamiltonian_path(g: Graph, budget: int = DEFAULT_BUDGET) -> HamiltonReport:
    trivial = _trivial_report(g)
    if trivial is not None:
        return trivial
    n = g.order
    steps = _Budget(budget)
    ruled_out, obstruction = _cycle_obstruction(g)
    if isinstance(obstruction, BipartiteImbalance):
        return HamiltonReport(status="neither", order=n, obstruction=obstruction)
    try:
        path = _search_path(g, steps)
    except _BudgetExhausted:
        logger.warning(f"hamiltonian_path: budget of {budget} steps exhausted on {n} vertices")
        return HamiltonReport(status="unknown", order=n, obstruction=obstruction, steps=steps.limit)
    if path is None:
        return HamiltonReport(status="neither", order=n, obstruction=obstruction, steps=steps.used)
    if ruled_out:
        return HamiltonReport(
            status="traceable_only", order=n, witness=path, witness_kind="path", obstruction=obstruction, steps=steps.used
        )
    if g.has_edge(path[0], path[-1]):
        return HamiltonReport(status="hamiltonian", order=n, witness=path, witness_kind="cycle", steps=steps.used)
    try:
        found = _search_cycle(g, steps)
    except _BudgetExhausted:
        return HamiltonReport(status="unknown", order=n, witness=path, witness_kind="path", steps=steps.limit)
    if found is not None:
        return HamiltonReport(status="hamiltonian", order=n, witness=found, witness_kind="cycle", steps=steps.used)
    return HamiltonReport(status="traceable_only", order=n, witness=path, witness_kind="path", steps=steps.used)


def search_hamiltonian_cycle(g: Graph, budget: int = DEFAULT_BUDGET) -> Optional[List[int]]:
    """Exact search only (forcing and pruning, no certificates). Raises TimeoutError on budget exhaustion."""
    try:
        return _search_cycle(g, _Budget(budget)) if g.order >= 3 else None
    except _BudgetExhausted:
        raise TimeoutError(f"no answer within {budget} steps") from None


def search_hamiltonian_path(g: Graph, budget: int = DEFAULT_BUDGET) -> Optional[List[int]]:
    """Exact search only; connected or not. Raises TimeoutError on budget exhaustion."""
    if g.order == 0:
        return None
    if len(connected_components(g)) > 1:
        return None
    try:
        return _search_path(g, _Budget(budget))
    except _BudgetExhausted:
        raise TimeoutError(f"no answer within {budget} steps") from None
