from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, List, Optional, Tuple

from loguru import logger

from .analysis import are_isomorphic
from .domination import oracle_count_isets
from .errors import InvalidParameterError
from .families import (
    bracelet_neighbors,
    count_cycle_isets,
    count_path_isets,
    cycle_gf_parameters,
    cycle_iset_label,
    gf_cycle_coefficient,
    iset_type,
    ISetType,
    lattice_label_to_iset,
    path_gf_coefficient,
    path_gf_parameters,
    path_iset_lattice_label,
    predicted_cycle_igraph,
    predicted_path_igraph,
)
from .graph_core import cycle, path
from .models import VerifyReport, VerifyRow
from .reconfig import IGraph, build_igraph

# Sweeps above this order need an explicit override.
SWEEP_GUARD = 22


def lattice_labels_hold(n: int, ig: IGraph) -> bool:
    """i-graph edges of P_{3k+1} are exactly grid moves of the (i,j) small-interval labels."""
    labels = [path_iset_lattice_label(n, s) for s in ig.isets]
    if len(set(labels)) != len(labels):
        return False
    if any(lattice_label_to_iset(n, lab) != s for lab, s in zip(labels, ig.isets)):
        return False
    for a in range(ig.graph.order):
        for b in range(a + 1, ig.graph.order):
            la, lb = labels[a], labels[b]
            grid = abs(la.i - lb.i) + abs(la.j - lb.j) == 1
            if grid != ig.graph.has_edge(a, b):
                return False
    return True


def bracelet_labels_hold(n: int, ig: IGraph) -> bool:
    """Every i-set's neighbors in the i-graph carry exactly the labels the bracelet rules give."""
    labels = [cycle_iset_label(n, s) for s in ig.isets]
    for v, lab in enumerate(labels):
        actual = sorted(labels[u] for u in ig.graph.adjacency[v])
        if actual != bracelet_neighbors(lab):
            return False
    return True


def degree_law_holds(n: int, ig: IGraph) -> bool:
    """Degrees are 2 or 4, and degree 2 exactly on the Type1 labels."""
    for v, s in enumerate(ig.isets):
        deg = ig.graph.degree(v)
        if deg not in (2, 4):
            return False
        if (deg == 2) != (iset_type(n, cycle_iset_label(n, s)) is ISetType.TYPE1):
            return False
    return True


def verify_path(n: int) -> VerifyRow:
    started = time.perf_counter()
    seed = path(n)
    ig = build_igraph(seed)
    iso = are_isomorphic(ig.graph, predicted_path_igraph(n)) is not None
    labels_ok: Optional[bool] = lattice_labels_hold(n, ig) if n % 3 == 1 else None
    return VerifyRow(
        n=n,
        family="path",
        count_closed_form=count_path_isets(n),
        count_enumerated=len(ig.isets),
        count_oracle=oracle_count_isets(seed),
        count_generating_function=path_gf_coefficient(*path_gf_parameters(n)),
        iso_ok=iso,
        labels_ok=labels_ok,
        seconds=time.perf_counter() - started,
    )


def verify_cycle(n: int) -> VerifyRow:
    started = time.perf_counter()
    seed = cycle(n)
    ig = build_igraph(seed)
    iso = are_isomorphic(ig.graph, predicted_cycle_igraph(n)) is not None
    labels_ok: Optional[bool] = None
    if n % 3 == 1:
        labels_ok = bracelet_labels_hold(n, ig) and (n < 7 or degree_law_holds(n, ig))
    return VerifyRow(
        n=n,
        family="cycle",
        count_closed_form=count_cycle_isets(n),
        count_enumerated=len(ig.isets),
        count_oracle=oracle_count_isets(seed),
        count_generating_function=gf_cycle_coefficient(*cycle_gf_parameters(n)),
        iso_ok=iso,
        labels_ok=labels_ok,
        seconds=time.perf_counter() - started,
    )


def _verify_job(job: Tuple[str, int]) -> VerifyRow:
    family, n = job
    return verify_path(n) if family == "path" else verify_cycle(n)


def plan_sweep(paths_max: Optional[int], cycles_max: Optional[int], *, allow_large: bool = False) -> List[Tuple[str, int]]:
    jobs: List[Tuple[str, int]] = []
    if paths_max is not None:
        if paths_max < 1:
            raise InvalidParameterError(f"paths start at n=1, got --paths-max {paths_max}")
        if paths_max > SWEEP_GUARD and not allow_large:
            raise InvalidParameterError(f"--paths-max {paths_max} exceeds {SWEEP_GUARD}; pass --allow-large")
        jobs += [("path", n) for n in range(1, paths_max + 1)]
    if cycles_max is not None:
        if cycles_max < 3:
            raise InvalidParameterError(f"cycles start at n=3, got --cycles-max {cycles_max}")
        if cycles_max > SWEEP_GUARD and not allow_large:
            raise InvalidParameterError(f"--cycles-max {cycles_max} exceeds {SWEEP_GUARD}; pass --allow-large")
        jobs += [("cycle", n) for n in range(3, cycles_max + 1)]
    return jobs


def run_sweep(
    jobs: List[Tuple[str, int]],
    *,
    workers: int = 1,
    on_row: Optional[Callable[[VerifyRow], None]] = None,
) -> VerifyReport:
    """Run rows serially or on a process pool; rows come back in ascending n per family."""
    rows: List[VerifyRow] = []
    if workers <= 1:
        for job in jobs:
            row = _verify_job(job)
            rows.append(row)
            if on_row:
                on_row(row)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for row in pool.map(_verify_job, jobs):
                rows.append(row)
                if on_row:
                    on_row(row)
    report = VerifyReport.from_rows(rows)
    if report.failed:
        failing = [f"{r.family}:{r.n}" for r in report.rows if not r.passed]
        logger.warning(f"verification failed for {', '.join(failing)}")
    return report
