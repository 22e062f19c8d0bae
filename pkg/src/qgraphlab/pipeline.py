"""Orchestration: fan per-graph work out to processes and assemble CSVs.

Per-graph computations are deterministic given the global seed (random
streams are keyed by canonical form), so worker count and completion order
never change the output files.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .datastore import DatasetRow, QaoaResultRow, build_dataset_row
from .graphs import Graph, decode_graph6, encode_graph6
from .qaoa import maxcut_bruteforce, run_depth_series
from .structure import structure_profile
from .symmetry import automorphism_group

__all__ = ["resolve_workers", "dataset_rows", "qaoa_result_rows"]


def resolve_workers(requested: int | None = None) -> int:
    """Worker count: explicit argument, else QGL_WORKERS, else all cores."""
    if requested is not None and requested > 0:
        return requested
    env = os.environ.get("QGL_WORKERS", "")
    if env.strip():
        value = int(env)
        if value > 0:
            return value
    return os.cpu_count() or 1


def _props_task(args: tuple[str, int]) -> DatasetRow:
    text, graph_id = args
    g = decode_graph6(text).with_id(graph_id)
    return build_dataset_row(g, structure_profile(g), automorphism_group(g))


def _qaoa_task(args: tuple[str, int, int, int, int]) -> list[QaoaResultRow]:
    text, graph_id, pmax, starts, seed = args
    g = decode_graph6(text).with_id(graph_id)
    mc = maxcut_bruteforce(g)
    outcomes = run_depth_series(g, pmax, starts=starts, seed=seed)
    return [QaoaResultRow.from_outcome(g, mc, o, starts, seed) for o in outcomes]


def _run(task, jobs, workers: int):
    if workers <= 1 or len(jobs) <= 1:
        return [task(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(task, jobs, chunksize=max(1, len(jobs) // (workers * 8))))


def dataset_rows(graphs: list[Graph], workers: int | None = None) -> list[DatasetRow]:
    """Structure + symmetry rows for a batch of graphs (sorted by id)."""
    jobs = [(encode_graph6(g), g.id) for g in graphs]
    rows = _run(_props_task, jobs, resolve_workers(workers))
    return sorted(rows, key=lambda r: r.graph_id)


def qaoa_result_rows(graphs: list[Graph], pmax: int, starts: int, seed: int,
                     workers: int | None = None) -> list[QaoaResultRow]:
    """Depth 0..pmax QAOA rows for a batch of graphs (sorted by id, then p)."""
    jobs = [(encode_graph6(g), g.id, pmax, starts, seed) for g in graphs]
    nested = _run(_qaoa_task, jobs, resolve_workers(workers))
    return sorted((row for rows in nested for row in rows), key=lambda r: (r.graph_id, r.p))
