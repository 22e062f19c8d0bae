"""Statistical reductions over completed per-graph results: Pearson
correlations between graph properties and QAOA metrics, subgroup averages,
histogram data, and the averaged-correlation sign summary.

Boolean properties are encoded 1 = true, 0 = false.  A correlation is
undefined (None) whenever either variable has no variance or fewer than
two samples remain; undefined delta ratios are dropped pairwise and the
surviving sample size is recorded per cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "MissingDataError",
    "CorrelationCell",
    "GroupAverageRow",
    "HistogramSpec",
    "PROPERTY_NAMES",
    "METRIC_NAMES",
    "pearson",
    "property_value",
    "metric_value",
    "correlation_table",
    "group_averages",
    "histogram",
    "sign_summary",
]


class MissingDataError(ValueError):
    """A per-graph input is incomplete; the message lists absent graph ids."""


# Column order of the reference correlation tables.  distance_regular here
# is the strict (intersection-array) flag; the weaker distance-degree flag
# is carried in the dataset but not correlated.
PROPERTY_NAMES = (
    "edges",
    "diameter",
    "clique_number",
    "bipartite",
    "eulerian",
    "distance_regular",
    "cut_vertex_count",
    "min_odd_cycle_count",
    "group_size",
    "orbit_count",
)

METRIC_NAMES = ("exp_c", "prob_cmax", "ratio", "delta_ratio")


@dataclass(frozen=True)
class CorrelationCell:
    n: int
    p: int
    property: str
    metric: str
    r: float | None
    sample_size: int


@dataclass(frozen=True)
class GroupAverageRow:
    n: int
    p: int
    flag: str
    polarity: str  # "member" | "non-member"
    count: int
    mean_prob: float
    mean_exp_c: float
    mean_ratio: float
    mean_delta: float | None


@dataclass(frozen=True)
class HistogramSpec:
    metric: str
    bin_edges: tuple[float, ...]
    fractions: dict[str, tuple[float, ...]]  # subgroup label -> normalized bins


def pearson(x, y) -> float | None:
    """Sample Pearson product-moment coefficient, or None if degenerate."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape:
        raise ValueError(f"length mismatch: {x.shape} vs {y.shape}")
    if x.size < 2:
        return None
    # an exactly constant vector has zero variance even when the two-pass
    # formula picks up rounding residue from an inexact mean
    if np.all(x == x[0]) or np.all(y == y[0]):
        return None
    xc = x - x.mean()
    yc = y - y.mean()
    vx = float((xc * xc).mean())
    vy = float((yc * yc).mean())
    if vx == 0.0 or vy == 0.0:
        return None
    return float((xc * yc).mean() / math.sqrt(vx * vy))


def property_value(row, name: str) -> float:
    """Numeric encoding of one dataset-row property (booleans become 0/1)."""
    if name == "distance_regular":
        return float(row.distance_regular_strict)
    value = getattr(row, name)
    return float(value)


def metric_value(outcome, name: str) -> float | None:
    return getattr(outcome, name)


def _paired(rows, outcomes, n: int, p: int):
    """Match rows to outcomes by graph id; raise if either side is missing."""
    row_map = {row.graph_id: row for row in rows if row.n == n}
    out_map = {o.graph_id: o for o in outcomes if o.p == p}
    missing = sorted(set(row_map) ^ set(out_map))
    if missing:
        raise MissingDataError(f"graphs present on only one side for n={n}, p={p}: {missing}")
    if not row_map:
        raise MissingDataError(f"no graphs with n={n}")
    ids = sorted(row_map)
    return [(row_map[i], out_map[i]) for i in ids]


def correlation_table(rows, outcomes, n: int, p: int) -> list[CorrelationCell]:
    """One cell per (property, metric) over every enumerated graph of size n."""
    pairs = _paired(rows, outcomes, n, p)
    cells = []
    for prop in PROPERTY_NAMES:
        xs = [property_value(row, prop) for row, _ in pairs]
        for metric in METRIC_NAMES:
            ys = [metric_value(o, metric) for _, o in pairs]
            keep = [(x, y) for x, y in zip(xs, ys) if y is not None]
            if keep:
                r = pearson([k[0] for k in keep], [k[1] for k in keep])
            else:
                r = None
            cells.append(CorrelationCell(n, p, prop, metric, r, len(keep)))
    return cells


def _mean(values) -> float | None:
    values = [v for v in values if v is not None]
    return float(np.mean(values)) if values else None


def group_averages(rows, outcomes, n: int, p: int, flag: str) -> tuple[GroupAverageRow, GroupAverageRow]:
    """Arithmetic metric means for the flag subgroup and its complement."""
    if flag not in ("bipartite", "eulerian", "distance_regular"):
        raise ValueError(f"unsupported subgroup flag {flag!r}")
    pairs = _paired(rows, outcomes, n, p)
    out = []
    for polarity, keep in (("member", True), ("non-member", False)):
        sub = [o for row, o in pairs if bool(property_value(row, flag)) is keep]
        out.append(GroupAverageRow(
            n=n,
            p=p,
            flag=flag,
            polarity=polarity,
            count=len(sub),
            mean_prob=_mean(o.prob_cmax for o in sub),
            mean_exp_c=_mean(o.exp_c for o in sub),
            mean_ratio=_mean(o.ratio for o in sub),
            mean_delta=_mean(o.delta_ratio for o in sub),
        ))
    return out[0], out[1]


def histogram(rows, outcomes, n: int, p: int, flag: str, metric: str = "prob_cmax",
              bins: int = 20, value_range: tuple[float, float] = (0.0, 1.0)) -> HistogramSpec:
    """Per-subgroup bin fractions of one metric (final bin right-closed)."""
    if bins < 1:
        raise ValueError(f"bins must be >= 1, got {bins}")
    pairs = _paired(rows, outcomes, n, p)
    edges = np.linspace(value_range[0], value_range[1], bins + 1)
    fractions: dict[str, tuple[float, ...]] = {}
    for polarity, keep in (("member", True), ("non-member", False)):
        values = [metric_value(o, metric) for row, o in pairs
                  if bool(property_value(row, flag)) is keep]
        values = [v for v in values if v is not None]
        counts, _ = np.histogram(values, bins=edges)
        total = counts.sum()
        fractions[polarity] = tuple((counts / total) if total else counts.astype(float))
    return HistogramSpec(metric=metric, bin_edges=tuple(edges), fractions=fractions)


def sign_summary(cells) -> dict[tuple[str, str], str]:
    """Symbol per (property, metric): the mean r over depths 1..3.

    "+" for mean >= 0.1, "-" for mean <= -0.1, "" inside (-0.1, 0.1).
    Undefined cells are excluded from the mean; an all-undefined group is
    blank.
    """
    by_key: dict[tuple[str, str], list[float]] = {}
    for cell in cells:
        if cell.p < 1 or cell.p > 3:
            continue
        if cell.r is not None:
            by_key.setdefault((cell.property, cell.metric), []).append(cell.r)
    out = {}
    for prop in PROPERTY_NAMES:
        for metric in METRIC_NAMES:
            rs = by_key.get((prop, metric), [])
            if not rs:
                out[(prop, metric)] = ""
                continue
            mean = float(np.mean(rs))
            out[(prop, metric)] = "+" if mean >= 0.1 else ("-" if mean <= -0.1 else "")
    return out
