"""Evaluation metrics for strong-weak labelings."""

from __future__ import annotations

import warnings
from dataclasses import asdict, dataclass

from .aggregate import AggregatedGraph, EdgeKey
from .static import StrongWeakLabeling


@dataclass(frozen=True)
class StrongStats:
    pct_strong: float
    mean_strong_weight: float
    mean_weak_weight: float
    strong_empty: bool
    weak_empty: bool


@dataclass(frozen=True)
class TopKReport:
    precision: float
    recall: float
    k: int
    hits: int


@dataclass(frozen=True)
class MetricsReport:
    pct_strong: float
    mean_strong_weight: float
    mean_weak_weight: float
    precision: float
    recall: float
    k: int

    def as_dict(self) -> dict:
        return asdict(self)


def strong_stats(agg: AggregatedGraph, labeling: StrongWeakLabeling) -> StrongStats:
    """Share of strong edges and mean weights per class (0 for empty classes)."""
    n = agg.n_edges
    strong, weak = labeling.strong, labeling.weak
    return StrongStats(
        pct_strong=100.0 * len(strong) / n if n else 0.0,
        mean_strong_weight=labeling.strong_weight / len(strong) if strong else 0.0,
        mean_weak_weight=labeling.weak_weight / len(weak) if weak else 0.0,
        strong_empty=not strong,
        weak_empty=not weak,
    )


def top_k_edges(agg: AggregatedGraph, k: int, rank_by: str = "weight") -> list[EdgeKey]:
    """The k best edges, ranked by weight (default) or by endpoint-degree sum.

    Ties at the cut are broken by canonical edge key.  Asking for more edges
    than exist warns and returns them all.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if rank_by == "weight":
        score = lambda key: agg.weights[key]
    elif rank_by == "degree":
        score = lambda key: agg.degree(key[0]) + agg.degree(key[1])
    else:
        raise ValueError("rank_by must be 'weight' or 'degree'")
    keys = sorted(agg.edge_keys(), key=lambda key: (-score(key), key))
    if k > len(keys):
        warnings.warn(
            f"top-k of {k} exceeds the {len(keys)} aggregated edges; using all",
            stacklevel=2,
        )
        k = len(keys)
    return keys[:k]


def precision_recall_topk(
    agg: AggregatedGraph,
    labeling: StrongWeakLabeling,
    k: int,
    rank_by: str = "weight",
) -> TopKReport:
    """How well the strong set recovers the k best edges.

    precision = |top-k intersect strong| / |strong| (0 for an empty strong
    set), recall = |top-k intersect strong| / k.
    """
    top = set(top_k_edges(agg, k, rank_by))
    hits = len(top & labeling.strong)
    return TopKReport(
        precision=hits / len(labeling.strong) if labeling.strong else 0.0,
        recall=hits / len(top) if top else 0.0,
        k=k,
        hits=hits,
    )


def metrics_report(
    agg: AggregatedGraph,
    labeling: StrongWeakLabeling,
    k: int = 100,
    rank_by: str = "weight",
) -> MetricsReport:
    stats = strong_stats(agg, labeling)
    topk = precision_recall_topk(agg, labeling, k, rank_by)
    return MetricsReport(
        pct_strong=stats.pct_strong,
        mean_strong_weight=stats.mean_strong_weight,
        mean_weak_weight=stats.mean_weak_weight,
        precision=topk.precision,
        recall=topk.recall,
        k=topk.k,
    )
