"""Streaming tie-strength inference for temporal networks.

Contacts between node pairs are aggregated into a weighted static graph per
sliding time window; labeling its edges strong or weak such that no wedge has
two strong edges reduces to vertex cover on the wedge graph, which a fully
dynamic pricing scheme keeps 2-approximate as windows slide.
"""

from .aggregate import (
    AggregatedGraph,
    EdgeDeleted,
    EdgeInserted,
    WeightChanged,
    edge_key,
    get_weighting,
    phi_decay,
    phi_duration,
    phi_frequency,
)
from .metrics import metrics_report, precision_recall_topk, strong_stats, top_k_edges
from .pricing import DynamicVertexCover
from .static import (
    StrongWeakLabeling,
    exact_mwvc,
    labeling_from_weak,
    stc_exact,
    stc_highdeg,
    stc_matching,
    stc_pricing,
    write_ilp,
)
from .stream import IterationStats, WindowResult, run_stream
from .synth import generate_stream, write_stream
from .temporal import (
    TemporalEdge,
    TimeWindow,
    WindowBuffer,
    WindowDelta,
    iter_edges,
    parse_edge,
)
from .wedge import (
    DecWeight,
    DelEdge,
    IncWeight,
    InsEdge,
    WedgeGraph,
    WedgeUpdater,
    build_wedge_graph,
    iter_wedges,
    wedge_edge,
)

__version__ = "0.1.0"

__all__ = [
    "AggregatedGraph",
    "DecWeight",
    "DelEdge",
    "DynamicVertexCover",
    "EdgeDeleted",
    "EdgeInserted",
    "IncWeight",
    "InsEdge",
    "IterationStats",
    "StrongWeakLabeling",
    "TemporalEdge",
    "TimeWindow",
    "WedgeGraph",
    "WedgeUpdater",
    "WeightChanged",
    "WindowBuffer",
    "WindowDelta",
    "WindowResult",
    "build_wedge_graph",
    "edge_key",
    "exact_mwvc",
    "generate_stream",
    "get_weighting",
    "iter_edges",
    "iter_wedges",
    "labeling_from_weak",
    "metrics_report",
    "parse_edge",
    "phi_decay",
    "phi_duration",
    "phi_frequency",
    "precision_recall_topk",
    "run_stream",
    "stc_exact",
    "stc_highdeg",
    "stc_matching",
    "stc_pricing",
    "strong_stats",
    "top_k_edges",
    "wedge_edge",
    "write_ilp",
    "write_stream",
]
