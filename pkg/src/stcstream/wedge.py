"""Wedge-graph construction and streaming maintenance.

The wedge graph of an aggregated graph A has one vertex per edge of A
(carrying that edge's weight) and one edge per wedge of A, i.e. per path
x - v - y whose endpoints x, y are not adjacent.  A vertex cover of the
wedge graph is exactly a feasible weak-edge set of A: every wedge keeps at
most one strong edge.

:class:`WedgeUpdater` keeps the wedge graph of a changing aggregated graph
in lockstep by translating each aggregated-graph event into the update
requests consumed by the dynamic cover.  It owns a private mirror of the
aggregated adjacency because events must be translated against the state
*before* the event, while the caller's aggregated graph has already moved on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .aggregate import (
    AggregatedGraph,
    EdgeDeleted,
    EdgeInserted,
    EdgeKey,
    WeightChanged,
    edge_key,
)
from .errors import ConsistencyError

WedgeVertex = EdgeKey  # a wedge-graph vertex is a canonical aggregated edge
WedgeEdge = tuple[WedgeVertex, WedgeVertex]


def wedge_edge(a: WedgeVertex, b: WedgeVertex) -> WedgeEdge:
    """Canonical unordered pair of wedge-graph vertices."""
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class InsEdge:
    a: WedgeVertex
    b: WedgeVertex


@dataclass(frozen=True)
class DelEdge:
    a: WedgeVertex
    b: WedgeVertex


@dataclass(frozen=True)
class IncWeight:
    v: WedgeVertex
    new_w: "int | float"


@dataclass(frozen=True)
class DecWeight:
    v: WedgeVertex
    new_w: "int | float"


UpdateRequest = "InsEdge | DelEdge | IncWeight | DecWeight"


class WedgeGraph:
    """Vertex-weighted graph keyed by canonical aggregated edges.

    Vertices mirror the aggregated edge set one-to-one, isolated vertices
    included, so rebuild comparisons are plain set equality.
    """

    def __init__(self):
        self.weights: dict[WedgeVertex, "int | float"] = {}
        self.adj: dict[WedgeVertex, set[WedgeVertex]] = {}
        self.n_edges = 0
        self._deg_watermark = 0

    def __repr__(self):
        return f"WedgeGraph({len(self.weights)} vertices, {self.n_edges} edges)"

    def add_vertex(self, v: WedgeVertex, w: "int | float") -> None:
        if v in self.weights:
            raise ConsistencyError(f"wedge vertex {v} already present")
        if w < 0:
            raise ValueError("vertex weights must be non-negative")
        self.weights[v] = w
        self.adj[v] = set()

    def remove_vertex(self, v: WedgeVertex) -> None:
        if self.adj[v]:
            raise ConsistencyError(f"wedge vertex {v} still has incident edges")
        del self.adj[v]
        del self.weights[v]

    def set_weight(self, v: WedgeVertex, w: "int | float") -> None:
        if v not in self.weights:
            raise ConsistencyError(f"unknown wedge vertex {v}")
        if w < 0:
            raise ValueError("vertex weights must be non-negative")
        self.weights[v] = w

    def has_edge(self, a: WedgeVertex, b: WedgeVertex) -> bool:
        return b in self.adj.get(a, ())

    def add_edge(self, a: WedgeVertex, b: WedgeVertex) -> None:
        if a not in self.weights or b not in self.weights:
            raise ConsistencyError(f"wedge edge {a}-{b} references unknown vertex")
        if a == b or b in self.adj[a]:
            raise ConsistencyError(f"wedge edge {a}-{b} invalid or already present")
        self.adj[a].add(b)
        self.adj[b].add(a)
        self.n_edges += 1
        self._deg_watermark = max(self._deg_watermark, len(self.adj[a]), len(self.adj[b]))

    def remove_edge(self, a: WedgeVertex, b: WedgeVertex) -> None:
        if not self.has_edge(a, b):
            raise ConsistencyError(f"wedge edge {a}-{b} not present")
        self.adj[a].discard(b)
        self.adj[b].discard(a)
        self.n_edges -= 1

    def degree(self, v: WedgeVertex) -> int:
        return len(self.adj.get(v, ()))

    def max_degree(self) -> int:
        return max((len(s) for s in self.adj.values()), default=0)

    def take_degree_watermark(self) -> int:
        """Largest degree created since the last call; resets the mark."""
        mark, self._deg_watermark = self._deg_watermark, 0
        return mark

    def edges(self) -> Iterator[WedgeEdge]:
        for a, nbrs in self.adj.items():
            for b in nbrs:
                if a < b:
                    yield (a, b)

    def edge_set(self) -> set[WedgeEdge]:
        return set(self.edges())

    def __eq__(self, other):
        if not isinstance(other, WedgeGraph):
            return NotImplemented
        return self.weights == other.weights and self.edge_set() == other.edge_set()


def iter_wedges(agg: AggregatedGraph) -> Iterator[tuple[int, int, int]]:
    """Yield every wedge of the aggregated graph once, as (center, x, y), x < y."""
    for center in sorted(agg.nodes()):
        nbrs = sorted(agg.neighbors(center))
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1 :]:
                if not agg.has_edge(x, y):
                    yield (center, x, y)


def build_wedge_graph(agg: AggregatedGraph) -> WedgeGraph:
    """Construct the wedge graph of an aggregated graph from scratch."""
    graph = WedgeGraph()
    for key, w in agg.items():
        graph.add_vertex(key, w)
    for center, x, y in iter_wedges(agg):
        graph.add_edge(edge_key(x, center), edge_key(center, y))
    return graph


class WedgeUpdater:
    """Translates aggregated-graph events into wedge-graph update requests
    and applies them through a dynamic cover.

    Inserting aggregated edge {p, q} creates a wedge at p for every neighbor
    x of p not adjacent to q (and symmetrically at q), and closes the wedge
    (x, {p, q}) for every common neighbor x, deleting its wedge edge.
    Deleting {p, q} reverses this.  Triangle detection probes the smaller
    neighborhood, so at most min(d(p), d(q)) membership tests are spent.
    """

    def __init__(self, cover):
        self.cover = cover
        self._adj: dict[int, set[int]] = {}
        self._deg_watermark = 0

    def neighbors(self, node: int) -> set[int]:
        return self._adj.get(node, set())

    def degree(self, node: int) -> int:
        return len(self._adj.get(node, ()))

    def take_degree_watermark(self) -> int:
        mark, self._deg_watermark = self._deg_watermark, 0
        return mark

    def apply_event(self, event) -> list:
        """Apply one aggregated-graph event; returns the requests issued."""
        if isinstance(event, EdgeInserted):
            return self._insert(event.u, event.v, event.weight)
        if isinstance(event, EdgeDeleted):
            return self._delete(event.u, event.v)
        if isinstance(event, WeightChanged):
            return self._reweight(event.u, event.v, event.old, event.new)
        raise ConsistencyError(f"unknown event {event!r}")

    def _insert(self, p: int, q: int, weight: "int | float") -> list:
        if q in self._adj.get(p, ()):
            raise ConsistencyError(f"aggregated edge {edge_key(p, q)} already present")
        key = edge_key(p, q)
        np_ = self._adj.get(p, set())
        nq = self._adj.get(q, set())
        requests: list = []
        for x in sorted(np_):
            if q not in self._adj.get(x, ()):
                requests.append(InsEdge(*wedge_edge(edge_key(x, p), key)))
        for x in sorted(nq):
            if p not in self._adj.get(x, ()):
                requests.append(InsEdge(*wedge_edge(edge_key(x, q), key)))
        small, other = (np_, nq) if len(np_) <= len(nq) else (nq, np_)
        for x in sorted(small):
            if x in other:
                requests.append(DelEdge(*wedge_edge(edge_key(x, p), edge_key(x, q))))

        self.cover.add_vertex(key, weight)
        self._adj.setdefault(p, set()).add(q)
        self._adj.setdefault(q, set()).add(p)
        self._deg_watermark = max(
            self._deg_watermark, len(self._adj[p]), len(self._adj[q])
        )
        for r in requests:
            self.cover.apply(r)
        return requests

    def _delete(self, p: int, q: int) -> list:
        if q not in self._adj.get(p, ()):
            raise ConsistencyError(f"aggregated edge {edge_key(p, q)} not present")
        key = edge_key(p, q)
        requests: list = [
            DelEdge(*wedge_edge(key, nbr))
            for nbr in sorted(self.cover.graph.adj[key])
        ]
        np_ = self._adj[p] - {q}
        nq = self._adj[q] - {p}
        small, other = (np_, nq) if len(np_) <= len(nq) else (nq, np_)
        for x in sorted(small):
            if x in other:
                requests.append(InsEdge(*wedge_edge(edge_key(x, p), edge_key(x, q))))

        for a, b in ((p, q), (q, p)):
            self._adj[a].discard(b)
            if not self._adj[a]:
                del self._adj[a]
        for r in requests:
            self.cover.apply(r)
        self.cover.remove_vertex(key)
        return requests

    def _reweight(self, p: int, q: int, old, new) -> list:
        if new == old:
            return []
        key = edge_key(p, q)
        request = IncWeight(key, new) if new > old else DecWeight(key, new)
        self.cover.apply(request)
        return [request]
