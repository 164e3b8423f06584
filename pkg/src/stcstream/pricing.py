"""Fully dynamic pricing-based 2-approximation of minimum weight vertex cover.

Every edge carries a non-negative price and every vertex the sum of its
incident prices.  Prices are *fair* while no vertex's price sum exceeds its
weight; a vertex is *tight* when the sum equals its weight.  The cover is by
definition the set of tight vertices, and fair prices guarantee its total
weight is at most twice the optimum.

Each mutation re-establishes both fairness and cover validity:

* ``ins_edge``  adds the edge at price zero and repairs it if uncovered.
* ``del_edge``  refunds the edge's price from both endpoints, which may
  untighten them, then repairs their incident edges.
* ``dec_weight`` zeroes all prices incident to the vertex to restore
  fairness, then repairs everything that may have become uncovered.
* ``inc_weight`` never breaks fairness but untightens the vertex, so its
  incident edges are repaired.

Repair means raising each uncovered edge's price by the smaller endpoint
slack, making at least one endpoint tight.  With integer weights all prices
and sums stay integers; with real weights tightness is checked within a
small relative tolerance.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ConsistencyError
from .wedge import (
    DecWeight,
    DelEdge,
    IncWeight,
    InsEdge,
    WedgeEdge,
    WedgeGraph,
    WedgeVertex,
    wedge_edge,
)

REL_TOL = 1e-9


class DynamicVertexCover:
    """Maintains fair prices, per-vertex price sums, and the tight-vertex
    cover of a vertex-weighted graph under edge and weight updates.

    The cover is never stored: membership is derived from tightness, so the
    invariant "in the cover iff tight" holds by construction.  ``examined``
    counts the edges processed by the repair procedure across all operations;
    ``last_op_examined`` holds the count for the most recent operation.
    """

    def __init__(self, graph: WedgeGraph | None = None):
        self.graph = graph if graph is not None else WedgeGraph()
        self._p: dict[WedgeEdge, "int | float"] = {e: 0 for e in self.graph.edges()}
        self._s: dict[WedgeVertex, "int | float"] = {v: 0 for v in self.graph.weights}
        self.examined = 0
        self.last_op_examined = 0

    # -- derived state ------------------------------------------------------

    def is_tight(self, v: WedgeVertex) -> bool:
        w = self.graph.weights[v]
        s = self._s[v]
        if isinstance(w, int) and isinstance(s, int):
            return s >= w
        return s >= w - REL_TOL * max(1.0, abs(w))

    def cover(self) -> set[WedgeVertex]:
        return {v for v in self.graph.weights if self.is_tight(v)}

    def cover_weight(self) -> "int | float":
        return sum(self.graph.weights[v] for v in sorted(self.cover()))

    def snapshot(self) -> tuple[frozenset, "int | float"]:
        cover = frozenset(self.cover())
        return cover, sum(self.graph.weights[v] for v in sorted(cover))

    def price(self, a: WedgeVertex, b: WedgeVertex) -> "int | float":
        return self._p[wedge_edge(a, b)]

    def prices(self):
        return self._p.items()

    def price_sum(self, v: WedgeVertex) -> "int | float":
        return self._s[v]

    # -- vertex lifecycle ----------------------------------------------------

    def add_vertex(self, v: WedgeVertex, w: "int | float") -> None:
        self.graph.add_vertex(v, w)
        self._s[v] = 0

    def remove_vertex(self, v: WedgeVertex) -> None:
        """Remove an isolated vertex; its price sum must have drained to 0."""
        self.graph.remove_vertex(v)
        leftover = self._s.pop(v)
        if leftover and abs(leftover) > REL_TOL:
            raise ConsistencyError(f"removed vertex {v} kept price sum {leftover}")

    # -- operations -----------------------------------------------------------

    def update(self, edges: Iterable[WedgeEdge]) -> None:
        """Repair a batch of possibly uncovered edges.

        Edges with a tight endpoint are skipped; for the rest the price rises
        by the smaller endpoint slack, tightening at least one endpoint.
        """
        for a, b in edges:
            self.examined += 1
            if self.is_tight(a) or self.is_tight(b):
                continue
            amount = min(
                self.graph.weights[a] - self._s[a],
                self.graph.weights[b] - self._s[b],
            )
            self._p[wedge_edge(a, b)] += amount
            self._s[a] += amount
            self._s[b] += amount

    def ins_edge(self, a: WedgeVertex, b: WedgeVertex) -> None:
        before = self.examined
        edge = wedge_edge(a, b)
        self.graph.add_edge(a, b)
        self._p[edge] = 0
        self.update([edge])
        self.last_op_examined = self.examined - before

    def del_edge(self, a: WedgeVertex, b: WedgeVertex) -> None:
        before = self.examined
        edge = wedge_edge(a, b)
        if not self.graph.has_edge(a, b):
            raise ConsistencyError(f"wedge edge {edge} not present")
        price = self._p.pop(edge)
        self.graph.remove_edge(a, b)
        if price:
            self._s[a] -= price
            self._s[b] -= price
        repair = []
        for y in edge:
            for x in sorted(self.graph.adj[y]):
                if not self.is_tight(x):
                    repair.append(wedge_edge(y, x))
        self.update(repair)
        self.last_op_examined = self.examined - before

    def dec_weight(self, v: WedgeVertex, new_w: "int | float") -> None:
        before = self.examined
        old_w = self.graph.weights[v]
        if new_w >= old_w:
            raise ValueError(f"dec_weight({v}) needs a smaller weight, got {new_w}")
        self.graph.set_weight(v, new_w)
        for x in sorted(self.graph.adj[v]):
            edge = wedge_edge(v, x)
            price = self._p[edge]
            if price:
                self._p[edge] = 0
                self._s[v] -= price
                self._s[x] -= price
        repair: set[WedgeEdge] = set()
        for x in sorted(self.graph.adj[v]):
            if self.is_tight(x):
                continue
            repair.add(wedge_edge(v, x))
            for y in self.graph.adj[x]:
                if not self.is_tight(y):
                    repair.add(wedge_edge(x, y))
        self.update(sorted(repair))
        self.last_op_examined = self.examined - before

    def inc_weight(self, v: WedgeVertex, new_w: "int | float") -> None:
        before = self.examined
        old_w = self.graph.weights[v]
        if new_w <= old_w:
            raise ValueError(f"inc_weight({v}) needs a larger weight, got {new_w}")
        was_tight = self.is_tight(v)
        self.graph.set_weight(v, new_w)
        if was_tight:
            repair = [
                wedge_edge(v, x)
                for x in sorted(self.graph.adj[v])
                if not self.is_tight(x)
            ]
            self.update(repair)
        self.last_op_examined = self.examined - before

    # -- request dispatch ------------------------------------------------------

    def apply(self, request) -> None:
        if isinstance(request, InsEdge):
            self.ins_edge(request.a, request.b)
        elif isinstance(request, DelEdge):
            self.del_edge(request.a, request.b)
        elif isinstance(request, IncWeight):
            if request.new_w != self.graph.weights[request.v]:
                self.inc_weight(request.v, request.new_w)
        elif isinstance(request, DecWeight):
            if request.new_w != self.graph.weights[request.v]:
                self.dec_weight(request.v, request.new_w)
        else:
            raise ConsistencyError(f"unknown update request {request!r}")

    def apply_sequence(self, requests: Sequence) -> tuple[frozenset, "int | float"]:
        """Apply requests in order; returns the resulting cover and its weight."""
        for request in requests:
            self.apply(request)
        return self.snapshot()
