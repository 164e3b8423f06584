"""Shared fixtures and independent oracles used across the test suite."""

from __future__ import annotations

import itertools
import random

import pytest

from stcstream import AggregatedGraph, TemporalEdge
from stcstream.pricing import DynamicVertexCover
from stcstream.wedge import WedgeGraph

TOL = 1e-9


def agg_from_pairs(weights: dict, phi=None) -> AggregatedGraph:
    """Build an aggregated graph with given frequency weights.

    Each pair gets `weight` contacts at distinct timestamps, so frequency
    weighting reproduces the requested weights exactly.
    """
    from stcstream import phi_frequency

    edges = []
    t = 0
    for (u, v), w in sorted(weights.items()):
        for _ in range(int(w)):
            edges.append(TemporalEdge(u, v, t))
            t += 1
    edges.sort(key=lambda e: e.t)
    return AggregatedGraph.from_edges(edges, phi or phi_frequency)


@pytest.fixture
def four_node_example() -> AggregatedGraph:
    """Nodes 0..3 with edge weights (0,1)=10, (1,2)=1, (1,3)=1, (2,3)=2.

    The weighted optimum labels (1,2) and (1,3) weak (weight 2); the
    unweighted optimum labels only (0,1) weak.
    """
    return agg_from_pairs({(0, 1): 10, (1, 2): 1, (1, 3): 1, (2, 3): 2})


def count_wedges_triple_loop(agg: AggregatedGraph) -> int:
    """Independent wedge count: scan all node triples directly."""
    nodes = sorted(agg.nodes())
    count = 0
    for center in nodes:
        for x, y in itertools.combinations(sorted(agg.neighbors(center)), 2):
            if not agg.has_edge(x, y):
                count += 1
    return count


def assert_stc_feasible(agg: AggregatedGraph, strong) -> None:
    """No wedge may have both of its edges strong (direct wedge scan)."""
    from stcstream import edge_key

    strong = set(strong)
    for center in sorted(agg.nodes()):
        for x, y in itertools.combinations(sorted(agg.neighbors(center)), 2):
            if agg.has_edge(x, y):
                continue
            assert not (
                edge_key(x, center) in strong and edge_key(center, y) in strong
            ), f"wedge ({center}, {{{x}, {y}}}) has two strong edges"


def assert_partition(agg: AggregatedGraph, labeling) -> None:
    assert labeling.strong | labeling.weak == frozenset(agg.edge_keys())
    assert not (labeling.strong & labeling.weak)


def assert_pricing_invariants(cover: DynamicVertexCover) -> None:
    """Fairness, cover validity, and tightness consistency.

    Price sums are recomputed from the raw prices rather than trusting the
    incrementally maintained values.
    """
    recomputed = {v: 0 for v in cover.graph.weights}
    for (a, b), price in cover.prices():
        assert price >= -TOL, f"negative price on {(a, b)}"
        recomputed[a] += price
        recomputed[b] += price
    for v, s in recomputed.items():
        w = cover.graph.weights[v]
        maintained = cover.price_sum(v)
        assert abs(maintained - s) <= TOL * max(1.0, abs(s)), (
            f"maintained price sum of {v} drifted: {maintained} vs {s}"
        )
        assert s <= w + TOL * max(1.0, abs(w)), f"unfair: s({v})={s} > w={w}"
    tight = {
        v
        for v, s in recomputed.items()
        if s >= cover.graph.weights[v] - TOL * max(1.0, abs(cover.graph.weights[v]))
    }
    assert cover.cover() == tight, "cover is not exactly the tight set"
    for a, b in cover.graph.edges():
        assert a in tight or b in tight, f"edge {(a, b)} uncovered"


def mwvc_by_enumeration(graph: WedgeGraph, unweighted: bool = False):
    """Minimum (weight) vertex cover by full subset enumeration.

    Exponential; only for validating the branch-and-bound solver on tiny
    graphs.
    """
    verts = sorted(v for v in graph.weights if graph.adj[v])
    edges = list(graph.edges())
    best = None
    best_cover = set()
    for r in range(len(verts) + 1):
        for subset in itertools.combinations(verts, r):
            chosen = set(subset)
            if all(a in chosen or b in chosen for a, b in edges):
                weight = (
                    len(chosen)
                    if unweighted
                    else sum(graph.weights[v] for v in subset)
                )
                if best is None or weight < best:
                    best = weight
                    best_cover = chosen
    return best_cover, (best if best is not None else 0)


def random_aggregated_graph(rng: random.Random, n_nodes: int, n_edges: int,
                            max_weight: int = 10) -> AggregatedGraph:
    """Random frequency-weighted aggregated graph with integer weights >= 1."""
    pairs = list(itertools.combinations(range(n_nodes), 2))
    rng.shuffle(pairs)
    weights = {pair: rng.randint(1, max_weight) for pair in pairs[:n_edges]}
    return agg_from_pairs(weights)
