"""Static solvers for strong-weak edge labelings on a fixed aggregated graph.

All solvers reduce to vertex cover on the wedge graph: the covered wedge
vertices are the weak edges, so no wedge keeps two strong edges.  Available
routes are the weighted pricing 2-approximation, an exact branch-and-bound
for desk-scale instances, the unweighted matching and highest-degree greedy
baselines, and an LP-format export of the integer program for external
solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

from .aggregate import AggregatedGraph, EdgeKey, edge_key
from .errors import CapExceededError
from .pricing import DynamicVertexCover
from .wedge import WedgeGraph, build_wedge_graph, iter_wedges


@dataclass(frozen=True)
class StrongWeakLabeling:
    """Partition of the aggregated edges into strong and weak sets."""

    strong: frozenset[EdgeKey]
    weak: frozenset[EdgeKey]
    strong_weight: "int | float"
    weak_weight: "int | float"

    @property
    def n_strong(self) -> int:
        return len(self.strong)

    @property
    def n_weak(self) -> int:
        return len(self.weak)


def labeling_from_weak(agg: AggregatedGraph, weak_keys) -> StrongWeakLabeling:
    weak = frozenset(weak_keys)
    strong = frozenset(agg.edge_keys()) - weak
    return StrongWeakLabeling(
        strong=strong,
        weak=weak,
        strong_weight=sum(agg.weights[k] for k in sorted(strong)),
        weak_weight=sum(agg.weights[k] for k in sorted(weak)),
    )


def stc_pricing(agg: AggregatedGraph) -> StrongWeakLabeling:
    """Weighted 2-approximation: price the wedge graph, weak = tight vertices.

    The weak weight is at most twice the exact minimum.  Edges are processed
    in canonical order, so the result is deterministic.
    """
    wedge = build_wedge_graph(agg)
    cover = DynamicVertexCover(wedge)
    cover.update(sorted(wedge.edges()))
    return labeling_from_weak(agg, cover.cover())


def exact_mwvc(
    wedge: WedgeGraph, cap: int = 20, unweighted: bool = False
) -> tuple[set, "int | float"]:
    """Exact minimum (weight) vertex cover by branch and bound.

    Branches on a max-degree endpoint of an uncovered edge: either it joins
    the cover, or all its uncovered neighbors must.  A greedy-matching bound
    prunes (disjoint uncovered edges each cost at least their lighter
    endpoint).  Instances with more than ``cap`` vertices are refused;
    export the integer program instead.
    """
    if len(wedge.weights) > cap:
        raise CapExceededError(
            f"wedge graph has {len(wedge.weights)} vertices, exact cap is {cap}; "
            "use the ILP export for larger instances"
        )
    verts = sorted(v for v in wedge.weights if wedge.adj[v])
    n = len(verts)
    if n == 0:
        return set(), 0
    index = {v: i for i, v in enumerate(verts)}
    wts = [1] * n if unweighted else [wedge.weights[v] for v in verts]
    adjmask = [0] * n
    edges = []
    for a, b in sorted(wedge.edges()):
        i, j = index[a], index[b]
        adjmask[i] |= 1 << j
        adjmask[j] |= 1 << i
        edges.append((i, j))

    best_weight = sum(wts)
    best_mask = (1 << n) - 1

    def lower_bound(cover_mask: int) -> "int | float":
        bound = 0
        used = cover_mask
        for i, j in edges:
            if (used >> i) & 1 or (used >> j) & 1:
                continue
            used |= (1 << i) | (1 << j)
            bound += min(wts[i], wts[j])
        return bound

    def search(cover_mask: int, weight) -> None:
        nonlocal best_weight, best_mask
        if weight + lower_bound(cover_mask) >= best_weight:
            return
        pick = -1
        pick_deg = -1
        for i in range(n):
            if (cover_mask >> i) & 1:
                continue
            open_nbrs = adjmask[i] & ~cover_mask
            if open_nbrs:
                deg = open_nbrs.bit_count()
                if deg > pick_deg:
                    pick_deg = deg
                    pick = i
        if pick < 0:
            best_weight = weight
            best_mask = cover_mask
            return
        search(cover_mask | (1 << pick), weight + wts[pick])
        open_nbrs = adjmask[pick] & ~cover_mask
        added = sum(wts[i] for i in range(n) if (open_nbrs >> i) & 1)
        search(cover_mask | open_nbrs, weight + added)

    search(0, 0)
    cover = {verts[i] for i in range(n) if (best_mask >> i) & 1}
    total = sum(wedge.weights[v] for v in sorted(cover)) if not unweighted else len(cover)
    return cover, total


def stc_exact(
    agg: AggregatedGraph, cap: int = 20, unweighted: bool = False
) -> StrongWeakLabeling:
    """Optimal labeling: minimum weak weight, or minimum weak count if
    ``unweighted``."""
    cover, _ = exact_mwvc(build_wedge_graph(agg), cap=cap, unweighted=unweighted)
    return labeling_from_weak(agg, cover)


def stc_matching(agg: AggregatedGraph) -> StrongWeakLabeling:
    """Unweighted baseline: both endpoints of a greedy maximal matching in
    the wedge graph become weak (a 2-approximate unweighted cover)."""
    wedge = build_wedge_graph(agg)
    matched: set = set()
    for a, b in sorted(wedge.edges()):
        if a not in matched and b not in matched:
            matched.add(a)
            matched.add(b)
    return labeling_from_weak(agg, matched)


def stc_highdeg(agg: AggregatedGraph) -> StrongWeakLabeling:
    """Unweighted baseline: repeatedly move the highest-degree wedge vertex
    (lowest key on ties) into the cover until no wedge edge remains."""
    wedge = build_wedge_graph(agg)
    adj = {v: set(nbrs) for v, nbrs in wedge.adj.items()}
    weak: set = set()
    active = {v for v, nbrs in adj.items() if nbrs}
    while active:
        v = min(active, key=lambda u: (-len(adj[u]), u))
        weak.add(v)
        for x in adj[v]:
            adj[x].discard(v)
            if not adj[x]:
                active.discard(x)
        adj[v] = set()
        active.discard(v)
    return labeling_from_weak(agg, weak)


def _coef(w) -> str:
    return repr(w) if isinstance(w, float) else str(w)


def write_ilp(agg: AggregatedGraph, direction: str, out: TextIO) -> None:
    """Write the labeling problem as an LP-format 0/1 program.

    ``max`` maximizes total strong weight with variables ``x_u_v`` (1 =
    strong) and one ``x + x <= 1`` constraint per wedge; ``min`` minimizes
    total weak weight with variables ``y_u_v`` (1 = weak) and ``>= 1``
    constraints.  Variables and constraints appear in canonical order.
    """
    if direction not in ("max", "min"):
        raise ValueError("direction must be 'max' or 'min'")
    var = "x" if direction == "max" else "y"
    keys = sorted(agg.edge_keys())
    names = {key: f"{var}_{key[0]}_{key[1]}" for key in keys}
    out.write("Maximize\n" if direction == "max" else "Minimize\n")
    terms = " + ".join(f"{_coef(agg.weights[k])} {names[k]}" for k in keys)
    out.write(f" obj: {terms}\n")
    out.write("Subject To\n")
    relation = "<=" if direction == "max" else ">="
    for i, (center, x, y) in enumerate(iter_wedges(agg), start=1):
        left = names[edge_key(x, center)]
        right = names[edge_key(center, y)]
        out.write(f" w{i}: {left} + {right} {relation} 1\n")
    out.write("Bounds\n")
    for key in keys:
        out.write(f" 0 <= {names[key]} <= 1\n")
    out.write("Binary\n")
    if keys:
        out.write(" " + " ".join(names[k] for k in keys) + "\n")
    out.write("End\n")
