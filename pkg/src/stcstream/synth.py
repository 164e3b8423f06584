"""Synthetic temporal edge streams with power-law contact frequencies.

Node pairs are drawn uniformly; each drawn pair receives a Pareto-distributed
number of contacts clustered around a random home time, so a few ties are
heavy and bursty while most are light, which is the shape real contact data
tends to have.
"""

from __future__ import annotations

import random
from typing import IO

from .temporal import TemporalEdge


def generate_stream(
    n_nodes: int,
    n_edges: int,
    t_max: int = 1000,
    alpha: float = 2.0,
    burst: float = 0.1,
    durations: bool = False,
    seed: int = 0,
) -> list[TemporalEdge]:
    """Generate a chronologically sorted stream; deterministic per seed.

    ``alpha`` is the Pareto shape of per-pair contact counts; ``burst``
    scales how tightly a pair's contacts cluster (fraction of ``t_max``).
    """
    if n_edges < 0:
        raise ValueError("edge count must be non-negative")
    if n_edges > 0 and n_nodes < 2:
        raise ValueError("need at least two nodes to place edges")
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    if alpha <= 0 or burst < 0:
        raise ValueError("alpha must be positive and burst non-negative")
    rng = random.Random(seed)
    out: list[TemporalEdge] = []
    spread = max(1.0, burst * t_max)
    remaining = n_edges
    while remaining > 0:
        u = rng.randrange(n_nodes)
        v = rng.randrange(n_nodes)
        if u == v:
            continue
        count = min(remaining, max(1, int(rng.paretovariate(alpha))))
        center = rng.randrange(t_max)
        for _ in range(count):
            t = min(max(int(rng.gauss(center, spread)), 0), t_max - 1)
            dur = rng.randint(1, 10) if durations else None
            out.append(TemporalEdge(u, v, t, dur))
        remaining -= count
    out.sort(key=lambda e: (e.t, e.u, e.v))
    return out


def write_stream(edges: list[TemporalEdge], out: IO[str], header: str | None = None) -> None:
    """Write edges as ``u v t [dur]`` lines, with an optional comment header."""
    if header:
        out.write(f"# {header}\n")
    for e in edges:
        if e.dur is None:
            out.write(f"{e.u} {e.v} {e.t}\n")
        else:
            out.write(f"{e.u} {e.v} {e.t} {e.dur}\n")
