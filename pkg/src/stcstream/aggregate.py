"""Aggregated-graph maintenance under pluggable tie-strength weightings.

Collapsing all contacts between a node pair into one weighted edge turns the
temporal stream into a static graph.  The weight of an edge is always
``phi(contacts)`` for the configured weighting; an edge exists exactly while
its contact list is non-empty (a zero-weight edge with contacts stays).
"""

from __future__ import annotations

import math
from bisect import insort
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ConfigError, ConsistencyError
from .temporal import TemporalEdge, WindowDelta

Contact = tuple[int, "int | None"]  # (timestamp, optional duration)
EdgeKey = tuple[int, int]
Weight = "int | float"


def edge_key(u: int, v: int) -> EdgeKey:
    return (u, v) if u < v else (v, u)


def phi_frequency(contacts: Sequence[Contact]) -> int:
    """Number of contacts between the endpoints."""
    return len(contacts)


def phi_decay(contacts: Sequence[Contact]) -> float:
    """Sum of exp(-gap) over consecutive contact gaps.

    Contacts must be in chronological order; fewer than two contacts give 0.
    Recency of repeated contact therefore drives the weight: a burst of
    back-to-back contacts counts almost fully, long gaps contribute nothing.
    """
    if len(contacts) < 2:
        return 0.0
    return sum(
        math.exp(-(contacts[i + 1][0] - contacts[i][0]))
        for i in range(len(contacts) - 1)
    )


def phi_duration(contacts: Sequence[Contact]) -> int:
    """Total contact duration; every contact must carry one."""
    total = 0
    for _, dur in contacts:
        if dur is None:
            raise ConfigError("duration weighting requires a duration on every contact")
        total += dur
    return total


WEIGHTINGS: dict[str, Callable[[Sequence[Contact]], "int | float"]] = {
    "freq": phi_frequency,
    "frequency": phi_frequency,
    "decay": phi_decay,
    "duration": phi_duration,
}


def get_weighting(name: str) -> Callable[[Sequence[Contact]], "int | float"]:
    try:
        return WEIGHTINGS[name]
    except KeyError:
        raise ConfigError(
            f"unknown weighting {name!r}; choose one of freq, decay, duration"
        ) from None


@dataclass(frozen=True)
class EdgeInserted:
    u: int
    v: int
    weight: "int | float"


@dataclass(frozen=True)
class EdgeDeleted:
    u: int
    v: int


@dataclass(frozen=True)
class WeightChanged:
    u: int
    v: int
    old: "int | float"
    new: "int | float"


AggEvent = "EdgeInserted | EdgeDeleted | WeightChanged"


class AggregatedGraph:
    """Weighted static view of the contacts currently in scope.

    Per-edge contact lists are kept in chronological order and each edge's
    stored weight is recomputed from the full list whenever it changes, so
    non-linear weightings stay exact.
    """

    def __init__(self, phi: Callable[[Sequence[Contact]], "int | float"] = phi_frequency):
        self.phi = phi
        self._contacts: dict[EdgeKey, list[Contact]] = {}
        self._weights: dict[EdgeKey, "int | float"] = {}
        self._adj: dict[int, set[int]] = {}

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[TemporalEdge],
        phi: Callable[[Sequence[Contact]], "int | float"] = phi_frequency,
    ) -> "AggregatedGraph":
        """Aggregate a whole stream at once."""
        graph = cls(phi)
        for e in edges:
            graph._contacts.setdefault(e.key, []).append((e.t, e.dur))
        for key, contacts in graph._contacts.items():
            contacts.sort(key=lambda c: c[0])
            graph._weights[key] = phi(contacts)
            graph._adj.setdefault(key[0], set()).add(key[1])
            graph._adj.setdefault(key[1], set()).add(key[0])
        return graph

    # -- read access ------------------------------------------------------

    @property
    def weights(self) -> dict[EdgeKey, "int | float"]:
        """Edge key to weight mapping (treat as read-only)."""
        return self._weights

    @property
    def n_edges(self) -> int:
        return len(self._weights)

    def edge_keys(self):
        return self._weights.keys()

    def items(self):
        return self._weights.items()

    def weight(self, u: int, v: int) -> "int | float":
        return self._weights[edge_key(u, v)]

    def contacts(self, u: int, v: int) -> list[Contact]:
        return list(self._contacts[edge_key(u, v)])

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self._weights

    def neighbors(self, v: int) -> set[int]:
        return self._adj.get(v, set())

    def degree(self, v: int) -> int:
        return len(self._adj.get(v, ()))

    def nodes(self):
        return self._adj.keys()

    def max_degree(self) -> int:
        return max((len(s) for s in self._adj.values()), default=0)

    # -- mutation ---------------------------------------------------------

    def apply_window_delta(self, delta: WindowDelta) -> list:
        """Apply one window advance and report the net per-edge changes.

        Contact removals are applied before additions; an edge that both
        loses and gains contacts nets to a single weight change instead of a
        delete/insert pair.  Event order in the result: deletions, weight
        changes, insertions, each sorted by edge key.
        """
        before: dict[EdgeKey, "int | float | None"] = {}
        for e in delta.expired:
            contacts = self._contacts.get(e.key)
            if not contacts:
                raise ConsistencyError(f"expiring contact on missing edge {e.key}")
            if e.key not in before:
                before[e.key] = self._weights[e.key]
            try:
                contacts.remove((e.t, e.dur))
            except ValueError:
                raise ConsistencyError(
                    f"contact (t={e.t}, dur={e.dur}) not present on edge {e.key}"
                ) from None
        for e in delta.arrived:
            if e.key not in before:
                before[e.key] = self._weights.get(e.key)
            contacts = self._contacts.setdefault(e.key, [])
            insort(contacts, (e.t, e.dur), key=lambda c: c[0])

        deleted, changed, inserted = [], [], []
        for key in sorted(before):
            old = before[key]
            contacts = self._contacts.get(key)
            if contacts:
                new = self.phi(contacts)
                if old is None:
                    self._weights[key] = new
                    self._adj.setdefault(key[0], set()).add(key[1])
                    self._adj.setdefault(key[1], set()).add(key[0])
                    inserted.append(EdgeInserted(key[0], key[1], new))
                elif new != old:
                    self._weights[key] = new
                    changed.append(WeightChanged(key[0], key[1], old, new))
            else:
                self._contacts.pop(key, None)
                if old is None:
                    raise ConsistencyError(f"edge {key} touched but never existed")
                del self._weights[key]
                for a, b in (key, key[::-1]):
                    self._adj[a].discard(b)
                    if not self._adj[a]:
                        del self._adj[a]
                deleted.append(EdgeDeleted(key[0], key[1]))
        return deleted + changed + inserted
