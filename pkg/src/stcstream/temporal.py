"""Temporal edge parsing and the sliding-window stream buffer.

The input is a chronologically sorted stream of undirected contacts
``u v t [dur]``.  A :class:`WindowBuffer` holds exactly the contacts whose
timestamp lies in the current closed window ``[t_start, t_start + delta - 1]``
and, on each advance, reports which contacts expired and which arrived.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, StreamOrderError


@dataclass(frozen=True)
class TemporalEdge:
    """One contact between two nodes at an integer timestamp.

    Endpoints are stored canonically with ``u < v``; self-loops are rejected.
    ``dur`` is an optional contact duration in the same abstract time unit.
    """

    u: int
    v: int
    t: int
    dur: int | None = None

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self-loop at node {self.u}")
        if self.u < 0 or self.v < 0:
            raise ValueError("node ids must be non-negative")
        if self.t < 0:
            raise ValueError("timestamps must be non-negative")
        if self.dur is not None and self.dur < 0:
            raise ValueError("durations must be non-negative")
        if self.u > self.v:
            u, v = self.u, self.v
            object.__setattr__(self, "u", v)
            object.__setattr__(self, "v", u)

    @property
    def key(self) -> tuple[int, int]:
        return (self.u, self.v)


def parse_edge(line: str, lineno: int | None = None) -> TemporalEdge:
    """Parse one whitespace-separated ``u v t [dur]`` line."""
    where = f"line {lineno}: " if lineno is not None else ""
    parts = line.split()
    if len(parts) not in (3, 4):
        raise ParseError(f"{where}expected 'u v t [dur]', got {line.strip()!r}")
    try:
        fields = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"{where}non-integer field in {line.strip()!r}") from None
    try:
        return TemporalEdge(*fields)
    except ValueError as exc:
        raise ParseError(f"{where}{exc}") from None


def iter_edges(lines: Iterable[str]) -> Iterator[TemporalEdge]:
    """Yield parsed edges, skipping blank lines and ``#`` comments."""
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield parse_edge(stripped, lineno)


@dataclass(frozen=True)
class TimeWindow:
    """Closed timestamp interval ``[t_start, t_start + delta - 1]``."""

    t_start: int
    delta: int

    def __post_init__(self):
        if self.delta < 1:
            raise ValueError("window length must be at least 1")
        if self.t_start < 0:
            raise ValueError("window start must be non-negative")

    @property
    def t_end(self) -> int:
        return self.t_start + self.delta - 1

    def contains(self, t: int) -> bool:
        return self.t_start <= t <= self.t_end


@dataclass(frozen=True)
class WindowDelta:
    """Contacts that left and entered the window on one advance.

    Immutable, so deltas can be handed across pipeline stages freely.
    """

    expired: tuple[TemporalEdge, ...]
    arrived: tuple[TemporalEdge, ...]

    def __bool__(self) -> bool:
        return bool(self.expired or self.arrived)


class WindowBuffer:
    """FIFO over a chronologically sorted edge stream.

    The buffer is valid only because the input is sorted, which is enforced:
    a timestamp smaller than the last one seen raises
    :class:`~stcstream.errors.StreamOrderError`.  ``stride`` must not exceed
    ``delta``, otherwise contacts could fall in the gap between consecutive
    windows and never arrive.
    """

    def __init__(self, edges: Iterable[TemporalEdge], delta: int, stride: int = 1):
        if delta < 1:
            raise ValueError("delta must be at least 1")
        if not 1 <= stride <= delta:
            raise ValueError("stride must be in [1, delta]")
        self.delta = delta
        self.stride = stride
        self.window: TimeWindow | None = None
        self._source = iter(edges)
        self._buf: deque[TemporalEdge] = deque()
        self._pending: TemporalEdge | None = None
        self._exhausted = False
        self._last_t = -1

    def _pull(self) -> TemporalEdge | None:
        if self._pending is not None:
            edge, self._pending = self._pending, None
            return edge
        if self._exhausted:
            return None
        edge = next(self._source, None)
        if edge is None:
            self._exhausted = True
            return None
        if edge.t < self._last_t:
            raise StreamOrderError(
                f"out-of-order edge ({edge.u}, {edge.v}, {edge.t}) after t={self._last_t}"
            )
        self._last_t = edge.t
        return edge

    def _fill(self, t_end: int) -> list[TemporalEdge]:
        arrived = []
        while True:
            edge = self._pull()
            if edge is None:
                break
            if edge.t > t_end:
                self._pending = edge
                break
            self._buf.append(edge)
            arrived.append(edge)
        return arrived

    def open(self) -> WindowDelta | None:
        """Fill the first window, anchored at the earliest timestamp.

        Returns the initial delta (no expiries), or None for an empty stream.
        """
        if self.window is not None:
            raise ValueError("buffer already opened")
        first = self._pull()
        if first is None:
            return None
        self.window = TimeWindow(first.t, self.delta)
        self._buf.append(first)
        arrived = [first] + self._fill(self.window.t_end)
        return WindowDelta((), tuple(arrived))

    @property
    def has_more(self) -> bool:
        """True if at least one later window still gains a contact."""
        return self._pending is not None

    def advance(self, new_t_start: int | None = None) -> WindowDelta:
        """Slide the window forward (by ``stride`` unless given explicitly)."""
        if self.window is None:
            raise ValueError("buffer not opened")
        if new_t_start is None:
            new_t_start = self.window.t_start + self.stride
        if not self.window.t_start < new_t_start <= self.window.t_start + self.delta:
            raise ValueError(
                f"new window start {new_t_start} must move forward by 1..delta"
            )
        self.window = TimeWindow(new_t_start, self.delta)
        expired = []
        while self._buf and self._buf[0].t < new_t_start:
            expired.append(self._buf.popleft())
        arrived = self._fill(self.window.t_end)
        return WindowDelta(tuple(expired), tuple(arrived))

    def edges(self) -> list[TemporalEdge]:
        """Snapshot of the contacts currently in the window."""
        return list(self._buf)

    def __len__(self) -> int:
        return len(self._buf)
