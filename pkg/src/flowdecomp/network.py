"""Directed capacitated networks, flows and residual arcs.

Vertices are ``0 .. vertex_count - 1``; edges are identified by their position
in ``Network.edges``. Parallel and antiparallel edges keep distinct ids.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

MAX_CAPACITY = 2**62

FORWARD = "forward"
BACKWARD = "backward"


class NetworkError(ValueError):
    """Raised when a network violates a structural invariant."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class FlowShapeError(ValueError):
    """Per-edge value list does not match the network's edge count."""


class Edge(NamedTuple):
    tail: int
    head: int
    capacity: int


@dataclass(frozen=True)
class Network:
    vertex_count: int
    source: int
    sink: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(Edge(*e) for e in self.edges))
        n = self.vertex_count
        if n < 2:
            raise NetworkError("vertex-count", f"need at least 2 vertices, got {n}")
        for name, v in (("source", self.source), ("sink", self.sink)):
            if not 0 <= v < n:
                raise NetworkError("id-range", f"{name} {v} outside [0, {n})")
        if self.source == self.sink:
            raise NetworkError("source-is-sink", "source and sink coincide")
        for i, (u, v, c) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise NetworkError("id-range", f"edge {i} endpoint outside [0, {n})")
            if u == v:
                raise NetworkError("self-loop", f"edge {i} is a self-loop at {u}")
            if isinstance(c, bool) or not isinstance(c, int):
                raise NetworkError("capacity-type", f"edge {i} capacity {c!r} is not an integer")
            if c <= 0:
                raise NetworkError("capacity-zero", f"edge {i} capacity {c} is not positive")
            if c > MAX_CAPACITY:
                raise NetworkError("capacity-bound", f"edge {i} capacity {c} exceeds 2^62")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, e in enumerate(self.edges):
            out[e.tail].append(i)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_edges(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, e in enumerate(self.edges):
            inc[e.head].append(i)
        return tuple(tuple(x) for x in inc)

    def cut_capacity(self, source_side) -> int:
        S = set(source_side)
        return sum(e.capacity for e in self.edges if e.tail in S and e.head not in S)


@dataclass(frozen=True)
class Flow:
    network: Network = field(repr=False, compare=False)
    values: tuple[int, ...]

    def __getitem__(self, edge_id: int) -> int:
        return self.values[edge_id]

    def __len__(self):
        return len(self.values)


class Violation(NamedTuple):
    kind: str  # "capacity" or "conservation"
    where: int  # edge id for capacity, vertex id for conservation
    detail: str


class InvalidFlow(ValueError):
    def __init__(self, violations: list[Violation]):
        self.violations = violations
        super().__init__("; ".join(v.detail for v in violations))


class ResidualArc(NamedTuple):
    tail: int
    head: int
    origin_edge: int
    direction: str

    def capacity(self, flow: Flow) -> int:
        c = flow.network.edges[self.origin_edge].capacity
        f = flow.values[self.origin_edge]
        return c - f if self.direction == FORWARD else f


def flow_violations(network: Network, values: Sequence[int]) -> list[Violation]:
    """Every capacity and conservation violation of ``values``, edges first."""
    if len(values) != network.edge_count:
        raise FlowShapeError(
            f"expected {network.edge_count} edge values, got {len(values)}"
        )
    out: list[Violation] = []
    balance = [0] * network.vertex_count
    for i, (e, f) in enumerate(zip(network.edges, values)):
        if isinstance(f, bool) or not isinstance(f, int):
            raise FlowShapeError(f"edge {i} value {f!r} is not an integer")
        if f < 0 or f > e.capacity:
            out.append(Violation("capacity", i, f"edge {i}: flow {f} outside [0, {e.capacity}]"))
        balance[e.head] += f
        balance[e.tail] -= f
    for v, b in enumerate(balance):
        if v in (network.source, network.sink) or b == 0:
            continue
        inflow = sum(values[i] for i in network.in_edges[v])
        out.append(
            Violation("conservation", v, f"vertex {v}: inflow {inflow}, outflow {inflow - b}")
        )
    return out


def validate_flow(network: Network, values: Sequence[int]) -> Flow:
    """Return a `Flow`, or raise `InvalidFlow` listing every violated axiom."""
    violations = flow_violations(network, values)
    if violations:
        raise InvalidFlow(violations)
    return Flow(network, tuple(values))


def zero_flow(network: Network) -> Flow:
    return Flow(network, (0,) * network.edge_count)


def flow_value(flow: Flow) -> int:
    net = flow.network
    s = net.source
    return sum(flow.values[i] for i in net.out_edges[s]) - sum(
        flow.values[i] for i in net.in_edges[s]
    )


def residual_arcs(flow: Flow) -> list[ResidualArc]:
    """Residual arcs ordered by origin edge id, forward before backward."""
    arcs = []
    for i, (u, v, c) in enumerate(flow.network.edges):
        f = flow.values[i]
        if f < c:
            arcs.append(ResidualArc(u, v, i, FORWARD))
        if f > 0:
            arcs.append(ResidualArc(v, u, i, BACKWARD))
    return arcs


def residual_adjacency(flow: Flow) -> list[list[ResidualArc]]:
    adj: list[list[ResidualArc]] = [[] for _ in range(flow.network.vertex_count)]
    for arc in residual_arcs(flow):
        adj[arc.tail].append(arc)
    return adj


def residual_reachable(flow: Flow, start: int, reverse: bool = False) -> set[int]:
    """Vertices reachable from ``start`` in the residual network.

    With ``reverse=True``, the vertices that can reach ``start`` instead.
    """
    adj: list[list[int]] = [[] for _ in range(flow.network.vertex_count)]
    for a in residual_arcs(flow):
        if reverse:
            adj[a.head].append(a.tail)
        else:
            adj[a.tail].append(a.head)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen
