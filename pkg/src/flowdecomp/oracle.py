"""Brute-force ground truth for small networks.

Two independent oracles, one per side of the duality:

* the flow side enumerates integral flows and classifies every edge by its
  range over all maximum flows;
* the cut side scans every vertex set S with s in S, t not in S.

Integral enumeration is enough to decide the edge classes. The maximum flows
form a polytope with integral vertices. An edge is always saturated (or
always empty) over the polytope iff it is over its vertices, and if one
maximum flow has f(e) > 0 and another has f(e) < c(e), their midpoint has
0 < f(e) < c(e). So min/max of f(e) over integral maximum flows decide the
class.

Nothing here imports the solver, the decomposition or the cut enumerator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Protocol

from .network import Flow, Network

FLOW_GUARD = 10**8
CUT_GUARD = 2**15


class SizeGuardError(ValueError):
    def __init__(self, what: str, size: int, bound: int):
        super().__init__(f"{what}: search space {size} exceeds bound {bound}")
        self.size = size
        self.bound = bound


class Cancelled(RuntimeError):
    pass


class CancelToken(Protocol):
    def is_set(self) -> bool: ...


def _check_flow_guard(network: Network) -> None:
    size = math.prod(e.capacity + 1 for e in network.edges)
    if size > FLOW_GUARD:
        raise SizeGuardError("integral flow enumeration", size, FLOW_GUARD)


def _check_cut_guard(network: Network) -> None:
    size = 2 ** (network.vertex_count - 2)
    if size > CUT_GUARD:
        raise SizeGuardError("cut enumeration", size, CUT_GUARD)


def _edge_order(network: Network) -> list[int]:
    """Edges grouped so each inner vertex is closed off as early as possible."""
    n = network.vertex_count
    seen_v = [False] * n
    order: list[int] = []
    taken = [False] * network.edge_count
    queue = [network.source]
    seen_v[network.source] = True
    rest = [v for v in range(n) if v != network.source]
    while queue or rest:
        if not queue:
            v = rest.pop(0)
            if seen_v[v]:
                continue
            seen_v[v] = True
            queue.append(v)
        v = queue.pop(0)
        for i in network.out_edges[v] + network.in_edges[v]:
            if not taken[i]:
                taken[i] = True
                order.append(i)
                w = network.edges[i].head if network.edges[i].tail == v else network.edges[i].tail
                if not seen_v[w]:
                    seen_v[w] = True
                    queue.append(w)
    return order


def _search(network: Network, bar: list[int] | None, cancel: CancelToken | None) -> Iterator[tuple[int, ...]]:
    """DFS over per-edge integer values with conservation pruning.

    With ``bar`` set, branches whose value bound falls below ``bar[0]`` are
    cut; the caller may raise ``bar[0]`` between yields.
    """
    n, s, t = network.vertex_count, network.source, network.sink
    order = _edge_order(network)
    m = len(order)
    inflow = [0] * n
    outflow = [0] * n
    in_rem = [0] * n
    out_rem = [0] * n
    for e in network.edges:
        out_rem[e.tail] += e.capacity
        in_rem[e.head] += e.capacity
    values = [0] * network.edge_count
    ticks = 0

    def feasible(v: int) -> bool:
        if v == s or v == t:
            return True
        return inflow[v] + in_rem[v] >= outflow[v] and outflow[v] + out_rem[v] >= inflow[v]

    def value_bound() -> int:
        return outflow[s] + out_rem[s] - inflow[s]

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        nonlocal ticks
        ticks += 1
        if cancel is not None and ticks % 4096 == 0 and cancel.is_set():
            raise Cancelled("oracle enumeration cancelled")
        if k == m:
            yield tuple(values)
            return
        i = order[k]
        u, v, c = network.edges[i]
        out_rem[u] -= c
        in_rem[v] -= c
        for f in range(c + 1):
            values[i] = f
            outflow[u] += f
            inflow[v] += f
            if feasible(u) and feasible(v) and (bar is None or value_bound() >= bar[0]):
                yield from rec(k + 1)
            outflow[u] -= f
            inflow[v] -= f
        values[i] = 0
        out_rem[u] += c
        in_rem[v] += c

    yield from rec(0)


def _value(network: Network, values: tuple[int, ...]) -> int:
    s = network.source
    return sum(values[i] for i in network.out_edges[s]) - sum(values[i] for i in network.in_edges[s])


def enumerate_integral_flows(network: Network, cancel: CancelToken | None = None) -> Iterator[Flow]:
    """Every integral flow of ``network``, each exactly once."""
    _check_flow_guard(network)
    for values in _search(network, None, cancel):
        yield Flow(network, values)


def integral_max_flows(network: Network, cancel: CancelToken | None = None) -> tuple[int, list[tuple[int, ...]]]:
    """Maximum value and every integral flow attaining it."""
    _check_flow_guard(network)
    bar = [0]
    best_flows: list[tuple[int, ...]] = []
    for values in _search(network, bar, cancel):
        val = _value(network, values)
        if val > bar[0]:
            bar[0], best_flows = val, [values]
        elif val == bar[0]:
            best_flows.append(values)
    return bar[0], best_flows


@dataclass(frozen=True)
class OracleReport:
    max_flow_value: int
    flow_range: tuple[tuple[int, int], ...]  # per edge (min, max) over max flows
    edge_class: tuple[str, ...]  # "A", "C" or "R"
    min_cut_sides: tuple[tuple[int, ...], ...]
    min_cut_capacity: int
    max_flow_count: int


def classify_by_enumeration(network: Network, cancel: CancelToken | None = None) -> OracleReport:
    _check_flow_guard(network)
    _check_cut_guard(network)
    value, flows = integral_max_flows(network, cancel)
    ranges = []
    classes = []
    for i, e in enumerate(network.edges):
        lo = min(f[i] for f in flows)
        hi = max(f[i] for f in flows)
        ranges.append((lo, hi))
        if lo == e.capacity:
            classes.append("A")
        elif hi == 0:
            classes.append("R")
        else:
            classes.append("C")
    capacity, sides = min_cuts_brute(network, cancel)
    return OracleReport(
        max_flow_value=value,
        flow_range=tuple(ranges),
        edge_class=tuple(classes),
        min_cut_sides=tuple(sides),
        min_cut_capacity=capacity,
        max_flow_count=len(flows),
    )


def min_cuts_brute(network: Network, cancel: CancelToken | None = None) -> tuple[int, list[tuple[int, ...]]]:
    """Minimum s-t cut capacity and every source side attaining it."""
    _check_cut_guard(network)
    s, t = network.source, network.sink
    others = [v for v in range(network.vertex_count) if v not in (s, t)]
    best = None
    sides: list[tuple[int, ...]] = []
    for mask in range(1 << len(others)):
        if cancel is not None and mask % 4096 == 0 and cancel.is_set():
            raise Cancelled("oracle enumeration cancelled")
        S = {s} | {v for j, v in enumerate(others) if mask >> j & 1}
        cap = sum(e.capacity for e in network.edges if e.tail in S and e.head not in S)
        side = tuple(sorted(S))
        if best is None or cap < best:
            best, sides = cap, [side]
        elif cap == best:
            sides.append(side)
    sides.sort()
    return best, sides


def enumerate_cuts_brute(network: Network, cancel: CancelToken | None = None) -> list[tuple[int, ...]]:
    return min_cuts_brute(network, cancel)[1]
