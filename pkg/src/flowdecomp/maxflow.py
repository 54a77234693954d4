"""Exact maximum flow (Dinic) and residual-cycle augmentation."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from .network import (
    BACKWARD,
    FORWARD,
    Flow,
    Network,
    ResidualArc,
    flow_value,
    residual_arcs,
    residual_reachable,
)


class CycleError(ValueError):
    """Augmentation input is not a usable residual cycle."""


@dataclass(frozen=True)
class MaxFlowResult:
    flow: Flow
    value: int


def max_flow(network: Network) -> MaxFlowResult:
    """Dinic's blocking-flow algorithm on the edge-level residual graph.

    Arc ``2*i`` is the forward arc of edge ``i`` and ``2*i + 1`` its backward
    arc. Every vertex scans its arcs in increasing arc id, so the result is a
    pure function of the edge list.
    """
    n, s, t = network.vertex_count, network.source, network.sink
    m = network.edge_count
    head = [0] * (2 * m)
    cap = [0] * (2 * m)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v, c) in enumerate(network.edges):
        head[2 * i], cap[2 * i] = v, c
        head[2 * i + 1], cap[2 * i + 1] = u, 0
        adj[u].append(2 * i)
        adj[v].append(2 * i + 1)
    for lst in adj:
        lst.sort()

    total = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for a in adj[x]:
                if cap[a] > 0 and level[head[a]] < 0:
                    level[head[a]] = level[x] + 1
                    queue.append(head[a])
        if level[t] < 0:
            break

        ptr = [0] * n
        path: list[int] = []  # arc ids from s to the current vertex
        x = s
        while True:
            if x == t:
                push = min(cap[a] for a in path)
                for a in path:
                    cap[a] -= push
                    cap[a ^ 1] += push
                total += push
                # restart from the tail of the first saturated arc
                k = next(j for j, a in enumerate(path) if cap[a] == 0)
                del path[k:]
                x = s if not path else head[path[-1]]
                continue
            arcs = adj[x]
            while ptr[x] < len(arcs):
                a = arcs[ptr[x]]
                if cap[a] > 0 and level[head[a]] == level[x] + 1:
                    break
                ptr[x] += 1
            if ptr[x] < len(arcs):
                a = arcs[ptr[x]]
                path.append(a)
                x = head[a]
            else:
                if x == s:
                    break
                level[x] = -1  # dead end for this phase
                a = path.pop()
                x = head[a ^ 1]
                ptr[x] += 1

    values = tuple(cap[2 * i + 1] for i in range(m))
    flow = Flow(network, values)
    return MaxFlowResult(flow, flow_value(flow))


def is_maximum(flow: Flow) -> bool:
    """No residual s-t path."""
    return flow.network.sink not in residual_reachable(flow, flow.network.source)


def augment_cycle(flow: Flow, cycle: Sequence[ResidualArc], amount: int) -> Flow:
    """Push ``amount`` units around a simple directed residual cycle."""
    if isinstance(amount, bool) or not isinstance(amount, int) or amount <= 0:
        raise CycleError(f"amount must be a positive integer, got {amount!r}")
    if not cycle:
        raise CycleError("empty cycle")
    net = flow.network
    tails = [a.tail for a in cycle]
    if len(set(tails)) != len(tails):
        raise CycleError("cycle revisits a vertex")
    values = list(flow.values)
    for k, arc in enumerate(cycle):
        nxt = cycle[(k + 1) % len(cycle)]
        if arc.head != nxt.tail:
            raise CycleError(f"arc {k} ends at {arc.head}, next starts at {nxt.tail}")
        e = net.edges[arc.origin_edge]
        if arc.direction == FORWARD:
            ok = (e.tail, e.head) == (arc.tail, arc.head)
        elif arc.direction == BACKWARD:
            ok = (e.head, e.tail) == (arc.tail, arc.head)
        else:
            ok = False
        if not ok:
            raise CycleError(f"arc {k} does not match edge {arc.origin_edge}")
        if arc.capacity(flow) < amount:
            raise CycleError(
                f"arc {k} has residual capacity {arc.capacity(flow)} < {amount}"
            )
        values[arc.origin_edge] += amount if arc.direction == FORWARD else -amount
    for i, (f, e) in enumerate(zip(values, net.edges)):
        if not 0 <= f <= e.capacity:
            raise CycleError(f"edge {i} driven outside its capacity")
    return Flow(net, tuple(values))


def residual_cycles(flow: Flow) -> Iterator[list[ResidualArc]]:
    """Lazily yield every simple cycle of the residual multigraph.

    Each cycle is reported once, rooted at its smallest vertex.
    """
    n = flow.network.vertex_count
    adj: list[list[ResidualArc]] = [[] for _ in range(n)]
    for a in residual_arcs(flow):
        adj[a.tail].append(a)
    for root in range(n):
        on_path = {root}
        path: list[ResidualArc] = []
        stack = [iter(adj[root])]
        while stack:
            arc = next(stack[-1], None)
            if arc is None:
                stack.pop()
                if path:
                    on_path.discard(path.pop().head)
                continue
            if arc.head == root:
                yield path + [arc]
            elif arc.head > root and arc.head not in on_path:
                on_path.add(arc.head)
                path.append(arc)
                stack.append(iter(adj[arc.head]))


def enumerate_max_flows(network: Network, limit: int) -> list[Flow]:
    """Up to ``limit`` distinct integral maximum flows, starting with `max_flow`.

    Breadth-first over unit pushes around residual cycles. Any two integral
    maximum flows differ by an integral circulation, so the search is
    exhaustive whenever the number of such flows is at most ``limit``.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    first = max_flow(network).flow
    seen = {first.values}
    found = [first]
    queue = deque([first])
    while queue and len(found) < limit:
        f = queue.popleft()
        for cyc in residual_cycles(f):
            g = augment_cycle(f, cyc, 1)
            if g.values not in seen:
                seen.add(g.values)
                found.append(g)
                queue.append(g)
                if len(found) >= limit:
                    break
    return found
