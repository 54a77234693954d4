"""Residual SCC blocks, edge classes, block types and jumps.

Everything here is derived from a single maximum flow. The blocks and the
classification do not depend on which maximum flow is used; the oracle tests
check that claim rather than this module re-deriving it at runtime.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence

from .maxflow import is_maximum, max_flow
from .network import Flow, Network, flow_value, residual_arcs


class EdgeClass(str, Enum):
    ESSENTIAL = "A"
    DUMMY_I = "C"
    DUMMY_II = "R"

    @property
    def is_dummy(self) -> bool:
        return self is not EdgeClass.ESSENTIAL


class BlockType(str, Enum):
    START = "Start"
    END = "End"
    TRANSFER = "Transfer"
    DIRECT = "Direct"
    REMOVABLE = "Removable"


class NotMaximumError(ValueError):
    """The flow admits a residual s-t path."""


def _tarjan(n: int, succ: Sequence[Sequence[int]]) -> list[list[int]]:
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            while i < len(succ[v]):
                w = succ[v][i]
                i += 1
                if index[w] < 0:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def residual_sccs(flow: Flow) -> list[list[int]]:
    """SCCs of the residual network, in reverse topological order.

    A block is emitted only after every block it has a residual arc into;
    among the available blocks the one with the smallest vertex goes first.
    """
    if not is_maximum(flow):
        raise NotMaximumError("flow is not maximum: residual s-t path exists")
    n = flow.network.vertex_count
    succ: list[list[int]] = [[] for _ in range(n)]
    for a in residual_arcs(flow):
        succ[a.tail].append(a.head)
    comps = _tarjan(n, succ)

    comp_of = [0] * n
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    out_deg = [0] * len(comps)
    preds: list[set[int]] = [set() for _ in comps]
    for u in range(n):
        for v in succ[u]:
            a, b = comp_of[u], comp_of[v]
            if a != b and a not in preds[b]:
                preds[b].add(a)
                out_deg[a] += 1
    ready = [(comp[0], k) for k, comp in enumerate(comps) if out_deg[k] == 0]
    heapq.heapify(ready)
    order = []
    while ready:
        _, k = heapq.heappop(ready)
        order.append(comps[k])
        for p in preds[k]:
            out_deg[p] -= 1
            if out_deg[p] == 0:
                heapq.heappush(ready, (comps[p][0], p))
    return order


def classify_edges(flow: Flow, blocks: Sequence[Sequence[int]]) -> list[EdgeClass]:
    block_of = _block_index(flow.network.vertex_count, blocks)
    classes = []
    for i, (u, v, _) in enumerate(flow.network.edges):
        if block_of[u] == block_of[v]:
            classes.append(EdgeClass.DUMMY_I)
        elif flow.values[i] > 0:
            classes.append(EdgeClass.ESSENTIAL)
        else:
            classes.append(EdgeClass.DUMMY_II)
    return classes


def classify_blocks(
    network: Network, edge_class: Sequence[EdgeClass], blocks: Sequence[Sequence[int]]
) -> list[BlockType]:
    block_of = _block_index(network.vertex_count, blocks)
    essential_in = [0] * len(blocks)
    for (u, v, _), cls in zip(network.edges, edge_class):
        # parallel essential edges count separately
        if cls is EdgeClass.ESSENTIAL and block_of[u] != block_of[v]:
            essential_in[block_of[v]] += 1
    types = []
    for k, members in enumerate(blocks):
        if network.source in members:
            types.append(BlockType.START)
        elif network.sink in members:
            types.append(BlockType.END)
        elif essential_in[k] > 1:
            types.append(BlockType.TRANSFER)
        elif essential_in[k] == 1:
            types.append(BlockType.DIRECT)
        else:
            types.append(BlockType.REMOVABLE)
    return types


def _block_index(n: int, blocks: Sequence[Sequence[int]]) -> list[int]:
    block_of = [-1] * n
    for k, members in enumerate(blocks):
        for v in members:
            block_of[v] = k
    if -1 in block_of:
        raise ValueError("blocks do not cover every vertex")
    return block_of


class Jump(NamedTuple):
    exists: bool
    path: tuple[int, ...]  # edge ids of a witness, empty when no jump


def jump_exists(network: Network, edge_class: Sequence[EdgeClass], u: int, v: int) -> Jump:
    """Look for a dummy-only u->v path that uses at least one dummy II edge.

    BFS over (vertex, seen-dummy-II) states; returns a shortest witness.
    ``u == v`` is always False: a jump joins two distinct vertices.
    """
    n = network.vertex_count
    for x in (u, v):
        if not 0 <= x < n:
            raise ValueError(f"vertex {x} outside [0, {n})")
    if u == v:
        return Jump(False, ())
    start = (u, False)
    parent: dict[tuple[int, bool], tuple[tuple[int, bool], int] | None] = {start: None}
    queue = deque([start])
    goal = (v, True)
    while queue:
        state = queue.popleft()
        if state == goal:
            path = []
            while parent[state] is not None:
                state, eid = parent[state]
                path.append(eid)
            return Jump(True, tuple(reversed(path)))
        x, seen_r = state
        for eid in network.out_edges[x]:
            cls = edge_class[eid]
            if cls is EdgeClass.ESSENTIAL:
                continue
            nxt = (network.edges[eid].head, seen_r or cls is EdgeClass.DUMMY_II)
            if nxt not in parent:
                parent[nxt] = (state, eid)
                queue.append(nxt)
    return Jump(False, ())


def dummy_path_exists(network: Network, edge_class: Sequence[EdgeClass], u: int, v: int) -> bool:
    """Whether some directed u->v path (u != v) uses only dummy edges."""
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for eid in network.out_edges[x]:
            if edge_class[eid].is_dummy:
                y = network.edges[eid].head
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return False


@dataclass(frozen=True)
class Decomposition:
    network: Network
    flow: Flow
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]
    edge_class: tuple[EdgeClass, ...]
    block_type: tuple[BlockType, ...]

    @property
    def value(self) -> int:
        return flow_value(self.flow)

    def edges_of(self, cls: EdgeClass) -> set[int]:
        return {i for i, c in enumerate(self.edge_class) if c is cls}

    def jump(self, u: int, v: int) -> Jump:
        return jump_exists(self.network, self.edge_class, u, v)


def decompose(network: Network, flow: Flow | None = None) -> Decomposition:
    """Full decomposition from ``flow``, or from `max_flow` when omitted."""
    if flow is None:
        flow = max_flow(network).flow
    blocks = residual_sccs(flow)
    edge_class = classify_edges(flow, blocks)
    return Decomposition(
        network=network,
        flow=flow,
        blocks=tuple(tuple(b) for b in blocks),
        block_of=tuple(_block_index(network.vertex_count, blocks)),
        edge_class=tuple(edge_class),
        block_type=tuple(classify_blocks(network, edge_class, blocks)),
    )
