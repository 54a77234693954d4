"""Minimum s-t cuts as residual-closed vertex sets.

A vertex set S with s in S and t outside is the source side of a minimum
cut exactly when no residual arc of a maximum flow leaves S. Closed sets are
unions of residual SCC blocks, so enumeration works on the block DAG.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .decomposition import residual_sccs
from .network import Flow, Network, residual_arcs, residual_reachable


@dataclass(frozen=True)
class MinCut:
    source_side: tuple[int, ...]
    cut_edges: tuple[int, ...]  # delta+(S)
    back_edges: tuple[int, ...]  # delta-(S)
    capacity: int


def make_cut(network: Network, source_side: Iterable[int]) -> MinCut:
    S = set(source_side)
    out_e, in_e = [], []
    for i, (u, v, _) in enumerate(network.edges):
        if u in S and v not in S:
            out_e.append(i)
        elif v in S and u not in S:
            in_e.append(i)
    return MinCut(
        source_side=tuple(sorted(S)),
        cut_edges=tuple(out_e),
        back_edges=tuple(in_e),
        capacity=sum(network.edges[i].capacity for i in out_e),
    )


def is_min_cut(flow: Flow, source_side: Iterable[int]) -> bool:
    net = flow.network
    S = set(source_side)
    if net.source not in S or net.sink in S:
        return False
    return all(a.head in S for a in residual_arcs(flow) if a.tail in S)


def minimal_min_cut(flow: Flow) -> MinCut:
    return make_cut(flow.network, residual_reachable(flow, flow.network.source))


def maximal_min_cut(flow: Flow) -> MinCut:
    net = flow.network
    reaches_t = residual_reachable(flow, net.sink, reverse=True)
    return make_cut(net, (v for v in range(net.vertex_count) if v not in reaches_t))


class CutEnumeration:
    """Iterable of distinct minimum cuts, stopping after ``limit``.

    ``exhausted`` becomes True once iteration has shown that no further cut
    exists; it stays False if the limit cut the stream short.
    """

    def __init__(self, flow: Flow, limit: int):
        if limit < 1:
            raise ValueError("limit must be >= 1")
        self.flow = flow
        self.limit = limit
        self.exhausted = False
        self.emitted = 0

    def __iter__(self) -> Iterator[MinCut]:
        net = self.flow.network
        gen = _closed_sets(self.flow)
        for sides in gen:
            if self.emitted == self.limit:
                return
            self.emitted += 1
            yield make_cut(net, sides)
        self.exhausted = True


def enumerate_min_cuts(flow: Flow, limit: int) -> CutEnumeration:
    return CutEnumeration(flow, limit)


def all_min_cuts(flow: Flow, limit: int = 2**15) -> tuple[list[MinCut], bool]:
    stream = enumerate_min_cuts(flow, limit)
    cuts = list(stream)
    return cuts, stream.exhausted


def _closed_sets(flow: Flow) -> Iterator[list[int]]:
    """Every residual-closed set containing s but not t, each exactly once.

    Blocks outside the forced part (reachable from s) and the forbidden part
    (reaching t) are decided one at a time with every successor decided first.
    Excluding is always consistent and including is allowed only when all
    successors are in, so every branch of the search ends in a valid set.
    """
    net = flow.network
    blocks = residual_sccs(flow)  # successors before predecessors
    block_of = [0] * net.vertex_count
    for k, members in enumerate(blocks):
        for v in members:
            block_of[v] = k
    succ: list[set[int]] = [set() for _ in blocks]
    for a in residual_arcs(flow):
        x, y = block_of[a.tail], block_of[a.head]
        if x != y:
            succ[x].add(y)

    forced = {block_of[v] for v in residual_reachable(flow, net.source)}
    forbidden = {block_of[v] for v in residual_reachable(flow, net.sink, reverse=True)}
    free = [k for k in range(len(blocks)) if k not in forced and k not in forbidden]

    chosen = set(forced)

    def emit() -> list[int]:
        return sorted(v for k in chosen for v in blocks[k])

    if not free:
        yield emit()
        return
    taken = [False] * len(free)
    stack = [(0, iter(_options(free[0], succ, chosen)))]
    while stack:
        i, options = stack[-1]
        if taken[i]:
            chosen.discard(free[i])
            taken[i] = False
        take = next(options, None)
        if take is None:
            stack.pop()
            continue
        if take:
            chosen.add(free[i])
            taken[i] = True
        if i + 1 == len(free):
            yield emit()
        else:
            stack.append((i + 1, iter(_options(free[i + 1], succ, chosen))))


def _options(k: int, succ: list[set[int]], chosen: set[int]) -> list[bool]:
    if succ[k] <= chosen:
        return [False, True]
    return [False]
