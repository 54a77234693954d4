"""Seeded random small networks for oracle cross-checks."""
from __future__ import annotations

import math
import random

from .network import Network
from .oracle import FLOW_GUARD


def random_network(
    rng: random.Random,
    n_range: tuple[int, int] = (4, 8),
    max_edges: int = 14,
    capacities: tuple[int, ...] = (1, 2, 3),
    connected: bool = True,
) -> Network:
    """One random network with source 0 and sink n-1.

    ``connected=True`` plants a directed s-t path first. Capacities are redrawn
    until the integral-flow oracle's search space fits its guard.
    """
    n = rng.randint(*n_range)
    s, t = 0, n - 1
    pairs: list[tuple[int, int]] = []
    if connected:
        inner = rng.sample(range(1, n - 1), rng.randint(0, min(3, n - 2)))
        walk = [s, *inner, t]
        pairs.extend(zip(walk, walk[1:]))
    m = rng.randint(max(len(pairs), n - 1), max_edges)
    while len(pairs) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            pairs.append((u, v))
    rng.shuffle(pairs)
    while True:
        caps = [rng.choice(capacities) for _ in pairs]
        if math.prod(c + 1 for c in caps) <= FLOW_GUARD:
            break
    return Network(n, s, t, tuple((u, v, c) for (u, v), c in zip(pairs, caps)))


def corpus(count: int = 300, seed: int = 20240601, connected_share: int = 220) -> list[Network]:
    """``count`` networks; the first ``connected_share`` have a planted s-t path."""
    nets = []
    for i in range(count):
        rng = random.Random(seed * 1_000_003 + i)
        nets.append(random_network(rng, connected=i < connected_share))
    return nets
