"""Potential functions, diff*, level sets and the dual-optimality check.

A potential assigns each vertex a rational in [0, 1] with s at 1 and t at 0.
It may not rise along an essential edge, must stay level along a dummy I
edge, and may not fall along a dummy II edge. These are exactly the vertex
parts of optimal solutions of the cut LP: a dummy I edge carries strictly
interior flow in some maximum flow, so complementary slackness makes both of
its dual constraints tight. With only "may not fall" on dummy I edges,
a path s->a (1), a->b (2), b->t (1) would accept the indicator of {s, b},
whose cut has capacity 2 against a maximum flow of 1.

All arithmetic is exact (`fractions.Fraction`).
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .decomposition import Decomposition, EdgeClass
from .mincut import MinCut, all_min_cuts

ZERO = Fraction(0)
ONE = Fraction(1)


class PotentialViolation(NamedTuple):
    kind: str  # "range", "source", "sink", "essential", "dummy-i", "dummy-ii"
    where: int  # vertex id for range/source/sink, edge id otherwise
    detail: str


class InvalidPotential(ValueError):
    def __init__(self, violations: list[PotentialViolation]):
        self.violations = violations
        super().__init__("; ".join(v.detail for v in violations))


@dataclass(frozen=True)
class Potential:
    values: tuple[Fraction, ...]

    def __getitem__(self, v: int) -> Fraction:
        return self.values[v]

    def __len__(self):
        return len(self.values)


def potential_violations(dec: Decomposition, values: Sequence) -> list[PotentialViolation]:
    net = dec.network
    if len(values) != net.vertex_count:
        raise ValueError(f"expected {net.vertex_count} vertex values, got {len(values)}")
    pi = [Fraction(x) for x in values]
    out = []
    for v, x in enumerate(pi):
        if not ZERO <= x <= ONE:
            out.append(PotentialViolation("range", v, f"vertex {v}: {x} outside [0, 1]"))
    if pi[net.source] != ONE:
        out.append(PotentialViolation("source", net.source, f"source has {pi[net.source]}, not 1"))
    if pi[net.sink] != ZERO:
        out.append(PotentialViolation("sink", net.sink, f"sink has {pi[net.sink]}, not 0"))
    for i, ((u, v, _), cls) in enumerate(zip(net.edges, dec.edge_class)):
        a, b = pi[u], pi[v]
        if cls is EdgeClass.ESSENTIAL and a < b:
            out.append(PotentialViolation("essential", i, f"edge {i} ({u}->{v}) essential but rises {a} -> {b}"))
        elif cls is EdgeClass.DUMMY_I and a != b:
            out.append(PotentialViolation("dummy-i", i, f"edge {i} ({u}->{v}) dummy I but {a} != {b}"))
        elif cls is EdgeClass.DUMMY_II and a > b:
            out.append(PotentialViolation("dummy-ii", i, f"edge {i} ({u}->{v}) dummy II but falls {a} -> {b}"))
    return out


def validate_potential(dec: Decomposition, values: Sequence) -> Potential:
    violations = potential_violations(dec, values)
    if violations:
        raise InvalidPotential(violations)
    return Potential(tuple(Fraction(x) for x in values))


def indicator(n: int, S: Iterable[int]) -> tuple[Fraction, ...]:
    S = set(S)
    return tuple(ONE if v in S else ZERO for v in range(n))


def indicator_is_potential(dec: Decomposition, S: Iterable[int]) -> bool:
    return not potential_violations(dec, indicator(dec.network.vertex_count, S))


def diff_star(dec: Decomposition, pot: Potential) -> tuple[Fraction, ...]:
    """Potential drop on essential edges, zero on every other edge."""
    return tuple(
        pot[u] - pot[v] if cls is EdgeClass.ESSENTIAL else ZERO
        for (u, v, _), cls in zip(dec.network.edges, dec.edge_class)
    )


@dataclass(frozen=True)
class LevelDecomposition:
    thresholds: tuple[Fraction, ...]  # strictly increasing, last is 1
    sets: tuple[tuple[int, ...], ...]  # nested, shrinking

    @property
    def weights(self) -> tuple[Fraction, ...]:
        prev = [ZERO, *self.thresholds[:-1]]
        return tuple(phi - p for phi, p in zip(self.thresholds, prev))

    def reconstruct(self, n: int) -> tuple[Fraction, ...]:
        pi = [ZERO] * n
        for w, S in zip(self.weights, self.sets):
            for v in S:
                pi[v] += w
        return tuple(pi)


def level_decompose(dec: Decomposition, pot: Potential) -> LevelDecomposition:
    """Split ``pot`` into nested level sets: S_k holds vertices above phi_(k-1)."""
    thresholds = sorted({x for x in pot.values if x > 0})
    sets = []
    prev = ZERO
    for phi in thresholds:
        sets.append(tuple(v for v, x in enumerate(pot.values) if x > prev))
        prev = phi
    return LevelDecomposition(tuple(thresholds), tuple(sets))


def _side(cut) -> tuple[int, ...]:
    return cut.source_side if isinstance(cut, MinCut) else tuple(cut)


def combine_cuts(dec: Decomposition, cuts: Sequence, weights: Sequence) -> Potential:
    """Convex combination of cut indicators; every cut must be minimum."""
    if len(cuts) != len(weights) or not cuts:
        raise ValueError("need one weight per cut and at least one cut")
    lam = [Fraction(w) for w in weights]
    if any(w < 0 for w in lam):
        raise ValueError("weights must be non-negative")
    if sum(lam) != 1:
        raise ValueError(f"weights sum to {sum(lam)}, not 1")
    n = dec.network.vertex_count
    pi = [ZERO] * n
    for cut, w in zip(cuts, lam):
        S = _side(cut)
        if not indicator_is_potential(dec, S):
            raise ValueError(f"{list(S)} is not a minimum cut source side")
        for v in S:
            pi[v] += w
    return validate_potential(dec, pi)


def cut_vector_sum(dec: Decomposition, cuts: Sequence[MinCut], weights: Sequence) -> tuple[Fraction, ...]:
    """Sum of weight * indicator(delta+(S)) as an edge vector."""
    out = [ZERO] * dec.network.edge_count
    for cut, w in zip(cuts, weights):
        for i in cut.cut_edges:
            out[i] += Fraction(w)
    return tuple(out)


def check_dual_optimal(dec: Decomposition, pot: Potential, max_flow_value: int) -> bool:
    """Whether sum of c(e) * drop over essential edges equals the max flow value."""
    y = diff_star(dec, pot)
    return sum(e.capacity * y[i] for i, e in enumerate(dec.network.edges)) == max_flow_value


def random_weights(rng: random.Random, k: int, max_denominator: int = 64) -> list[Fraction]:
    """Non-negative weights summing to 1 over a common denominator <= 64."""
    denom = rng.randint(max(1, k), max_denominator)
    cuts = sorted(rng.randint(0, denom) for _ in range(k - 1))
    parts = [b - a for a, b in zip([0, *cuts], [*cuts, denom])]
    return [Fraction(p, denom) for p in parts]


def random_combination(
    cuts: Sequence[MinCut], rng: random.Random, max_terms: int = 4
) -> tuple[list[MinCut], list[Fraction]]:
    k = rng.randint(1, min(max_terms, len(cuts)))
    chosen = rng.sample(list(cuts), k)
    return chosen, random_weights(rng, k)


def sample_potential(dec: Decomposition, seed: int, cut_limit: int = 2**12) -> Potential:
    cuts, _ = all_min_cuts(dec.flow, cut_limit)
    rng = random.Random(seed)
    chosen, weights = random_combination(cuts, rng)
    return combine_cuts(dec, chosen, weights)
