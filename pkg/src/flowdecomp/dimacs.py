"""DIMACS max-flow reader/writer and the potential file format.

DIMACS vertex ids are 1-based; `Network` ids are 0-based. Arc order in the
file is the edge id order.
"""
from __future__ import annotations

from fractions import Fraction

from .network import MAX_CAPACITY, Network, NetworkError


class ParseError(ValueError):
    def __init__(self, code: str, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message} [{code}]")
        self.code = code
        self.line = line
        self.column = column


def _tokens(raw: str) -> list[tuple[str, int]]:
    out = []
    col = 0
    for tok in raw.split():
        col = raw.index(tok, col)
        out.append((tok, col + 1))
        col += len(tok)
    return out


def _int(tok: tuple[str, int], lineno: int, what: str) -> int:
    text, col = tok
    try:
        return int(text)
    except ValueError:
        raise ParseError("syntax", lineno, col, f"{what} {text!r} is not an integer") from None


def parse_dimacs(text: str) -> Network:
    n = m = None
    source = sink = None
    arcs: list[tuple[int, int, int]] = []
    p_line = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokens(raw)
        if not toks or toks[0][0] == "c":
            continue
        kind = toks[0][0]
        if kind == "p":
            if p_line:
                raise ParseError("duplicate-p", lineno, 1, f"second problem line (first on line {p_line})")
            if len(toks) != 4 or toks[1][0] != "max":
                raise ParseError("syntax", lineno, 1, "expected 'p max <nodes> <arcs>'")
            n = _int(toks[2], lineno, "node count")
            m = _int(toks[3], lineno, "arc count")
            if n < 2 or m < 0:
                raise ParseError("syntax", lineno, toks[2][1], "need at least 2 nodes and a non-negative arc count")
            p_line = lineno
            continue
        if not p_line:
            raise ParseError("missing-p", lineno, 1, f"'{kind}' line before the problem line")
        if kind == "n":
            if len(toks) != 3 or toks[2][0] not in ("s", "t"):
                raise ParseError("syntax", lineno, 1, "expected 'n <id> s' or 'n <id> t'")
            v = _int(toks[1], lineno, "node id")
            if not 1 <= v <= n:
                raise ParseError("id-range", lineno, toks[1][1], f"node id {v} outside [1, {n}]")
            if toks[2][0] == "s":
                if source is not None:
                    raise ParseError("duplicate-source", lineno, 1, "source designated twice")
                source = v - 1
            else:
                if sink is not None:
                    raise ParseError("duplicate-sink", lineno, 1, "sink designated twice")
                sink = v - 1
        elif kind == "a":
            if len(toks) != 4:
                raise ParseError("syntax", lineno, 1, "expected 'a <tail> <head> <capacity>'")
            u = _int(toks[1], lineno, "tail")
            v = _int(toks[2], lineno, "head")
            c = _int(toks[3], lineno, "capacity")
            for tok, x in ((toks[1], u), (toks[2], v)):
                if not 1 <= x <= n:
                    raise ParseError("id-range", lineno, tok[1], f"node id {x} outside [1, {n}]")
            if u == v:
                raise ParseError("self-loop", lineno, toks[1][1], f"arc {u} -> {v} is a self-loop")
            if c <= 0:
                raise ParseError("capacity-zero", lineno, toks[3][1], f"capacity {c} is not positive")
            if c > MAX_CAPACITY:
                raise ParseError("capacity-bound", lineno, toks[3][1], f"capacity {c} exceeds 2^62")
            arcs.append((u - 1, v - 1, c))
        else:
            raise ParseError("syntax", lineno, 1, f"unknown line type {kind!r}")
    last = len(text.splitlines()) or 1
    if not p_line:
        raise ParseError("missing-p", last, 1, "no problem line")
    if source is None:
        raise ParseError("missing-source", last, 1, "no 'n <id> s' line")
    if sink is None:
        raise ParseError("missing-sink", last, 1, "no 'n <id> t' line")
    if len(arcs) != m:
        raise ParseError("arc-count", p_line, 1, f"problem line declares {m} arcs, found {len(arcs)}")
    try:
        return Network(n, source, sink, tuple(arcs))
    except NetworkError as exc:
        raise ParseError(exc.code, p_line, 1, str(exc)) from None


def to_dimacs(network: Network) -> str:
    lines = [
        f"p max {network.vertex_count} {network.edge_count}",
        f"n {network.source + 1} s",
        f"n {network.sink + 1} t",
    ]
    lines += [f"a {u + 1} {v + 1} {c}" for u, v, c in network.edges]
    return "\n".join(lines) + "\n"


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_potential(text: str, vertex_count: int) -> list[Fraction]:
    """Read ``<vertex-id> <p>/<q>`` lines (1-based ids); every vertex once."""
    values: list[Fraction | None] = [None] * vertex_count
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = _tokens(raw)
        if not toks or toks[0][0] == "c":
            continue
        if len(toks) != 2:
            raise ParseError("syntax", lineno, 1, "expected '<vertex-id> <numerator>/<denominator>'")
        v = _int(toks[0], lineno, "vertex id")
        if not 1 <= v <= vertex_count:
            raise ParseError("id-range", lineno, toks[0][1], f"vertex id {v} outside [1, {vertex_count}]")
        if values[v - 1] is not None:
            raise ParseError("duplicate-vertex", lineno, toks[0][1], f"vertex {v} given twice")
        num, _, den = toks[1][0].partition("/")
        try:
            values[v - 1] = Fraction(int(num), int(den) if den else 1)
        except (ValueError, ZeroDivisionError):
            raise ParseError("syntax", lineno, toks[1][1], f"bad rational {toks[1][0]!r}") from None
    missing = [v + 1 for v, x in enumerate(values) if x is None]
    if missing:
        raise ParseError("missing-vertex", len(text.splitlines()) or 1, 1, f"no value for vertices {missing}")
    return values  # type: ignore[return-value]


def format_potential(values) -> str:
    return "".join(f"{v + 1} {format_fraction(Fraction(x))}\n" for v, x in enumerate(values))
