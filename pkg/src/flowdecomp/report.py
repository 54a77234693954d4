"""Canonical JSON documents and Graphviz DOT output.

Vertex ids in every document are 1-based (DIMACS); edge ids are the 0-based
arc positions. Rationals are written as ``"p/q"`` strings. Key order is fixed
by construction, so identical input gives byte-identical output.
"""
from __future__ import annotations

import hashlib
import json

from . import __version__
from .decomposition import Decomposition, EdgeClass
from .dimacs import format_fraction, to_dimacs
from .mincut import MinCut, enumerate_min_cuts, maximal_min_cut, minimal_min_cut
from .network import Network

SCHEMA_VERSION = 1

EDGE_COLORS = {
    EdgeClass.ESSENTIAL: "red",
    EdgeClass.DUMMY_I: "black",
    EdgeClass.DUMMY_II: "green",
}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=True) + "\n"


def dumps_line(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True) + "\n"


def input_digest(network: Network) -> str:
    return "sha256:" + hashlib.sha256(to_dimacs(network).encode()).hexdigest()


def header(kind: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "kind": kind}


def cut_record(cut: MinCut) -> dict:
    return {
        "source_side": [v + 1 for v in cut.source_side],
        "cut_edges": list(cut.cut_edges),
        "back_edges": list(cut.back_edges),
        "capacity": cut.capacity,
    }


def analysis_document(dec: Decomposition, cuts_limit: int | None = None) -> dict:
    net = dec.network
    doc = header("analysis")
    doc["tool"] = {"name": "flowdecomp", "version": __version__}
    doc["input_digest"] = input_digest(net)
    doc["network"] = {
        "vertices": net.vertex_count,
        "edges": net.edge_count,
        "source": net.source + 1,
        "sink": net.sink + 1,
    }
    doc["max_flow_value"] = dec.value
    doc["edges"] = [
        {
            "id": i,
            "tail": u + 1,
            "head": v + 1,
            "capacity": c,
            "flow": dec.flow.values[i],
            "class": dec.edge_class[i].value,
        }
        for i, (u, v, c) in enumerate(net.edges)
    ]
    doc["blocks"] = [
        {"id": k, "members": [v + 1 for v in members], "type": dec.block_type[k].value}
        for k, members in enumerate(dec.blocks)
    ]
    doc["minimal_cut"] = cut_record(minimal_min_cut(dec.flow))
    doc["maximal_cut"] = cut_record(maximal_min_cut(dec.flow))
    if cuts_limit is not None:
        stream = enumerate_min_cuts(dec.flow, cuts_limit)
        items = [cut_record(c) for c in stream]
        doc["cuts"] = {"limit": cuts_limit, "exhausted": stream.exhausted, "items": items}
    return doc


def maxflow_document(dec: Decomposition) -> dict:
    doc = header("maxflow")
    doc["max_flow_value"] = dec.value
    doc["flows"] = list(dec.flow.values)
    return doc


def dot(dec: Decomposition) -> str:
    """Blocks as clusters labeled with their type; edges colored by class."""
    net = dec.network
    lines = ["digraph flowdecomp {", "  rankdir=LR;", "  node [shape=circle];"]
    for k, members in enumerate(dec.blocks):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f'    label="B{k}: {dec.block_type[k].value}";')
        for v in members:
            shape = ' shape=doublecircle' if v in (net.source, net.sink) else ""
            lines.append(f'    v{v + 1} [label="{v + 1}"{shape}];')
        lines.append("  }")
    for i, (u, v, c) in enumerate(net.edges):
        color = EDGE_COLORS[dec.edge_class[i]]
        f = dec.flow.values[i]
        lines.append(f'  v{u + 1} -> v{v + 1} [label="{f}/{c}" color={color} fontcolor={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def fraction_list(values) -> list[str]:
    return [format_fraction(x) for x in values]
