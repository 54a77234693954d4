"""Maximum-flow network decomposition: edge classes, residual blocks,
minimum cuts and potential functions."""

__version__ = "0.1.0"

from .decomposition import (  # noqa: E402
    BlockType,
    Decomposition,
    EdgeClass,
    classify_blocks,
    classify_edges,
    decompose,
    jump_exists,
    residual_sccs,
)
from .maxflow import MaxFlowResult, augment_cycle, enumerate_max_flows, max_flow  # noqa: E402
from .mincut import (  # noqa: E402
    MinCut,
    enumerate_min_cuts,
    is_min_cut,
    maximal_min_cut,
    minimal_min_cut,
)
from .network import Flow, Network, flow_value, residual_arcs, validate_flow  # noqa: E402

__all__ = [
    "BlockType",
    "Decomposition",
    "EdgeClass",
    "Flow",
    "MaxFlowResult",
    "MinCut",
    "Network",
    "augment_cycle",
    "classify_blocks",
    "classify_edges",
    "decompose",
    "enumerate_max_flows",
    "enumerate_min_cuts",
    "flow_value",
    "is_min_cut",
    "jump_exists",
    "max_flow",
    "maximal_min_cut",
    "minimal_min_cut",
    "residual_arcs",
    "residual_sccs",
    "validate_flow",
]
