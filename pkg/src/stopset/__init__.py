"""Stopping sets in Tanner graphs: exact search, peeling, and the vertex cover reduction."""

from .graphs import (
    FormatError,
    Graph,
    ParityCheckMatrix,
    TannerGraph,
    emit_alist,
    emit_dense,
    emit_graph,
    incidence_graph,
    is_connected,
    matrix_from_tanner,
    parse_alist,
    parse_dense,
    parse_graph,
    tanner_from_matrix,
)
from .stopping import (
    SearchOutcome,
    VarSet,
    enumerate_stopping_sets,
    has_stopping_set_of_size,
    is_stopping_set,
    neighborhood,
    stopping_distance,
)
from .oracles import CoverOutcome, has_vertex_cover_of_size, is_vertex_cover, min_vertex_cover
from .reduction import (
    ReductionInstance,
    build_reduction,
    check_structure,
    cover_to_stopping_set,
    stopping_set_to_cover,
    target_size,
    verify_corollaries,
)
from .decoder import PeelResult, mc_failure_rate, peel

__version__ = "0.1.0"
