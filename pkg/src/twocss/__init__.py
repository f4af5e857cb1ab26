"""Local-search approximation for minimum 2-edge- and 2-vertex-connected spanning subgraphs."""

from .graph import (
    Block,
    EdgeSet,
    Graph,
    blocks,
    find_bridges,
    find_cut_vertices,
    is_2ecss,
    is_2vcss,
    is_spanning_connected,
)
from .instances import gen_complete, gen_cycle, gen_random_2connected, gen_theta, gen_tight, parse, serialize
from .local_search import (
    CriticalEdgeSet,
    SolveReport,
    cleanup_2ecss,
    eliminate_closed_short_segments,
    improvement_process,
    solve,
    try_improvement,
)
from .minimal import deletion_pass, minimal_2vcss
from .oracle import DualCertificate, degree_lower_bound, exact_min, verify_dual
from .segments import Segment, SegmentClass, classify, decompose, redundant_edges

__version__ = "0.1.0"
