"""Slow-coloring game and interactive sum choice game on graphs.

Core surface:

* :mod:`slowcolor.numbers` -- triangular-number arithmetic.
* :mod:`slowcolor.graphs` -- graphs, forests, stems, cuts, tree enumeration.
* :mod:`slowcolor.peel` -- linear-time sum-color cost with peel certificates.
* :mod:`slowcolor.exact` -- exact minimax solver with optimal-move extraction.
* :mod:`slowcolor.strategies` -- constructive optimal strategies and matches.
* :mod:`slowcolor.isc` -- interactive sum choice game (forest formula, exact
  solver, constructive requester/supplier).
* :mod:`slowcolor.extremal` -- extremal-tree characterizations and census.
* :mod:`slowcolor.service` -- JSON-over-HTTP interactive play service.
"""

from .numbers import is_triangular, tri_index, triangular
from .graphs import (
    Cut,
    CycleDetected,
    Forest,
    Graph,
    Stem,
    canonical_code,
    cut_edges,
    cycle_graph,
    double_star,
    enumerate_trees,
    find_stem,
    parse_graph,
    path_graph,
    star_graph,
    subdivided_double_star,
    validate_forest,
)
from .peel import PeelStep, PeelTrace, slow_cost, slow_cost_trace
from .exact import SlowExactSolver, slow_cost_exact
from .strategies import ListerPlan, PainterPlan, play_match
from .isc import (
    IscExactSolver,
    ListState,
    find_list_coloring,
    free_color_requests,
    is_list_colorable,
    isc_cost,
    isc_cost_exact,
    requester_play,
    supplier_play,
)
from .extremal import (
    TreeShape,
    Witness,
    census,
    classify_shape,
    expected_minimizers,
    max_witness,
)

__version__ = "0.1.0"

__all__ = [
    "triangular",
    "tri_index",
    "is_triangular",
    "Graph",
    "Forest",
    "Stem",
    "Cut",
    "CycleDetected",
    "parse_graph",
    "validate_forest",
    "find_stem",
    "cut_edges",
    "enumerate_trees",
    "canonical_code",
    "path_graph",
    "star_graph",
    "cycle_graph",
    "double_star",
    "subdivided_double_star",
    "PeelStep",
    "PeelTrace",
    "slow_cost",
    "slow_cost_trace",
    "SlowExactSolver",
    "slow_cost_exact",
    "ListerPlan",
    "PainterPlan",
    "play_match",
    "ListState",
    "is_list_colorable",
    "find_list_coloring",
    "isc_cost",
    "isc_cost_exact",
    "IscExactSolver",
    "free_color_requests",
    "requester_play",
    "supplier_play",
    "TreeShape",
    "Witness",
    "max_witness",
    "classify_shape",
    "expected_minimizers",
    "census",
    "__version__",
]
