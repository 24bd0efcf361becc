from .frontier import (
    REJECT,
    FrontierSearch,
    FrontierSearchException,
    MergeStats,
    SearchSpec,
    merge_table_stats,
    run_search,
)
from .graph import FrontierPlan, Graph, GraphException, build_frontier_plan
