from .files import (
    GraphParseException,
    parse_family,
    parse_graph,
    write_family,
    write_graph,
)
from .filter import (
    LowerBound,
    LowerBoundPipeline,
    PipelineException,
    StageReport,
    filter_lower_bound,
    lower_bound_from_ratio,
)
from .oracle import (
    brute_force_filter,
    brute_force_light_components,
    brute_force_minimal_cutsets,
    brute_force_supersets,
    satisfies_lower_bound,
)
