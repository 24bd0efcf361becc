from .components import (
    BellBound,
    LightComponentException,
    LightComponentSpec,
    bell_number,
    build_light_components,
    weight_of,
)
from .cutsets import (
    CutsetException,
    MinimalCutsetSpec,
    build_cutset_tdd_subset,
    build_minimal_cutset_tdd,
    check_minimal_cutset,
    minimal_cutset_signing,
)
from .supersets import (
    SupersetException,
    SupersetLiftSpec,
    assemble_sup,
    build_isolated_vertex_family,
    isolated_vertices_family,
    lift_to_supersets,
)
