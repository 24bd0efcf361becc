import logging
from dataclasses import dataclass
from fractions import Fraction
from time import perf_counter
from typing import Any, Callable, Dict, List, Optional, Union

from lowerzdd.constructions import (
    assemble_sup,
    build_cutset_tdd_subset,
    build_light_components,
)
from lowerzdd.diagrams import NodeRef, TddStore, ZddStore
from lowerzdd.search import Graph

LOGGER = logging.getLogger(__name__)

STAGE_COMPONENTS = "Z_S"
STAGE_CUTSETS = "T_S±"
STAGE_SUPERSETS = "Z_S↑"
STAGE_DIFFERENCE = "difference"
STAGES = (STAGE_COMPONENTS, STAGE_CUTSETS, STAGE_SUPERSETS, STAGE_DIFFERENCE)


class PipelineException(Exception):
    ...


@dataclass(frozen=True)
class StageReport:
    stage: str
    elapsed: float
    nodes: int
    cardinality: int


@dataclass(frozen=True)
class LowerBound:
    exact: Fraction
    floor: int


def lower_bound_from_ratio(
    P: int, k: int, r: Union[int, float, str, Fraction]
) -> LowerBound:
    """
    L(k, r) = P / (r(k - 1) + 1), the lightest component weight that keeps
    the heaviest of k components within ratio r of the lightest.

    Args:
        P: total vertex weight.
        k: number of components.
        r: allowed ratio between the heaviest and the lightest component.
            Floats are read through their decimal form, so 1.1 is 11/10.

    Returns:
        LowerBound: the exact rational and its floor, the value filtering uses.
    """
    ratio = Fraction(str(r)) if isinstance(r, float) else Fraction(r)
    if P < 1:
        raise PipelineException(f"Total weight must be >= 1, got {P}")
    if k < 1:
        raise PipelineException(f"Component count must be >= 1, got {k}")
    if ratio < 1:
        raise PipelineException(f"Ratio must be >= 1, got {r}")

    exact = Fraction(P) / (ratio * (k - 1) + 1)
    return LowerBound(exact, exact.numerator // exact.denominator)


class LowerBoundPipeline:
    """
    Builds Z_S, T_S± and Z_S↑ once for a (graph, L) pair and filters any
    number of input families against them.

    Every ZDD lives in `store`, so families passed to `filter` must have
    been built there too; T_S± lives in a TddStore of its own.
    """

    def __init__(
        self,
        g: Graph,
        L: int,
        store: Optional[ZddStore] = None,
        config: Optional[Dict[str, Any]] = None,
    ) -> None:
        if L < 1:
            raise PipelineException(f"The lower bound L must be >= 1, got {L}")
        self.g = g
        self.L = L
        self.store = store if store is not None else ZddStore(g.m, config)
        if self.store.m != g.m:
            raise PipelineException(
                f"Graph has {g.m} edges but the store covers {self.store.m}"
            )
        self.tdd_store = TddStore(g.m, config, stage=STAGE_CUTSETS)
        self.reports: Dict[str, StageReport] = {}
        self._roots: Dict[str, NodeRef] = {}

    def _stage(self, stage: str, build: Callable[[], NodeRef]) -> NodeRef:
        if stage in self._roots:
            return self._roots[stage]

        target = self.tdd_store if stage == STAGE_CUTSETS else self.store
        caller_stage, target.stage = target.stage, stage
        started = perf_counter()
        try:
            root = build()
        finally:
            target.stage = caller_stage
        elapsed = perf_counter() - started

        report = StageReport(stage, elapsed, target.size(root), target.count(root))
        LOGGER.info(
            f" [x] {stage}: {report.nodes} nodes, cardinality {report.cardinality}, "
            f"{elapsed:.3f}s"
        )
        self.reports[stage] = report
        if stage != STAGE_DIFFERENCE:
            self._roots[stage] = root
        return root

    @property
    def zs(self) -> NodeRef:
        return self._stage(
            STAGE_COMPONENTS, lambda: build_light_components(self.g, self.L, self.store)
        )

    @property
    def tspm(self) -> NodeRef:
        zs = self.zs
        return self._stage(
            STAGE_CUTSETS,
            lambda: build_cutset_tdd_subset(self.g, self.store, zs, self.tdd_store),
        )

    @property
    def sup(self) -> NodeRef:
        tspm = self.tspm
        return self._stage(
            STAGE_SUPERSETS,
            lambda: assemble_sup(self.g, self.tdd_store, tspm, self.L, self.store),
        )

    def filter(self, z_a: NodeRef) -> NodeRef:
        """
        Returns Z_B, the members of `z_a` whose every connected component
        (isolated vertices included) weighs at least L.
        """
        self.store.check_ref(z_a)
        sup = self.sup
        return self._stage(STAGE_DIFFERENCE, lambda: self.store.difference(z_a, sup))

    def intersection_count(self, z_a: NodeRef) -> int:
        """|A ∩ S↑|, the members `filter` removes."""
        return self.store.count(self.store.intersection(z_a, self.sup))

    def stage_reports(self) -> List[StageReport]:
        return [self.reports[stage] for stage in STAGES if stage in self.reports]


def filter_lower_bound(store: ZddStore, z_a: NodeRef, g: Graph, L: int) -> NodeRef:
    return LowerBoundPipeline(g, L, store).filter(z_a)
