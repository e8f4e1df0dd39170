"""Summary graph construction and its quality metrics.

The summary graph has type classes as vertices. A class-level edge
(c1, p, c2) exists exactly when some member of c1 links to some member of
c2 via p; each edge carries a Class Predicate Stability value, the share
of c1's members that carry the predicate into c2. Predicates whose objects
are literals or unclassed nodes become datatype properties of the class.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .classes import TypeClassMap, create_classes
from .model import Graph
from .similarity import CandidatePair, SimilarityMatrix

log = logging.getLogger(__name__)


@dataclass
class SummaryGraph:
    classes: TypeClassMap
    # (source class, predicate label, target class) -> CPS in (0, 1]
    edges: dict[tuple[int, int, int], float]
    datatype_properties: dict[int, set[int]]


def build_summary_graph(g: Graph, classes: TypeClassMap) -> SummaryGraph:
    witnesses: dict[tuple[int, int, int], set[int]] = {}
    datatype_props: dict[int, set[int]] = {}
    class_of = classes.class_of
    for t in g.triples:
        c1 = class_of.get(t.subject)
        if c1 is None:
            continue
        c2 = class_of.get(t.object)
        if c2 is None:
            datatype_props.setdefault(c1, set()).add(t.predicate)
        else:
            witnesses.setdefault((c1, t.predicate, c2), set()).add(t.subject)
    edges = {
        key: len(subs) / classes.size_of(key[0])
        for key, subs in witnesses.items()
    }
    return SummaryGraph(classes, edges, datatype_props)


def cps_edge(g: Graph, classes: TypeClassMap, c1: int, p: int, c2: int) -> float:
    """Share of c1's members with at least one p-link into c2."""
    targets = set(classes.members[c2])
    linked = sum(
        1 for u in classes.members[c1]
        if not g.neighbors_by_predicate(u, p).isdisjoint(targets)
    )
    return linked / classes.size_of(c1)


def cps_graph(sg: SummaryGraph) -> float:
    """Mean edge stability; 1.0 (with a warning) for an edgeless summary."""
    if not sg.edges:
        log.warning("summary graph has no class-level edges; "
                    "stability defaults to 1.0")
        return 1.0
    return sum(sg.edges.values()) / len(sg.edges)


def rmsd(g: Graph, classes: TypeClassMap) -> float:
    """Sum over classes of the root-mean-square Manhattan distance between
    members and their class centroid, in predicate-count space."""
    total = 0.0
    for members in classes.classes():
        n = len(members)
        if n < 2:
            continue
        labels: set[int] = set()
        for m in members:
            labels.update(g.predicate_set(m))
        counts = {
            m: {p: len(g.neighbors_by_predicate(m, p))
                for p in g.predicate_set(m)}
            for m in members
        }
        centroid = {
            p: sum(counts[m].get(p, 0) for m in members) / n
            for p in labels
        }
        sq_sum = 0.0
        for m in members:
            dist = sum(abs(counts[m].get(p, 0) - centroid[p])
                       for p in sorted(labels))
            sq_sum += dist * dist
        total += math.sqrt(sq_sum / n)
    return total


def typification_rate(g: Graph, classes: TypeClassMap) -> float:
    """Fraction of the graph's subjects that sit in a class of size >= 2."""
    if g.subject_count == 0:
        return 0.0
    typed = sum(len(ms) for ms in classes.classes() if len(ms) >= 2)
    return typed / g.subject_count


@dataclass
class FavorabilityReport:
    epsilon: float
    stability: float
    typification_rate: float
    rmsd: float
    favorability: float


def favorability(g: Graph, classes: TypeClassMap,
                 epsilon: float = float("nan")) -> FavorabilityReport:
    """Stability x typification / (rmsd + 0.1) for one partition."""
    sg = build_summary_graph(g, classes)
    stability = cps_graph(sg)
    typ = typification_rate(g, classes)
    dev = rmsd(g, classes)
    return FavorabilityReport(
        epsilon=epsilon,
        stability=stability,
        typification_rate=typ,
        rmsd=dev,
        favorability=stability * typ / (dev + 0.1),
    )


@dataclass(frozen=True)
class ThresholdSearchParams:
    min_eps: float = 0.0
    max_eps: float = 1.0
    tries: int = 10
    ect: float = 0.9

    def __post_init__(self) -> None:
        if not 0.0 <= self.min_eps < self.max_eps <= 1.0:
            raise ValueError("need 0 <= min_eps < max_eps <= 1")
        if self.tries < 2:
            raise ValueError("tries must be at least 2")
        if self.ect < 0.0:
            raise ValueError("ect must be non-negative")


_MIN_INTERVAL = 1e-4


def find_optimum_epsilon(
        g: Graph, matrix: SimilarityMatrix, pairs: Sequence[CandidatePair],
        params: ThresholdSearchParams,
        subjects: Optional[Sequence[int]] = None,
        threads: int = 1,
) -> tuple[float, list[FavorabilityReport]]:
    """Grid-scan epsilon for maximum favorability, then recursively refine.

    Each level scans tries+1 evenly spaced thresholds. When the level
    improves on its baseline by more than ect, the scan recurses on the
    interval around the optimum with half the tries; refinement intervals
    are clipped to the original bounds. Ties prefer the smaller epsilon.
    Grid points evaluate independently (and in parallel when threads > 1,
    with the trace kept in grid order). Returns the chosen epsilon and the
    full evaluation trace.
    """
    if subjects is None:
        subjects = g.subjects
    trace: list[FavorabilityReport] = []

    def evaluate(eps: float) -> FavorabilityReport:
        classes = create_classes(matrix, pairs, eps, subjects=subjects)
        return favorability(g, classes, epsilon=eps)

    def scan(lo: float, hi: float, tries: int,
             prev_favor: Optional[float], prev_eps: float) -> tuple[float, float]:
        inc = (hi - lo) / tries
        grid = [min(lo + i * inc, hi) for i in range(tries + 1)]
        if threads > 1 and len(grid) > 1:
            import concurrent.futures
            with concurrent.futures.ThreadPoolExecutor(
                    max_workers=threads) as pool:
                reports = list(pool.map(evaluate, grid))
        else:
            reports = [evaluate(eps) for eps in grid]
        trace.extend(reports)

        best_favor = -math.inf if prev_favor is None else prev_favor
        best_eps = prev_eps
        for eps, report in zip(grid, reports):
            if (report.favorability > best_favor
                    or (report.favorability == best_favor and eps < best_eps)):
                best_favor = report.favorability
                best_eps = eps
        baseline = reports[0].favorability if prev_favor is None else prev_favor
        improvement = abs(best_favor - baseline)
        next_tries = tries // 2
        if improvement > params.ect and next_tries >= 2:
            lo2 = max(params.min_eps, best_eps - inc)
            hi2 = min(params.max_eps, best_eps + inc)
            if hi2 - lo2 >= _MIN_INTERVAL:
                return scan(lo2, hi2, next_tries, best_favor, best_eps)
        return best_eps, best_favor

    best_eps, _ = scan(params.min_eps, params.max_eps, params.tries,
                       None, params.min_eps)
    return best_eps, trace
