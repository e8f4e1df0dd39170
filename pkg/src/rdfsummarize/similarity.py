"""Iterative weight-aware pairwise entity similarity.

Candidate pairs are subject nodes sharing at least one predicate. Each
pair's score combines the Jaccard agreement of the two predicate sets with
per-predicate neighborhood agreement, where neighbor sets are compared by
a best one-to-one matching and descriptor weights come from tf-idf. Scores
are iterated Jacobi-style to a fixed point: every iteration reads only the
previous score vector, so pairs can be scored in parallel and results do
not depend on scheduling.
"""

from __future__ import annotations

import concurrent.futures
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Optional, Sequence

import numpy as np

from . import _kernel_py, kernels
from .model import Graph, Node
from .weights import DescriptorWeights, tokenize

# Optimal matching is solved exactly by bitmask DP up to this many elements
# on the smaller side; the auto mode switches to greedy above AUTO_EXACT.
AUTO_EXACT_LIMIT = 8
EXACT_DP_LIMIT = 20

WEIGHTED_JACCARD = "weighted-jaccard"
INVERSE_UNION = "inverse-union"


@dataclass(frozen=True)
class IterationParams:
    """Knobs for the similarity fixed point.

    noise_fraction excludes predicates used by more than that fraction of
    subjects from candidate generation (1.0 disables the filter; generated
    pairs still score all their common predicates). factor_mode selects
    the predicate-set agreement factor: weighted-jaccard uses
    |common| / |union|, inverse-union uses 1 / |union|.
    """

    beta: float = 0.15
    max_iter: int = 10
    ict: float = 0.001
    matching: str = "auto"  # auto | exact | greedy
    noise_fraction: float = 1.0
    factor_mode: str = WEIGHTED_JACCARD

    def __post_init__(self) -> None:
        if not 0.0 < self.beta < 1.0:
            raise ValueError("beta must be in (0, 1)")
        if self.max_iter < 1:
            raise ValueError("max_iter must be a positive integer")
        if self.ict < 0.0:
            raise ValueError("ict must be non-negative")
        if self.matching not in ("auto", "exact", "greedy"):
            raise ValueError(f"unknown matching mode {self.matching!r}")
        if not 0.0 < self.noise_fraction <= 1.0:
            raise ValueError("noise_fraction must be in (0, 1]")
        if self.factor_mode not in (WEIGHTED_JACCARD, INVERSE_UNION):
            raise ValueError(f"unknown factor_mode {self.factor_mode!r}")

    @property
    def exact_limit(self) -> int:
        if self.matching == "exact":
            return EXACT_DP_LIMIT
        if self.matching == "greedy":
            return 0
        return AUTO_EXACT_LIMIT


@dataclass(frozen=True)
class CandidatePair:
    """Two subjects with their common predicates and per-predicate
    neighbor sets."""

    u: int
    v: int
    labels: tuple[int, ...]
    neighbors_u: tuple[tuple[int, ...], ...]
    neighbors_v: tuple[tuple[int, ...], ...]

    def key(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


class SimilarityMatrix:
    """Sparse symmetric pair scores; absent pairs (and the diagonal) read 0."""

    def __init__(self, pair_nodes: list[tuple[int, int]],
                 scores: np.ndarray) -> None:
        self.pair_nodes = pair_nodes
        self.scores = scores
        self._index = {
            (u, v) if u <= v else (v, u): i
            for i, (u, v) in enumerate(pair_nodes)
        }

    @classmethod
    def from_pairs(cls, pairs: Sequence[CandidatePair],
                   value: float = 1.0) -> "SimilarityMatrix":
        return cls([(p.u, p.v) for p in pairs],
                   np.full(len(pairs), value, dtype=np.float64))

    def index_of(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u <= v else (v, u))

    def get(self, u: int, v: int) -> float:
        i = self.index_of(u, v)
        return float(self.scores[i]) if i is not None else 0.0

    def items(self) -> Iterator[tuple[tuple[int, int], float]]:
        for i, uv in enumerate(self.pair_nodes):
            yield uv, float(self.scores[i])

    def __len__(self) -> int:
        return len(self.pair_nodes)


@dataclass
class SimResult:
    matrix: SimilarityMatrix
    pairs: list[CandidatePair]
    iterations: int
    deltas: list[float] = field(default_factory=list)


# -- scalar operations -------------------------------------------------------


def literal_sim(x: Node, y: Node, weights: Mapping[str, float]) -> float:
    """Weighted token overlap of two literals in [0, 1].

    Token counts are occurrences across both lexical forms; the score is
    the weighted mass of shared tokens over the weighted mass of all
    tokens. Datatype or language mismatch scores 0.
    """
    if x.datatype != y.datatype or x.language != y.language:
        return 0.0
    tx = tokenize(x.lexical)
    ty = tokenize(y.lexical)
    if not tx and not ty:
        raise ValueError("both lexical forms are empty after tokenization")
    counts = Counter(tx)
    counts.update(ty)
    inter = set(tx) & set(ty)
    num = 0.0
    den = 0.0
    for t in sorted(counts):
        mass = counts[t] * weights.get(t, 0.0)
        den += mass
        if t in inter:
            num += mass
    if den <= 0.0:
        return 0.0
    return num / den


def jaccard(g: Graph, u: int, v: int) -> float:
    """Predicate-set agreement |L(u) & L(v)| / |L(u) | L(v)|."""
    lu = g.predicate_set(u)
    lv = g.predicate_set(v)
    union = len(lu | lv)
    if union == 0:
        return 0.0
    return len(lu & lv) / union


def _resolve_mode(mode: str, small: int) -> str:
    if mode == "auto":
        return "exact" if small <= AUTO_EXACT_LIMIT else "greedy"
    return mode


def max_match_score(a: Iterable[int], b: Iterable[int],
                    sim: Callable[[int, int], float],
                    mode: str = "exact") -> float:
    """Best one-to-one matching total over A x B, normalized by
    |A| + |B| - min(|A|, |B|)."""
    a_sorted = sorted(a)
    b_sorted = sorted(b)
    rows, cols = len(a_sorted), len(b_sorted)
    if rows == 0 or cols == 0:
        raise ValueError("neighbor sets must be nonempty")
    small = min(rows, cols)
    consts = [sim(x, y) for x in a_sorted for y in b_sorted]
    refs = [-1] * len(consts)
    resolved = _resolve_mode(mode, small)
    if resolved == "exact":
        if small > EXACT_DP_LIMIT:
            raise ValueError(
                f"exact matching limited to {EXACT_DP_LIMIT} elements on the "
                f"smaller side (got {small}); use greedy or auto")
        total = _kernel_py._exact_total((), refs, consts, 0, rows, cols)
    else:
        total = _kernel_py._greedy_total((), refs, consts, 0, rows, cols)
    return total / (rows + cols - small)


def _literal_cell_sim(g: Graph, dw: DescriptorWeights, u: int, v: int,
                      x: int, y: int) -> float:
    nx, ny = g.node(x), g.node(y)
    if nx.datatype != ny.datatype or nx.language != ny.language:
        return 0.0
    if not tokenize(nx.lexical) and not tokenize(ny.lexical):
        return 0.0
    return literal_sim(nx, ny, dw.pair_literal_term_weights(u, v, x, y))


def _cell_sim(g: Graph, dw: DescriptorWeights, u: int, v: int,
              x: int, y: int, prev: SimilarityMatrix) -> float:
    """Neighbor-pair similarity used as a matching cell.

    A node is fully similar to itself; literal pairs use the one-shot
    literal score; entity pairs read the previous iteration; mixed kinds
    score 0.
    """
    if x == y:
        return 1.0
    nx, ny = g.node(x), g.node(y)
    if nx.is_literal and ny.is_literal:
        return _literal_cell_sim(g, dw, u, v, x, y)
    if nx.is_entity and ny.is_entity:
        return prev.get(x, y)
    return 0.0


def pair_sim_step(g: Graph, pair: CandidatePair, prev: SimilarityMatrix,
                  weights: Mapping[int, float], beta: float,
                  matching: str = "exact",
                  factor_mode: str = WEIGHTED_JACCARD) -> float:
    """One update of a pair's score from the previous score matrix."""
    dw = DescriptorWeights.for_graph(g)
    acc = 0.0
    for label, nu, nv in zip(pair.labels, pair.neighbors_u, pair.neighbors_v):
        score = max_match_score(
            nu, nv,
            lambda x, y: _cell_sim(g, dw, pair.u, pair.v, x, y, prev),
            mode=matching)
        acc += weights[label] * score
    lu = g.predicate_set(pair.u)
    lv = g.predicate_set(pair.v)
    union = len(lu | lv)
    if factor_mode == INVERSE_UNION:
        factor = 1.0 / union
    else:
        factor = len(lu & lv) / union
    return (1.0 - beta) * factor * acc + beta


# -- candidate generation and the packed form used by the kernels ------------


def build_candidate_pairs(
        g: Graph,
        params: IterationParams) -> tuple[SimilarityMatrix, list[CandidatePair]]:
    """Enumerate subject pairs sharing a non-noise predicate.

    Triples are scanned in sorted (label, subject, object) order so the
    pair list is canonical for a given graph. Every generated pair records
    all its common predicates (noise ones included) with both per-predicate
    neighbor sets, and starts with similarity 1.
    """
    display = g.display
    noise_cutoff = params.noise_fraction * g.subject_count
    label_order = sorted(range(len(g.labels)), key=g.label)

    seen: set[tuple[int, int]] = set()
    ordered: list[tuple[int, int]] = []
    for p in label_order:
        count = g.predicate_subject_count.get(p, 0)
        if count == 0 or count > noise_cutoff:
            continue
        subs = sorted((u for u in g.subjects if p in g.spo[u]), key=display)
        for i in range(len(subs)):
            for j in range(i + 1, len(subs)):
                u, v = subs[i], subs[j]
                key = (u, v) if u <= v else (v, u)
                if key not in seen:
                    seen.add(key)
                    ordered.append((u, v))

    pairs: list[CandidatePair] = []
    for u, v in ordered:
        common = sorted(g.predicate_set(u) & g.predicate_set(v), key=g.label)
        nbrs_u = tuple(tuple(sorted(g.neighbors_by_predicate(u, p), key=display))
                       for p in common)
        nbrs_v = tuple(tuple(sorted(g.neighbors_by_predicate(v, p), key=display))
                       for p in common)
        pairs.append(CandidatePair(u, v, tuple(common), nbrs_u, nbrs_v))
    return SimilarityMatrix.from_pairs(pairs, 1.0), pairs


@dataclass
class PairArrays:
    """Flat, kernel-ready encoding of all pairs and matching cells.

    Each matching cell is either a constant (identity, literal score, or
    zero) or a reference into the pair score vector of the previous
    iteration.
    """

    factor: np.ndarray
    group_start: np.ndarray
    group_weight: np.ndarray
    group_rows: np.ndarray
    group_cols: np.ndarray
    cell_start: np.ndarray
    cell_ref: np.ndarray
    cell_const: np.ndarray
    max_min_side: int


def build_pair_arrays(g: Graph, pairs: Sequence[CandidatePair],
                      matrix: SimilarityMatrix,
                      params: IterationParams) -> PairArrays:
    dw = DescriptorWeights.for_graph(g)
    factor = np.empty(len(pairs), dtype=np.float64)
    group_start = [0]
    group_weight: list[float] = []
    group_rows: list[int] = []
    group_cols: list[int] = []
    cell_start = [0]
    cell_ref: list[int] = []
    cell_const: list[float] = []
    max_min_side = 0

    for i, pair in enumerate(pairs):
        lu = g.predicate_set(pair.u)
        lv = g.predicate_set(pair.v)
        union = len(lu | lv)
        if params.factor_mode == INVERSE_UNION:
            factor[i] = 1.0 / union
        else:
            factor[i] = len(lu & lv) / union

        weights = dw.pair_property_weights(pair.u, pair.v)
        for label, nu, nv in zip(pair.labels, pair.neighbors_u,
                                 pair.neighbors_v):
            group_weight.append(weights[label])
            group_rows.append(len(nu))
            group_cols.append(len(nv))
            max_min_side = max(max_min_side, min(len(nu), len(nv)))
            for x in nu:
                node_x = g.node(x)
                for y in nv:
                    if x == y:
                        cell_ref.append(-1)
                        cell_const.append(1.0)
                        continue
                    node_y = g.node(y)
                    if node_x.is_literal and node_y.is_literal:
                        cell_ref.append(-1)
                        cell_const.append(
                            _literal_cell_sim(g, dw, pair.u, pair.v, x, y))
                    elif node_x.is_entity and node_y.is_entity:
                        idx = matrix.index_of(x, y)
                        if idx is None:
                            cell_ref.append(-1)
                            cell_const.append(0.0)
                        else:
                            cell_ref.append(idx)
                            cell_const.append(0.0)
                    else:
                        cell_ref.append(-1)
                        cell_const.append(0.0)
            cell_start.append(len(cell_ref))
        group_start.append(len(group_weight))

    if params.matching == "exact" and max_min_side > EXACT_DP_LIMIT:
        raise ValueError(
            f"exact matching limited to {EXACT_DP_LIMIT} elements on the "
            f"smaller side (largest neighbor group has {max_min_side}); "
            "use matching=auto or greedy")

    return PairArrays(
        factor=factor,
        group_start=np.asarray(group_start, dtype=np.int64),
        group_weight=np.asarray(group_weight, dtype=np.float64),
        group_rows=np.asarray(group_rows, dtype=np.int32),
        group_cols=np.asarray(group_cols, dtype=np.int32),
        cell_start=np.asarray(cell_start, dtype=np.int64),
        cell_ref=np.asarray(cell_ref, dtype=np.int32),
        cell_const=np.asarray(cell_const, dtype=np.float64),
        max_min_side=max_min_side,
    )


def _run_one_iteration(arrays: PairArrays, prev: np.ndarray, out: np.ndarray,
                       beta: float, exact_limit: int, threads: int) -> None:
    n = len(prev)
    if threads <= 1 or n < 64:
        kernels.score_pairs(prev, out, arrays.factor, arrays.group_start,
                            arrays.group_weight, arrays.group_rows,
                            arrays.group_cols, arrays.cell_start,
                            arrays.cell_ref, arrays.cell_const,
                            beta, exact_limit, 0, n)
        return
    chunk = (n + threads - 1) // threads
    bounds = [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]
    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(kernels.score_pairs, prev, out, arrays.factor,
                        arrays.group_start, arrays.group_weight,
                        arrays.group_rows, arrays.group_cols,
                        arrays.cell_start, arrays.cell_ref, arrays.cell_const,
                        beta, exact_limit, lo, hi)
            for lo, hi in bounds
        ]
        for f in futures:
            f.result()


def run_sim_measure(g: Graph, params: Optional[IterationParams] = None,
                    threads: int = 1) -> SimResult:
    """Iterate pair scores to convergence.

    Stops when the largest per-pair change drops to the convergence
    threshold or after max_iter iterations; reports the per-iteration
    change sequence alongside the final matrix.
    """
    params = params or IterationParams()
    matrix, pairs = build_candidate_pairs(g, params)
    if not pairs:
        return SimResult(matrix, pairs, 0, [])
    arrays = build_pair_arrays(g, pairs, matrix, params)

    prev = np.ones(len(pairs), dtype=np.float64)
    out = np.empty_like(prev)
    deltas: list[float] = []
    for _ in range(params.max_iter):
        _run_one_iteration(arrays, prev, out, params.beta,
                           params.exact_limit, threads)
        delta = float(np.max(np.abs(out - prev)))
        deltas.append(delta)
        prev, out = out, prev
        if delta <= params.ict:
            break
    final = SimilarityMatrix([(p.u, p.v) for p in pairs], prev.copy())
    return SimResult(final, pairs, len(deltas), deltas)
