"""Importance weights for entity descriptors.

An entity is described by its predicates and by the words of its literal
neighbors. Both descriptor kinds are weighted by tf-idf over the graph:
the weight of a descriptor grows with its frequency at the entity and
shrinks with its frequency across the dataset, so labels carried by every
subject contribute almost nothing to pair similarity.
"""

from __future__ import annotations

import math
import re
from collections import Counter

from .model import Graph

_TOKEN_RE = re.compile(r"[^\W_]+")


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens; splits on runs of non-alphanumerics."""
    return _TOKEN_RE.findall(text.lower())


def raw_frequency(g: Graph, p: int, u: int) -> int:
    """Number of distinct triples with subject u and predicate p."""
    return len(g.neighbors_by_predicate(u, p))


def term_freq(g: Graph, p: int, u: int) -> float:
    """Share of u's triples carrying predicate p; the shares over all of
    u's predicates sum to 1."""
    by_pred = g.spo.get(u)
    if not by_pred:
        raise ValueError(f"node {u} has no outgoing triples")
    total = sum(len(objs) for objs in by_pred.values())
    return len(by_pred.get(p, ())) / total


def inverse_doc_freq(g: Graph, p: int) -> float:
    """ln(distinct subjects / subjects using p); 0 when p is universal."""
    used = g.predicate_subject_count.get(p, 0)
    if used == 0:
        raise ValueError(f"predicate {p} is not used by any subject")
    return math.log(g.subject_count / used)


def _normalize(raw: dict, keys) -> dict:
    """Scale weights to sum 1; uniform fallback when all raw mass is zero."""
    total = sum(raw.values())
    if total <= 0.0:
        share = 1.0 / len(keys)
        return {k: share for k in keys}
    return {k: raw[k] / total for k in keys}


class DescriptorWeights:
    """Precomputed tf-idf tables for one graph (immutable after build)."""

    def __init__(self, g: Graph) -> None:
        self.graph = g
        # (subject, predicate) -> tfidf
        self.property_tfidf: dict[int, dict[int, float]] = {}
        idf_cache: dict[int, float] = {
            p: inverse_doc_freq(g, p) for p in g.predicate_subject_count
        }
        for u, by_pred in g.spo.items():
            total = sum(len(objs) for objs in by_pred.values())
            self.property_tfidf[u] = {
                p: (len(objs) / total) * idf_cache[p]
                for p, objs in by_pred.items()
            }

        # Literal word bags per subject: each triple with a literal object
        # contributes that literal's tokens once.
        self.token_bags: dict[int, Counter] = {}
        doc_freq: Counter = Counter()
        for u, by_pred in g.spo.items():
            bag: Counter = Counter()
            for objs in by_pred.values():
                for o in objs:
                    n = g.node(o)
                    if n.is_literal:
                        bag.update(tokenize(n.lexical))
            if bag:
                self.token_bags[u] = bag
                doc_freq.update(bag.keys())
        n_docs = len(self.token_bags)
        self.token_idf: dict[str, float] = {
            t: math.log(n_docs / df) for t, df in doc_freq.items()
        }
        self.token_tfidf: dict[int, dict[str, float]] = {}
        for u, bag in self.token_bags.items():
            total = sum(bag.values())
            self.token_tfidf[u] = {
                t: (c / total) * self.token_idf[t] for t, c in bag.items()
            }

    @classmethod
    def for_graph(cls, g: Graph) -> "DescriptorWeights":
        cached = getattr(g, "_descriptor_weights", None)
        if cached is None:
            cached = cls(g)
            g._descriptor_weights = cached  # type: ignore[attr-defined]
        return cached

    def pair_property_weights(self, u: int, v: int) -> dict[int, float]:
        """Normalized weights over the predicates u and v share."""
        common = self.graph.predicate_set(u) & self.graph.predicate_set(v)
        if not common:
            raise ValueError(f"nodes {u} and {v} share no predicate")
        tu = self.property_tfidf.get(u, {})
        tv = self.property_tfidf.get(v, {})
        raw = {p: tu.get(p, 0.0) + tv.get(p, 0.0) for p in common}
        keys = sorted(common)
        return _normalize(raw, keys)

    def pair_literal_term_weights(self, u: int, v: int,
                                  x: int, y: int) -> dict[str, float]:
        """Normalized token weights for one literal neighbor pair (x of u,
        y of v), over the union of both literals' tokens."""
        nx, ny = self.graph.node(x), self.graph.node(y)
        union = sorted(set(tokenize(nx.lexical)) | set(tokenize(ny.lexical)))
        if not union:
            raise ValueError("both lexical forms are empty after tokenization")
        tu = self.token_tfidf.get(u, {})
        tv = self.token_tfidf.get(v, {})
        raw = {t: tu.get(t, 0.0) + tv.get(t, 0.0) for t in union}
        return _normalize(raw, union)

    def pair_literal_table(self, u: int, v: int) -> dict[str, float]:
        """Token weights normalized over the union of both subjects' bags;
        used for the weights CSV dump."""
        tokens = sorted(set(self.token_bags.get(u, ())) | set(self.token_bags.get(v, ())))
        if not tokens:
            return {}
        tu = self.token_tfidf.get(u, {})
        tv = self.token_tfidf.get(v, {})
        raw = {t: tu.get(t, 0.0) + tv.get(t, 0.0) for t in tokens}
        return _normalize(raw, tokens)


def pair_property_weights(g: Graph, u: int, v: int) -> dict[int, float]:
    return DescriptorWeights.for_graph(g).pair_property_weights(u, v)


def pair_literal_term_weights(g: Graph, u: int, v: int, x: int, y: int) -> dict[str, float]:
    return DescriptorWeights.for_graph(g).pair_literal_term_weights(u, v, x, y)
