"""Scoring generated classes against gold type assignments."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .classes import TypeClassMap
from .model import RDF_TYPE, Graph


class UnscorableError(ValueError):
    """No classed subject carries a gold type."""


def extract_gold(g: Graph, type_predicate: str = RDF_TYPE) -> dict[int, set[str]]:
    """Gold types per subject, read from triples under the type predicate."""
    pid = g.label_id(type_predicate)
    if pid is None:
        return {}
    gold: dict[int, set[str]] = {}
    for u in g.subjects:
        objs = g.neighbors_by_predicate(u, pid)
        if objs:
            gold[u] = {g.display(o) for o in objs}
    return gold


@dataclass
class ClassScore:
    class_id: int
    label: str
    size: int
    labeled: int
    correct: int


@dataclass
class EvaluationReport:
    precision: float
    class_count: int
    labeled_members: int
    per_class: list[ClassScore]


def evaluate(classes: TypeClassMap, gold: dict[int, set[str]]) -> EvaluationReport:
    """Majority-label precision.

    Each class is labeled with the most frequent gold type among its
    labeled members (ties break lexicographically); a member counts as
    correct when the class label is one of its gold types. Members without
    gold types are ignored on both sides of the ratio.
    """
    per_class: list[ClassScore] = []
    labeled_total = 0
    correct_total = 0
    for cid, members in enumerate(classes.classes()):
        votes: Counter = Counter()
        labeled = 0
        for m in members:
            types = gold.get(m)
            if types:
                labeled += 1
                votes.update(types)
        if labeled == 0:
            continue
        top = max(votes.values())
        label = min(t for t, c in votes.items() if c == top)
        correct = sum(1 for m in members if label in gold.get(m, ()))
        per_class.append(ClassScore(cid, label, len(members), labeled, correct))
        labeled_total += labeled
        correct_total += correct
    if labeled_total == 0:
        raise UnscorableError("no classed subject has a gold type")
    return EvaluationReport(
        precision=correct_total / labeled_total,
        class_count=len(classes),
        labeled_members=labeled_total,
        per_class=per_class,
    )


def precision(classes: TypeClassMap, gold: dict[int, set[str]]) -> float:
    return evaluate(classes, gold).precision
