"""Human-readable class names derived from member identifiers."""

from __future__ import annotations

import re
from collections import Counter

from .classes import TypeClassMap
from .model import Graph

_CAMEL_RE = re.compile(
    r"[A-Z]+(?![a-z])|[A-Z][a-z0-9]*|[a-z0-9]+")
_SEPARATORS = ":_-."


def _clean_local_name(identifier: str) -> str:
    """Local name with namespace, numeric suffix and separators removed.

    "http://x/SurgeryProcedure:236" -> "SurgeryProcedure",
    "Student49" -> "Student". A prefixed remainder such as "ns:Student"
    keeps only the part after the prefix.
    """
    local = re.split(r"[/#]", identifier)[-1]
    local = local.rstrip("0123456789").rstrip(_SEPARATORS)
    if ":" in local:
        local = local.rsplit(":", 1)[-1]
    return local


def candidate_name(identifier: str) -> str:
    """Canonical name token for one member identifier; empty if none."""
    local = _clean_local_name(identifier)
    return "".join(_CAMEL_RE.findall(local))


def name_classes(g: Graph, classes: TypeClassMap) -> dict[int, str]:
    """Deterministic unique names of the form C-<Token>[-k].

    Each member votes once for its canonical name token; the most common
    token wins, ties going to the lexicographically smallest. Classes
    sharing a base name get -1, -2, ... suffixes in class id order.
    """
    bases: list[str] = []
    for cid, members in enumerate(classes.classes()):
        votes = Counter()
        for m in members:
            token = candidate_name(g.display(m))
            if token:
                votes[token] += 1
        if not votes:
            bases.append(f"C-Unnamed-{cid}")
            continue
        top = max(votes.values())
        winner = min(t for t, c in votes.items() if c == top)
        bases.append("C-" + winner)

    counts = Counter(bases)
    seen: Counter = Counter()
    names: dict[int, str] = {}
    for cid, base in enumerate(bases):
        if counts[base] == 1:
            names[cid] = base
        else:
            seen[base] += 1
            names[cid] = f"{base}-{seen[base]}"
    return names
