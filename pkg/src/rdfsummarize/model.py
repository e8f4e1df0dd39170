"""Directed labeled multigraph built from RDF triples.

Nodes are interned: a node id is an integer handle and two handles are
equal exactly when the underlying lexical identities are equal. Predicate
labels are interned separately. The graph is append-only during parsing
and treated as immutable afterwards, so concurrent readers are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDF_TYPE = RDF_NS + "type"
RDF_LANG_STRING = RDF_NS + "langString"

IRI = "iri"
BLANK = "blank"
LITERAL = "literal"


@dataclass(frozen=True)
class Node:
    """A graph node: an IRI, a blank node, or a literal value.

    Literal identity is the tuple (lexical, datatype, language); identical
    tuples intern to a single node. A language-tagged literal always has
    the langString datatype.
    """

    kind: str
    lexical: str
    datatype: Optional[str] = None
    language: Optional[str] = None

    @property
    def is_literal(self) -> bool:
        return self.kind == LITERAL

    @property
    def is_entity(self) -> bool:
        """IRIs and blank nodes; blank nodes behave like entity nodes."""
        return self.kind != LITERAL


@dataclass(frozen=True)
class Triple:
    subject: int
    predicate: int
    object: int


class Graph:
    """Indexed triple store with subject -> predicate -> objects access."""

    def __init__(self) -> None:
        self.nodes: list[Node] = []
        self.labels: list[str] = []
        self.triples: list[Triple] = []
        # subject id -> predicate id -> set of object ids
        self.spo: dict[int, dict[int, set[int]]] = {}
        self.predicate_subject_count: dict[int, int] = {}
        self._node_ids: dict[tuple, int] = {}
        self._label_ids: dict[str, int] = {}
        self._subjects: list[int] = []
        self._triple_keys: set[tuple[int, int, int]] = set()

    # -- interning ---------------------------------------------------------

    def _intern(self, key: tuple, node: Node) -> int:
        nid = self._node_ids.get(key)
        if nid is None:
            nid = len(self.nodes)
            self.nodes.append(node)
            self._node_ids[key] = nid
        return nid

    def intern_iri(self, iri: str) -> int:
        return self._intern((IRI, iri), Node(IRI, iri))

    def intern_blank(self, label: str) -> int:
        return self._intern((BLANK, label), Node(BLANK, label))

    def intern_literal(self, lexical: str, datatype: Optional[str] = None,
                       language: Optional[str] = None) -> int:
        if language is not None:
            datatype = RDF_LANG_STRING
        key = (LITERAL, lexical, datatype, language)
        return self._intern(key, Node(LITERAL, lexical, datatype, language))

    def intern_label(self, iri: str) -> int:
        pid = self._label_ids.get(iri)
        if pid is None:
            pid = len(self.labels)
            self.labels.append(iri)
            self._label_ids[iri] = pid
        return pid

    # -- construction ------------------------------------------------------

    def add_triple(self, s: int, p: int, o: int) -> bool:
        """Add one triple; exact duplicates are dropped. Returns True if added."""
        key = (s, p, o)
        if key in self._triple_keys:
            return False
        self._triple_keys.add(key)
        self.triples.append(Triple(s, p, o))
        by_pred = self.spo.get(s)
        if by_pred is None:
            by_pred = {}
            self.spo[s] = by_pred
            self._subjects.append(s)
        objs = by_pred.get(p)
        if objs is None:
            by_pred[p] = {o}
            self.predicate_subject_count[p] = self.predicate_subject_count.get(p, 0) + 1
        else:
            objs.add(o)
        return True

    # -- access ------------------------------------------------------------

    def node(self, nid: int) -> Node:
        return self.nodes[nid]

    def label(self, pid: int) -> str:
        return self.labels[pid]

    def label_id(self, iri: str) -> Optional[int]:
        return self._label_ids.get(iri)

    @property
    def subjects(self) -> list[int]:
        """Distinct subject node ids in first-seen order."""
        return self._subjects

    @property
    def subject_count(self) -> int:
        return len(self._subjects)

    def predicate_set(self, u: int) -> frozenset[int]:
        """All predicate label ids on triples with subject u (empty if none)."""
        by_pred = self.spo.get(u)
        if not by_pred:
            return frozenset()
        return frozenset(by_pred)

    def neighbors_by_predicate(self, u: int, p: int) -> frozenset[int]:
        """Object ids of triples (u, p, *); empty set when absent."""
        by_pred = self.spo.get(u)
        if not by_pred:
            return frozenset()
        objs = by_pred.get(p)
        return frozenset(objs) if objs else frozenset()

    def display(self, nid: int) -> str:
        """Lexical identity used in reports and exports."""
        n = self.nodes[nid]
        if n.kind == BLANK:
            return "_:" + n.lexical
        return n.lexical

    def is_subject(self, nid: int) -> bool:
        return nid in self.spo

    def without_predicate(self, label_iri: str) -> "Graph":
        """A copy of this graph with all triples under one predicate removed."""
        pid = self._label_ids.get(label_iri)
        out = Graph()
        for t in self.triples:
            if pid is not None and t.predicate == pid:
                continue
            s, p, o = self.nodes[t.subject], self.labels[t.predicate], self.nodes[t.object]
            out.add_triple(out._intern_node(s), out.intern_label(p), out._intern_node(o))
        return out

    def _intern_node(self, n: Node) -> int:
        if n.kind == IRI:
            return self.intern_iri(n.lexical)
        if n.kind == BLANK:
            return self.intern_blank(n.lexical)
        return self.intern_literal(n.lexical, n.datatype, n.language)

    def triple_count(self) -> int:
        return len(self.triples)
