"""Serialization of summary graphs, score matrices and search traces.

All writers emit canonical (sorted) rows so repeated runs produce
byte-identical files, and write through a temporary file plus rename so a
failed run leaves no partial artifact.
"""

from __future__ import annotations

import csv
import gzip
import io
import json
import os
import re
import tempfile
from typing import Iterable, Sequence

from .evaluation import EvaluationReport
from .metrics import FavorabilityReport, SummaryGraph
from .model import RDF_TYPE, Graph
from .naming import name_classes
from .ntriples import format_node
from .similarity import CandidatePair, SimilarityMatrix
from .weights import DescriptorWeights

CLASS_IRI_PREFIX = "urn:summary:class:"


def atomic_write(path: str, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def atomic_write_text(path: str, text: str) -> None:
    if path.endswith(".gz"):
        buf = io.BytesIO()
        # mtime pinned so gzip output is reproducible
        with gzip.GzipFile(fileobj=buf, mode="wb", mtime=0) as gz:
            gz.write(text.encode("utf-8"))
        atomic_write(path, buf.getvalue())
    else:
        atomic_write(path, text.encode("utf-8"))


def summary_to_dict(g: Graph, sg: SummaryGraph,
                    names: dict[int, str]) -> dict:
    classes = []
    for cid, members in enumerate(sg.classes.classes()):
        classes.append({
            "id": cid,
            "name": names[cid],
            "members": sorted(g.display(m) for m in members),
            "datatype_properties": sorted(
                g.label(p) for p in sg.datatype_properties.get(cid, ())),
        })
    edges = [
        {
            "source": names[c1],
            "predicate": g.label(p),
            "target": names[c2],
            "cps": sg.edges[(c1, p, c2)],
        }
        for c1, p, c2 in sorted(
            sg.edges, key=lambda k: (names[k[0]], g.label(k[1]), names[k[2]]))
    ]
    return {"classes": classes, "edges": edges}


def summary_to_json(g: Graph, sg: SummaryGraph, names: dict[int, str]) -> str:
    return json.dumps(summary_to_dict(g, sg, names), indent=2) + "\n"


def _dot_escape(text: str) -> str:
    return text.replace("\\", "\\\\").replace('"', '\\"')


def _local_name(iri: str) -> str:
    return re.split(r"[/#:]", iri)[-1] or iri


def summary_to_dot(g: Graph, sg: SummaryGraph, names: dict[int, str]) -> str:
    """GraphViz digraph with CPS percentages as edge labels."""
    lines = ["digraph summary {"]
    for cid, members in enumerate(sg.classes.classes()):
        name = _dot_escape(names[cid])
        lines.append(f'  c{cid} [label="{name}\\n({len(members)})"];')
    for c1, p, c2 in sorted(
            sg.edges, key=lambda k: (names[k[0]], g.label(k[1]), names[k[2]])):
        cps = sg.edges[(c1, p, c2)]
        label = f"{_local_name(g.label(p))} ({cps * 100:.1f}%)"
        lines.append(f'  c{c1} -> c{c2} [label="{_dot_escape(label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def summary_to_ntriples(g: Graph, sg: SummaryGraph,
                        names: dict[int, str]) -> str:
    """Type assertions linking each member to its generated class IRI."""
    rows = []
    for cid, members in enumerate(sg.classes.classes()):
        class_iri = f"<{CLASS_IRI_PREFIX}{names[cid]}>"
        for m in members:
            rows.append((format_node(g.node(m)), class_iri))
    rows.sort()
    return "".join(f"{s} <{RDF_TYPE}> {c} .\n" for s, c in rows)


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def similarity_csv(g: Graph, matrix: SimilarityMatrix) -> str:
    rows = []
    for (u, v), score in matrix.items():
        du, dv = sorted((g.display(u), g.display(v)))
        rows.append((du, dv, f"{score:.9f}"))
    rows.sort()
    return _csv_text(("node_u", "node_v", "score"), rows)


def weights_csv(g: Graph, pairs: Sequence[CandidatePair]) -> str:
    """Per-pair descriptor weights, property and literal-word rows."""
    dw = DescriptorWeights.for_graph(g)
    rows = []
    for pair in pairs:
        du, dv = sorted((g.display(pair.u), g.display(pair.v)))
        for p, w in sorted(dw.pair_property_weights(pair.u, pair.v).items(),
                           key=lambda kv: g.label(kv[0])):
            rows.append((du, dv, "Property", g.label(p), f"{w:.9f}"))
        for token, w in sorted(dw.pair_literal_table(pair.u, pair.v).items()):
            rows.append((du, dv, "Literal", token, f"{w:.9f}"))
    rows.sort()
    return _csv_text(
        ("node_u", "node_v", "descriptor_type", "descriptor", "weight"), rows)


def trace_csv(trace: Sequence[FavorabilityReport]) -> str:
    rows = [
        (f"{r.epsilon:.9f}", f"{r.stability:.9f}", f"{r.typification_rate:.9f}",
         f"{r.rmsd:.9f}", f"{r.favorability:.9f}")
        for r in trace
    ]
    return _csv_text(
        ("epsilon", "stability", "typification_rate", "rmsd", "favorability"),
        rows)


def evaluation_to_dict(report: EvaluationReport, names: dict[int, str]) -> dict:
    return {
        "precision": report.precision,
        "class_count": report.class_count,
        "labeled_members": report.labeled_members,
        "per_class": [
            {
                "name": names.get(s.class_id, f"C-{s.class_id}"),
                "label": s.label,
                "size": s.size,
                "correct": s.correct,
            }
            for s in report.per_class
        ],
    }
