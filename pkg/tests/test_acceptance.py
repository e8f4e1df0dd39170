"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s`.
"""

import json
import random
import time
from contextlib import contextmanager

import numpy as np
import pytest

import rdfsummarize as rs
from rdfsummarize.classes import TypeClassMap, create_classes
from rdfsummarize.metrics import (ThresholdSearchParams, build_summary_graph,
                                  favorability, find_optimum_epsilon)
from rdfsummarize.similarity import build_candidate_pairs

from conftest import data_path, run_cli
from corpora import planted_types, random_graph_nt, sparse_corpus, universal_name_type_corpus
from oracle import OracleSim
from test_classes import matrix_from


@contextmanager
def criterion(number, title):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} ({title}): FAIL")
        raise
    print(f"ACCEPTANCE {number} ({title}): PASS")


def test_1_oracle_equivalence():
    with criterion(1, "oracle equivalence on 200 random graphs"):
        start = time.monotonic()
        checked_pairs = 0
        for seed in range(200):
            g = rs.parse_ntriples(random_graph_nt(seed + 1000))
            res = rs.run_sim_measure(g, rs.IterationParams(matching="exact"))
            want, want_iters = OracleSim(g, beta=0.15).run(max_iter=10,
                                                           ict=0.001)
            assert res.iterations == want_iters
            assert len(res.matrix) == len(want)
            for (u, v), score in res.matrix.items():
                key = (u, v) if u <= v else (v, u)
                assert abs(score - want[key]) <= 1e-9
                checked_pairs += 1
        elapsed = time.monotonic() - start
        assert checked_pairs > 0
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_2_convergence_on_bundled_corpora():
    with criterion(2, "bundled corpora converge in <= 5 iterations"):
        for name in ("demo.nt", "lubm_like.nt", "semdb_like.nt"):
            start = time.monotonic()
            g = rs.parse_ntriples_file(data_path(name))
            assert g.triple_count() <= 2000
            res = rs.run_sim_measure(
                g, rs.IterationParams(max_iter=10, ict=0.001))
            elapsed = time.monotonic() - start
            assert res.iterations <= 5, f"{name}: {res.iterations} iterations"
            assert res.deltas[-1] <= 0.001
            assert elapsed < 30.0, f"{name} took {elapsed:.1f}s"


def test_3_weight_ordering():
    with criterion(3, "takesCourse outweighs universal name/type"):
        g = rs.parse_ntriples(universal_name_type_corpus())
        dw = rs.DescriptorWeights.for_graph(g)
        students = [u for u in g.subjects if "Student" in g.display(u)]
        take = g.label_id("urn:u:takesCourse")
        name = g.label_id("urn:u:name")
        type_p = next(p for p, lbl in enumerate(g.labels) if lbl == rs.RDF_TYPE)
        assert len(students) >= 2
        for i, u in enumerate(students):
            for v in students[i + 1:]:
                w = dw.pair_property_weights(u, v)
                assert w[take] > w[name]
                assert w[take] > w[type_p]
        # weight normalization holds for every candidate pair in the corpus
        _, pairs = build_candidate_pairs(g, rs.IterationParams())
        for pair in pairs:
            w = dw.pair_property_weights(pair.u, pair.v)
            assert abs(sum(w.values()) - 1.0) <= 1e-9


def test_4_clustering_correctness(tmp_path):
    with criterion(4, "planted 3-type corpus clusters correctly"):
        start = time.monotonic()
        corpus = planted_types(n_types=3, per_type=8)
        (tmp_path / "planted.nt").write_text(corpus)
        g = rs.parse_ntriples(corpus)
        gold = rs.extract_gold(g)
        res = rs.run_sim_measure(g, rs.IterationParams())

        # some epsilon in the auto-search range reaches precision 1.0
        perfect = [
            eps for eps in np.linspace(0.0, 1.0, 21)
            if rs.precision(
                create_classes(res.matrix, res.pairs, float(eps),
                               subjects=g.subjects), gold) == 1.0
        ]
        assert perfect, "no epsilon reaches precision 1.0"

        proc = run_cli(["find-threshold", "--input", "planted.nt"],
                       cwd=tmp_path)
        assert proc.returncode == 0, proc.stderr
        eps = json.loads(proc.stdout)["epsilon"]
        classes = create_classes(res.matrix, res.pairs, eps,
                                 subjects=g.subjects)
        assert rs.precision(classes, gold) >= 0.95
        elapsed = time.monotonic() - start
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


def test_5_metric_identities(demo_graph, lubm_graph, semdb_graph):
    with criterion(5, "metric identities"):
        # favorability identity on every trace row of every bundled run
        for g in (demo_graph, lubm_graph, semdb_graph):
            res = rs.run_sim_measure(g, rs.IterationParams())
            _, trace = find_optimum_epsilon(g, res.matrix, res.pairs,
                                            ThresholdSearchParams())
            assert trace
            for row in trace:
                want = (row.stability * row.typification_rate
                        / (row.rmsd + 0.1))
                assert row.favorability == want

        # full-CPS construction: every member of c1 links into c2
        rows = []
        for i in range(5):
            rows.append(f"<urn:f:a{i}> <urn:f:rel> <urn:f:b{i % 2}> .")
        for i in range(2):
            rows.append(f'<urn:f:b{i}> <urn:f:tag> "target" .')
        g = rs.parse_ntriples("\n".join(rows))
        a = [u for u in g.subjects if "a" in g.display(u)[-3:]]
        b = [u for u in g.subjects if "b" in g.display(u)[-3:]]
        sg = build_summary_graph(g, TypeClassMap([a, b]))
        rel = g.label_id("urn:f:rel")
        assert sg.edges[(0, rel, 1)] == 1.0

        # identical-member class: per-class (and total) RMSD is exactly 0
        twins = rs.parse_ntriples(
            "<urn:f:x> <urn:f:p> <urn:f:o> .\n<urn:f:y> <urn:f:p> <urn:f:o> .")
        cm = TypeClassMap([list(twins.subjects)])
        assert rs.rmsd(twins, cm) == 0.0


def test_6_partition_properties():
    with criterion(6, "partition order-independence and monotonicity"):
        rng = random.Random(99)

        def random_matrix():
            scores = {}
            nodes = list(range(14))
            for i in nodes:
                for j in nodes[i + 1:]:
                    if rng.random() < 0.35:
                        scores[(i, j)] = rng.random()
            return matrix_from(scores), nodes

        (matrix, pairs), nodes = random_matrix()
        want = create_classes(matrix, pairs, 0.55, subjects=nodes)
        for _ in range(50):
            shuffled = pairs[:]
            rng.shuffle(shuffled)
            got = create_classes(matrix, shuffled, 0.55, subjects=nodes)
            assert got == want

        for _ in range(20):
            (matrix, pairs), nodes = random_matrix()
            e1, e2 = sorted((rng.random(), rng.random()))
            fine = create_classes(matrix, pairs, e1, subjects=nodes)
            coarse = create_classes(matrix, pairs, e2, subjects=nodes)
            for ms in fine.classes():
                assert any(set(ms) <= set(big) for big in coarse.classes())


def test_7_determinism_across_threads(tmp_path):
    with criterion(7, "byte-identical output for 1 and N threads"):
        outputs = []
        for threads in ("1", "4"):
            proc = run_cli(
                ["summarize", "--input", data_path("semdb_like.nt"),
                 "--threads", threads, "--output", "out.json",
                 "--dump-similarity", "sim.csv", "--dump-trace", "trace.csv"],
                cwd=tmp_path)
            assert proc.returncode == 0, proc.stderr
            outputs.append((proc.stdout,
                            (tmp_path / "out.json").read_bytes(),
                            (tmp_path / "sim.csv").read_bytes(),
                            (tmp_path / "trace.csv").read_bytes()))
        assert outputs[0] == outputs[1]


def test_8_sparse_complexity_smoke():
    with criterion(8, "subquadratic pair growth on sparse corpora"):
        counts = {}
        for n in (500, 1000):
            g = rs.parse_ntriples(sparse_corpus(n))
            assert g.subject_count == n
            _, pairs = build_candidate_pairs(g, rs.IterationParams())
            counts[n] = len(pairs)
        growth = counts[1000] / counts[500]
        assert growth < 3.0, f"pair growth factor {growth:.2f}"
