"""Automatic typed summary graphs for RDF data.

Pipeline: parse N-Triples, weight entity descriptors by tf-idf, iterate
weight-aware pairwise similarities to a fixed point, cluster entities into
type classes under a dissimilarity threshold (fixed or auto-tuned by the
favorability score), then emit the class-level summary graph with a
stability value per relation.
"""

from .classes import TypeClassMap, UnionFind, create_classes
from .evaluation import UnscorableError, evaluate, extract_gold, precision
from .kernels import available_backends, backend_name
from .metrics import (FavorabilityReport, SummaryGraph, ThresholdSearchParams,
                      build_summary_graph, cps_edge, cps_graph, favorability,
                      find_optimum_epsilon, rmsd, typification_rate)
from .model import RDF_TYPE, Graph, Node, Triple
from .naming import name_classes
from .ntriples import ParseError, parse_ntriples, parse_ntriples_file, serialize_ntriples
from .similarity import (CandidatePair, IterationParams, SimilarityMatrix,
                         SimResult, build_candidate_pairs, jaccard,
                         literal_sim, max_match_score, pair_sim_step,
                         run_sim_measure)
from .weights import (DescriptorWeights, inverse_doc_freq,
                      pair_literal_term_weights, pair_property_weights,
                      raw_frequency, term_freq, tokenize)

__version__ = "0.1.0"

__all__ = [
    "CandidatePair", "DescriptorWeights", "FavorabilityReport", "Graph",
    "IterationParams", "Node", "ParseError", "RDF_TYPE", "SimResult",
    "SimilarityMatrix", "SummaryGraph", "ThresholdSearchParams",
    "Triple", "TypeClassMap", "UnionFind", "UnscorableError",
    "available_backends", "backend_name", "build_candidate_pairs",
    "build_summary_graph", "cps_edge", "cps_graph", "create_classes",
    "evaluate", "extract_gold", "favorability", "find_optimum_epsilon",
    "inverse_doc_freq", "jaccard", "literal_sim", "max_match_score",
    "name_classes", "pair_literal_term_weights", "pair_property_weights",
    "pair_sim_step", "parse_ntriples", "parse_ntriples_file", "precision",
    "raw_frequency", "rmsd", "run_sim_measure", "serialize_ntriples",
    "term_freq", "tokenize", "typification_rate",
]
