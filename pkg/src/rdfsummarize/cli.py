"""Command-line front end: summarize, find-threshold, and eval."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional, Sequence

from . import __version__, exports
from .classes import create_classes
from .evaluation import UnscorableError, evaluate, extract_gold
from .metrics import (ThresholdSearchParams, build_summary_graph, favorability,
                      find_optimum_epsilon)
from .model import RDF_TYPE, Graph
from .naming import name_classes
from .ntriples import ParseError, parse_ntriples_file
from .similarity import INVERSE_UNION, WEIGHTED_JACCARD, IterationParams, run_sim_measure

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_INPUT = 2

_FACTOR_MODES = {"jaccard": WEIGHTED_JACCARD, "inverse-union": INVERSE_UNION}

_CONFIG_CONVERTERS = {
    "input": str, "output": str, "beta": float, "max_iter": int,
    "ict": float, "epsilon": float, "min_eps": float, "max_eps": float,
    "tries": int, "ect": float, "matching": str, "factor": str,
    "noise_fraction": float, "type_predicate": str, "format": str,
    "threads": int, "gold": str, "dump_similarity": str,
    "dump_weights": str, "dump_trace": str,
}
_CONFIG_BOOLS = ("strict", "auto_epsilon", "exclude_type_predicate")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", required=True, help="N-Triples input file")
    p.add_argument("--config", help="key=value config file; flags override")
    p.add_argument("--beta", type=float, default=0.15,
                   help="decay factor in (0,1) (default 0.15)")
    p.add_argument("--max-iter", type=int, default=10,
                   help="maximum similarity iterations (default 10)")
    p.add_argument("--ict", type=float, default=0.001,
                   help="iteration convergence threshold (default 0.001)")
    p.add_argument("--matching", choices=("exact", "greedy", "auto"),
                   default="auto",
                   help="neighbor matching mode (default auto: exact for "
                        "small sets, greedy above)")
    p.add_argument("--noise-fraction", type=float, default=1.0,
                   help="exclude predicates used by more than this fraction "
                        "of subjects from pair generation (default 1.0 = off)")
    p.add_argument("--factor", choices=sorted(_FACTOR_MODES), default="jaccard",
                   help="predicate-set agreement factor (default jaccard)")
    p.add_argument("--type-predicate", default=RDF_TYPE,
                   help="predicate carrying gold types")
    p.add_argument("--exclude-type-predicate", action="store_true",
                   help="drop type triples before similarity computation")
    p.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                   help="worker threads for the similarity iteration")
    p.add_argument("--strict", action="store_true",
                   help="fail on malformed lines instead of skipping them")
    p.add_argument("--dump-similarity", metavar="PATH",
                   help="write final pair scores as CSV (.gz to compress)")
    p.add_argument("--dump-weights", metavar="PATH",
                   help="write per-pair descriptor weights as CSV")
    p.add_argument("--dump-trace", metavar="PATH",
                   help="write the threshold search trace as CSV")


def _add_epsilon(p: argparse.ArgumentParser) -> None:
    p.add_argument("--epsilon", type=float, default=None,
                   help="fixed class dissimilarity threshold in [0,1]")
    p.add_argument("--auto-epsilon", action="store_true",
                   help="search for the threshold automatically (default "
                        "when --epsilon is absent)")
    _add_search(p)


def _add_search(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-eps", type=float, default=0.0)
    p.add_argument("--max-eps", type=float, default=1.0)
    p.add_argument("--tries", type=int, default=10,
                   help="grid points per search level (default 10)")
    p.add_argument("--ect", type=float, default=0.9,
                   help="threshold search convergence margin (default 0.9)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdf-summarize",
        description="Build a typed summary graph from N-Triples data.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("summarize",
                        help="run the full pipeline and export the summary")
    _add_common(ps)
    _add_epsilon(ps)
    ps.add_argument("--format", choices=("json", "dot", "nt"), default="json")
    ps.add_argument("--output", help="summary artifact path (default: "
                                     "<input stem>.summary.<ext>)")

    pf = sub.add_parser("find-threshold",
                        help="search the class dissimilarity threshold only")
    _add_common(pf)
    _add_search(pf)

    pe = sub.add_parser("eval",
                        help="score generated classes against gold types")
    _add_common(pe)
    _add_epsilon(pe)
    pe.add_argument("--gold", help="separate N-Triples file with gold type "
                                   "triples (default: the input itself)")
    # subparsers parse into a fresh namespace, so config-file defaults must
    # be applied to each of them, not to the root parser
    parser.subcommands = {"summarize": ps, "find-threshold": pf, "eval": pe}
    return parser


def _read_config(path: str) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{line_no}: expected key=value")
            key, _, raw = line.partition("=")
            key = key.strip().replace("-", "_")
            raw = raw.strip()
            if key in _CONFIG_BOOLS:
                values[key] = raw.lower() in ("1", "true", "yes", "on")
            elif key in _CONFIG_CONVERTERS:
                values[key] = _CONFIG_CONVERTERS[key](raw)
            else:
                raise ValueError(f"{path}:{line_no}: unknown option {key!r}")
    return values


def _scan_config(argv: Sequence[str]) -> Optional[str]:
    for i, arg in enumerate(argv):
        if arg == "--config":
            if i + 1 < len(argv):
                return argv[i + 1]
        elif arg.startswith("--config="):
            return arg.split("=", 1)[1]
    return None


def _iteration_params(args: argparse.Namespace) -> IterationParams:
    return IterationParams(
        beta=args.beta,
        max_iter=args.max_iter,
        ict=args.ict,
        matching=args.matching,
        noise_fraction=args.noise_fraction,
        factor_mode=_FACTOR_MODES[args.factor],
    )


def _load_graphs(args: argparse.Namespace) -> tuple[Graph, Graph]:
    """Full graph plus the working graph used for similarity."""
    full = parse_ntriples_file(args.input, strict=args.strict)
    if args.exclude_type_predicate:
        return full, full.without_predicate(args.type_predicate)
    return full, full


def _choose_epsilon(args: argparse.Namespace, g: Graph, result):
    """Fixed epsilon or automatic search; returns (epsilon, mode, trace)."""
    if args.epsilon is not None:
        if args.auto_epsilon:
            raise ValueError("--epsilon and --auto-epsilon are exclusive")
        if not 0.0 <= args.epsilon <= 1.0:
            raise ValueError("--epsilon must be in [0, 1]")
        return args.epsilon, "fixed", []
    search = ThresholdSearchParams(min_eps=args.min_eps, max_eps=args.max_eps,
                                   tries=args.tries, ect=args.ect)
    eps, trace = find_optimum_epsilon(g, result.matrix, result.pairs, search,
                                      subjects=g.subjects,
                                      threads=args.threads)
    return eps, "auto", trace


def _write_dumps(args: argparse.Namespace, g: Graph, result,
                 trace) -> None:
    if args.dump_similarity:
        exports.atomic_write_text(args.dump_similarity,
                                  exports.similarity_csv(g, result.matrix))
    if args.dump_weights:
        exports.atomic_write_text(args.dump_weights,
                                  exports.weights_csv(g, result.pairs))
    if args.dump_trace:
        exports.atomic_write_text(args.dump_trace, exports.trace_csv(trace))


def _gold_for(working: Graph, source: Graph, type_predicate: str) -> dict:
    """Gold types keyed by the working graph's node ids."""
    raw = extract_gold(source, type_predicate)
    by_display = {source.display(u): types for u, types in raw.items()}
    gold = {}
    for u in working.subjects:
        types = by_display.get(working.display(u))
        if types:
            gold[u] = types
    return gold


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _cmd_summarize(args: argparse.Namespace) -> int:
    full, working = _load_graphs(args)
    result = run_sim_measure(working, _iteration_params(args),
                             threads=args.threads)
    eps, mode, trace = _choose_epsilon(args, working, result)
    classes = create_classes(result.matrix, result.pairs, eps,
                             subjects=working.subjects)
    sg = build_summary_graph(working, classes)
    names = name_classes(working, classes)
    fav = favorability(working, classes, epsilon=eps)

    ext = {"json": "json", "dot": "dot", "nt": "nt"}[args.format]
    stem = os.path.splitext(os.path.basename(args.input))[0]
    out_path = args.output or f"{stem}.summary.{ext}"
    if args.format == "json":
        payload = exports.summary_to_json(working, sg, names)
    elif args.format == "dot":
        payload = exports.summary_to_dot(working, sg, names)
    else:
        payload = exports.summary_to_ntriples(working, sg, names)
    exports.atomic_write_text(out_path, payload)
    _write_dumps(args, working, result, trace)

    _emit({
        "command": "summarize",
        "input": args.input,
        "triples": working.triple_count(),
        "subjects": working.subject_count,
        "candidate_pairs": len(result.pairs),
        "iterations": result.iterations,
        "final_delta": result.deltas[-1] if result.deltas else 0.0,
        "epsilon": eps,
        "epsilon_mode": mode,
        "class_count": len(classes),
        "stability": fav.stability,
        "rmsd": fav.rmsd,
        "typification_rate": fav.typification_rate,
        "favorability": fav.favorability,
        "output": out_path,
    })
    return EXIT_OK


def _cmd_find_threshold(args: argparse.Namespace) -> int:
    _, working = _load_graphs(args)
    result = run_sim_measure(working, _iteration_params(args),
                             threads=args.threads)
    search = ThresholdSearchParams(min_eps=args.min_eps, max_eps=args.max_eps,
                                   tries=args.tries, ect=args.ect)
    eps, trace = find_optimum_epsilon(working, result.matrix, result.pairs,
                                      search, subjects=working.subjects,
                                      threads=args.threads)
    best = max(trace, key=lambda r: r.favorability)
    chosen = next(r for r in trace if r.epsilon == eps)
    _write_dumps(args, working, result, trace)

    _emit({
        "command": "find-threshold",
        "input": args.input,
        "triples": working.triple_count(),
        "subjects": working.subject_count,
        "candidate_pairs": len(result.pairs),
        "iterations": result.iterations,
        "epsilon": eps,
        "favorability": chosen.favorability,
        "stability": chosen.stability,
        "rmsd": chosen.rmsd,
        "typification_rate": chosen.typification_rate,
        "evaluations": len(trace),
        "trace_max_favorability": best.favorability,
    })
    return EXIT_OK


def _cmd_eval(args: argparse.Namespace) -> int:
    full, working = _load_graphs(args)
    result = run_sim_measure(working, _iteration_params(args),
                             threads=args.threads)
    eps, mode, trace = _choose_epsilon(args, working, result)
    classes = create_classes(result.matrix, result.pairs, eps,
                             subjects=working.subjects)
    names = name_classes(working, classes)
    if args.gold:
        gold_graph = parse_ntriples_file(args.gold, strict=args.strict)
    else:
        gold_graph = full
    gold = _gold_for(working, gold_graph, args.type_predicate)
    if not gold:
        raise UnscorableError("no classed subject has a gold type")
    report = evaluate(classes, gold)
    _write_dumps(args, working, result, trace)

    payload = exports.evaluation_to_dict(report, names)
    payload["epsilon"] = eps
    payload["epsilon_mode"] = mode
    _emit(payload)
    return EXIT_OK


_COMMANDS = {
    "summarize": _cmd_summarize,
    "find-threshold": _cmd_find_threshold,
    "eval": _cmd_eval,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging,
                      os.environ.get("RDF_SUMMARIZE_LOG", "WARNING").upper(),
                      logging.WARNING))
    parser = build_parser()
    config_path = _scan_config(argv)
    if config_path:
        try:
            defaults = _read_config(config_path)
        except FileNotFoundError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INPUT
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        for sub in parser.subcommands.values():
            sub.set_defaults(**defaults)
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
