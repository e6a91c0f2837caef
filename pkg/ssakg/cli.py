# -*- encoding: utf-8 -*-
"""Command line entry point: ``ssakg <command> [flags]``.

Exit codes: 0 success, 1 domain or file error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from ssakg import __version__
from ssakg.consolelogger import init_logging
from ssakg.experiments.bench import ExperimentConfig, run_experiment
from ssakg.experiments.report import write_report
from ssakg.experiments.synthgen import GenSpec, load_sequences
from ssakg.experiments.textingest import CorpusSpec, encode_virtual, prepare_corpus, save_prepared
from ssakg.memory import capacity as model
from ssakg.memory.constants import ALGORITHM, DEFAULT_BRANCH_BUDGET, DEFAULT_CRITICAL_DENSITY, METRIC
from ssakg.memory.exceptions import InvalidParams, SsakgError
from ssakg.memory.graph import Ssakg
from ssakg.memory.recall import recall_sequence
from ssakg.utils import from_list_string, from_symbol_string, to_symbol_string

_LOGGER = logging.getLogger(__name__)

VERBOSITY = (logging.WARNING, logging.INFO, logging.DEBUG)


def _int_list(value):
    try:
        values = from_list_string(value, int)
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated integers, got %r" % value)
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def _symbol_list(value):
    try:
        symbols = from_symbol_string(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected comma separated symbol ids, got %r" % value)
    if not symbols:
        raise argparse.ArgumentTypeError("expected at least one symbol")
    return symbols


def _algorithm_list(value):
    try:
        return [ALGORITHM.from_tag(tag).tag for tag in from_list_string(value)]
    except InvalidParams as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _add_bench_flags(parser):
    parser.add_argument("--context", type=_int_list, required=True,
                        help="context size(s), comma separated, e.g. 8,9,10")
    parser.add_argument("--algo", type=_algorithm_list, required=True,
                        help="ordering algorithm(s): %s" % ", ".join(a.tag for a in ALGORITHM))
    parser.add_argument("--seed", type=int, required=True, help="master seed")
    parser.add_argument("--trials", type=int, default=1, help="contexts drawn per sequence (default 1)")
    parser.add_argument("--branch-budget", type=int, default=DEFAULT_BRANCH_BUDGET,
                        help="maximum ordering branches per recall (default %d)" % DEFAULT_BRANCH_BUDGET)
    parser.add_argument("--threads", type=int, default=1, help="recall worker threads (default 1)")
    parser.add_argument("--metric", choices=[m.tag for m in METRIC], default=METRIC.SET.tag,
                        help="correct element counting rule (default set)")
    parser.add_argument("--out", required=True, help="report path")
    parser.add_argument("--format", choices=("json", "csv"), default="json", help="report format")
    parser.add_argument("--save-graph", metavar="PATH", help="also write the graph snapshot")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ssakg",
        description="Sequence memory on a structural associative knowledge graph.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more logging (-v info, -vv debug)")
    parser.add_argument("--version", action="version", version="%(prog)s " + __version__)
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    capacity = commands.add_parser("capacity", help="density and capacity model")
    capacity.add_argument("--nodes", type=int, required=True, help="graph node count n")
    capacity.add_argument("--seq-len", type=int, required=True, help="sequence length L")
    capacity.add_argument("--density", type=float, default=DEFAULT_CRITICAL_DENSITY,
                          help="critical density (default %s)" % DEFAULT_CRITICAL_DENSITY)
    capacity.add_argument("--sequences", type=int, help="also predict the density after this many sequences")
    capacity.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    capacity.set_defaults(handler=cmd_capacity)

    synth = commands.add_parser("synth-bench", help="recall benchmark on flat random sequences")
    synth.add_argument("--nodes", type=int, required=True, help="graph node count n")
    synth.add_argument("--seq-len", type=int, required=True, help="(minimum) sequence length")
    synth.add_argument("--seq-len-max", type=int, help="maximum sequence length (default --seq-len)")
    synth.add_argument("--sequences", type=int, required=True, help="sequences to store")
    _add_bench_flags(synth)
    synth.set_defaults(handler=cmd_synth_bench)

    text = commands.add_parser("text-bench", help="recall benchmark on corpus sentences")
    text.add_argument("--corpus", required=True, help="UTF-8 text or HTML corpus")
    text.add_argument("--stopwords", required=True, help="stop-word file, one word per line")
    text.add_argument("--min-len", type=int, required=True, help="minimum filtered sentence length")
    text.add_argument("--max-len", type=int, required=True, help="maximum filtered sentence length")
    text.add_argument("--sentences", type=int, required=True, help="sentences to select")
    text.add_argument("--prepared-out", metavar="PATH", help="also write the prepared sentences JSON")
    _add_bench_flags(text)
    text.set_defaults(handler=cmd_text_bench)

    recall = commands.add_parser("recall", help="recall sequences from a graph snapshot")
    recall.add_argument("--snapshot", required=True, help="graph snapshot JSON")
    recall.add_argument("--context", type=_symbol_list, required=True, help='context symbols, e.g. "2,11"')
    recall.add_argument("--algo", default=ALGORITHM.WEIGHTED.tag,
                        choices=[a.tag for a in ALGORITHM], help="ordering algorithm (default weighted)")
    recall.add_argument("--target-len", type=int, help="sequence length (default: candidate count)")
    recall.add_argument("--branch-budget", type=int, default=DEFAULT_BRANCH_BUDGET,
                        help="maximum ordering branches (default %d)" % DEFAULT_BRANCH_BUDGET)
    recall.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    recall.set_defaults(handler=cmd_recall)

    snapshot = commands.add_parser("snapshot", help="save or inspect graph snapshots")
    mode = snapshot.add_mutually_exclusive_group(required=True)
    mode.add_argument("--save", metavar="PATH", help="build a graph from --from-sequences and save it")
    mode.add_argument("--load", metavar="PATH", help="load a snapshot and print its statistics")
    snapshot.add_argument("--from-sequences", metavar="FILE", help="JSON array of integer arrays")
    snapshot.add_argument("--nodes", type=int, help="graph node count (default: largest id + 1)")
    snapshot.set_defaults(handler=cmd_snapshot)
    return parser


def cmd_capacity(args):
    density_model = model.DensityModel(n=args.nodes, L=args.seq_len, d_crit=args.density)
    result = {
        "nodes": args.nodes,
        "seq_len": args.seq_len,
        "xi": density_model.xi,
        "density": args.density,
        "capacity": density_model.capacity(),
        "capacity_floor": density_model.capacity_floor(),
    }
    if args.sequences is not None:
        result["sequences"] = args.sequences
        result["predicted_density"] = density_model.density_after(args.sequences)

    if args.format == "json":
        print(json.dumps(result, sort_keys=True))
        return 0
    print("xi: %.9e" % result["xi"])
    print("capacity at density %s: %.6f (%d sequences)"
          % (args.density, result["capacity"], result["capacity_floor"]))
    if args.sequences is not None:
        print("predicted density after %d sequences: %.9f" % (args.sequences, result["predicted_density"]))
    return 0


def _run_bench(args, **source):
    cfg = ExperimentConfig(
        contexts=args.context,
        algorithms=args.algo,
        trials=args.trials,
        branch_budget=args.branch_budget,
        seed=args.seed,
        threads=args.threads,
        metric=args.metric,
        save_graph=args.save_graph,
        **source
    )
    report = run_experiment(cfg)
    paths = write_report(report, args.format, args.out)
    for entry in report.summaries:
        print("%-9s context=%-3d set=%.4f order=%.4f branches=%.3f failures=%d" % (
            entry.algorithm, entry.context, entry.set_accuracy, entry.order_accuracy,
            entry.mean_branch_count, entry.failures,
        ))
    print("density measured=%.9f predicted=%.9f" % (report.measured_density, report.predicted_density))
    print("report: %s" % ", ".join(paths))
    return 0


def cmd_synth_bench(args):
    spec = GenSpec(
        n=args.nodes,
        length_min=args.seq_len,
        length_max=args.seq_len if args.seq_len_max is None else args.seq_len_max,
        count=args.sequences,
        seed=args.seed,
    )
    return _run_bench(args, synthetic=spec)


def cmd_text_bench(args):
    spec = CorpusSpec(
        corpus_path=args.corpus,
        stopword_path=args.stopwords,
        min_len=args.min_len,
        max_len=args.max_len,
        count=args.sentences,
        seed=args.seed,
    )
    if args.prepared_out:
        sentences, vocabulary = prepare_corpus(spec)
        encoded = [encode_virtual(tokens, vocabulary) for tokens in sentences]
        save_prepared(args.prepared_out, encoded, vocabulary)
    return _run_bench(args, corpus=spec)


def cmd_recall(args):
    graph = Ssakg.load(args.snapshot)
    result = recall_sequence(
        graph,
        args.context,
        args.algo,
        target_len=args.target_len,
        branch_budget=args.branch_budget,
    )
    if args.format == "json":
        print(json.dumps({
            "candidates": sorted(result.candidates),
            "orderings": result.orderings,
            "branch_count": result.branch_count,
            "unique": result.unique,
        }, sort_keys=True))
        return 0
    print("candidates: %s" % to_symbol_string(sorted(result.candidates)))
    for ordering in result.orderings:
        print("ordering: %s" % to_symbol_string(ordering))
    print("branch_count: %d" % result.branch_count)
    print("unique: %s" % ("yes" if result.unique else "no"))
    return 0


def cmd_snapshot(args):
    if args.load:
        graph = Ssakg.load(args.load)
    else:
        if not args.from_sequences:
            raise InvalidParams("snapshot --save needs --from-sequences FILE.")
        sequences = load_sequences(args.from_sequences)
        if not sequences:
            raise InvalidParams("Sequence file %s holds no sequences." % args.from_sequences)
        graph = Ssakg(args.nodes or max(max(s) for s in sequences) + 1)
        graph.store_sequences(sequences)
        graph.save(args.save)
    print("nodes: %d" % graph.n)
    print("edges: %d" % graph.edge_count())
    print("density: %.9f" % graph.density())
    print("stored_count: %d" % graph.stored_count)
    return 0


def parse_and_dispatch(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    init_logging(VERBOSITY[min(args.verbose, len(VERBOSITY) - 1)])
    try:
        return args.handler(args)
    except InvalidParams as exc:
        _LOGGER.debug("Command failed", exc_info=True)
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 2
    except (SsakgError, OSError, UnicodeDecodeError) as exc:
        _LOGGER.debug("Command failed", exc_info=True)
        print("%s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return 1


def main(argv=None):
    return parse_and_dispatch(sys.argv[1:] if argv is None else argv)
