# -*- encoding: utf-8 -*-
"""End-to-end recall experiments.

One graph stores every sequence of the source. Each stored sequence is then
recalled from seeded random contexts of every requested size with every
requested ordering algorithm, and the outcomes are aggregated per
(algorithm, context size).
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import List, Optional, Sequence, Tuple

from ssakg.experiments.report import (
    STATUS_NO_ORDERING,
    STATUS_OK,
    STATUS_OVERFLOW,
    ExperimentReport,
    Summary,
    TrialRecord,
)
from ssakg.experiments.synthgen import GenSpec, draw_context, gen_sequences, load_sequences
from ssakg.experiments.textingest import CorpusSpec, encode_virtual, prepare_corpus, word_frequencies
from ssakg.memory.capacity import density_after_lengths
from ssakg.memory.constants import ALGORITHM, DEFAULT_BRANCH_BUDGET, METRIC, RNG_NAME
from ssakg.memory.exceptions import AmbiguityOverflow, InvalidParams, NoValidOrdering
from ssakg.memory.graph import Ssakg
from ssakg.memory.recall import candidate_set, recall_sequence
from ssakg.utils import derive_seed

_LOGGER = logging.getLogger(__name__)


@dataclass
class ExperimentConfig:
    contexts: List[int]
    algorithms: List[str]
    synthetic: Optional[GenSpec] = None
    corpus: Optional[CorpusSpec] = None
    sequence_file: Optional[str] = None
    n: Optional[int] = None
    trials: int = 1
    branch_budget: int = DEFAULT_BRANCH_BUDGET
    seed: int = 0
    threads: int = 1
    metric: str = "set"
    save_graph: Optional[str] = None

    def __post_init__(self):
        sources = [s for s in (self.synthetic, self.corpus, self.sequence_file) if s is not None]
        if len(sources) != 1:
            raise InvalidParams("Exactly one source (synthetic, corpus or sequence file) is required.")
        if not self.contexts or min(self.contexts) < 1:
            raise InvalidParams("Context sizes must be positive, got %s." % (self.contexts,))
        if not self.algorithms:
            raise InvalidParams("At least one ordering algorithm is required.")
        self.algorithms = [ALGORITHM.from_tag(a).tag for a in self.algorithms]
        self.metric = METRIC.from_tag(self.metric).tag
        if self.trials < 1 or self.threads < 1 or self.branch_budget < 1:
            raise InvalidParams("trials, threads and branch_budget must be at least 1.")
        if self.synthetic is not None and max(self.contexts) > self.synthetic.length_min:
            raise InvalidParams(
                "Context sizes %s exceed the shortest sequence length %d."
                % (self.contexts, self.synthetic.length_min)
            )
        if self.corpus is not None and max(self.contexts) > self.corpus.min_len:
            raise InvalidParams(
                "Context sizes %s exceed the shortest sentence length %d."
                % (self.contexts, self.corpus.min_len)
            )

    def to_dict(self):
        document = asdict(self)
        document.pop("threads")
        document.pop("save_graph")
        return document


@dataclass
class _Source:
    sequences: List[List[int]]
    n: int
    vocabulary_size: Optional[int] = None
    token_count: Optional[int] = None
    frequencies: Optional[List[Tuple[str, int]]] = None


def correct_elements(returned: Sequence[int], truth: Sequence[int], metric="set") -> int:
    """Correctly reproduced elements of the first reported ordering (0 when nothing was returned)."""
    if not returned:
        return 0
    if METRIC.from_tag(metric) == METRIC.POSITION:
        return sum(1 for got, want in zip(returned, truth) if got == want)
    return len(set(returned) & set(truth))


def _load_source(cfg: ExperimentConfig) -> _Source:
    if cfg.synthetic is not None:
        sequences = gen_sequences(cfg.synthetic)
        return _Source(sequences, cfg.synthetic.n)

    if cfg.corpus is not None:
        sentences, vocabulary = prepare_corpus(cfg.corpus)
        sequences = [encode_virtual(tokens, vocabulary) for tokens in sentences]
        return _Source(
            sequences,
            vocabulary.size,
            vocabulary_size=vocabulary.size,
            token_count=sum(len(tokens) for tokens in sentences),
            frequencies=word_frequencies(sentences),
        )

    sequences = load_sequences(cfg.sequence_file)
    if not sequences:
        raise InvalidParams("Sequence file %s holds no sequences." % cfg.sequence_file)
    shortest = min(len(s) for s in sequences)
    if max(cfg.contexts) > shortest:
        raise InvalidParams(
            "Context sizes %s exceed the shortest sequence length %d." % (cfg.contexts, shortest)
        )
    return _Source(sequences, cfg.n or max(max(s) for s in sequences) + 1)


def score_trial(graph, truth, context, algorithm, cfg: ExperimentConfig, index=0, trial=0) -> TrialRecord:
    """Recall one context with one algorithm and score it against the stored truth."""
    length = len(truth)
    record = TrialRecord(
        index=index,
        context_size=len(context),
        trial=trial,
        algorithm=algorithm,
        context=sorted(context),
        returned=[],
        correct_elements=0,
        set_correct=False,
        order_correct=False,
        unique=False,
        branch_count=0,
    )
    try:
        result = recall_sequence(graph, context, algorithm, length, cfg.branch_budget)
    except AmbiguityOverflow:
        record.status = STATUS_OVERFLOW
        record.branch_count = cfg.branch_budget + 1
        record.correct_elements = min(len(candidate_set(graph, context) & set(truth)), length)
        _LOGGER.warning("Ambiguity overflow recalling sequence %d (%s)", index, algorithm)
        return record
    except NoValidOrdering:
        record.status = STATUS_NO_ORDERING
        return record

    returned = [int(s) for s in result.first]
    record.returned = returned
    record.branch_count = result.branch_count
    record.unique = result.unique
    record.correct_elements = correct_elements(returned, truth, cfg.metric)
    record.set_correct = sorted(returned) == sorted(truth)
    record.order_correct = returned == list(truth)
    return record


def summarize(records: List[TrialRecord], algorithm: str, context: int) -> Summary:
    chosen = [r for r in records if r.algorithm == algorithm and r.context_size == context]
    total = len(chosen)
    set_ok = sum(1 for r in chosen if r.set_correct)
    order_ok = sum(1 for r in chosen if r.order_correct)
    answered = [r.branch_count for r in chosen if r.status == STATUS_OK]
    return Summary(
        algorithm=algorithm,
        context=context,
        trials=total,
        set_accuracy=set_ok / total if total else 0.0,
        # Conditional on a correct element set.
        order_accuracy=order_ok / set_ok if set_ok else 0.0,
        order_accuracy_all=order_ok / total if total else 0.0,
        unique_fraction=sum(1 for r in chosen if r.unique) / total if total else 0.0,
        mean_branch_count=sum(answered) / len(answered) if answered else 0.0,
        failures=sum(1 for r in chosen if r.status != STATUS_OK),
        histogram=dict(sorted(Counter(r.correct_elements for r in chosen).items())),
    )


def run_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    start = time.perf_counter()
    source = _load_source(cfg)

    graph = Ssakg(source.n)
    graph.store_sequences(source.sequences)
    if cfg.save_graph:
        graph.save(cfg.save_graph)

    tasks = [
        (index, c, trial)
        for index in range(len(source.sequences))
        for c in cfg.contexts
        for trial in range(cfg.trials)
    ]

    def run_task(task):
        index, c, trial = task
        truth = source.sequences[index]
        # Context seeds leave the algorithm out, every algorithm sees the same cue.
        context = draw_context(truth, c, derive_seed(cfg.seed, index, c, trial))
        return [
            score_trial(graph, truth, context, algorithm, cfg, index=index, trial=trial)
            for algorithm in cfg.algorithms
        ]

    if cfg.threads > 1:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            batches = list(pool.map(run_task, tasks))
    else:
        batches = [run_task(task) for task in tasks]
    records = [record for batch in batches for record in batch]

    summaries = [summarize(records, a, c) for a in cfg.algorithms for c in cfg.contexts]
    for entry in summaries:
        _LOGGER.info(
            "%s, context %d: set %.4f, order %.4f, branches %.3f, failures %d",
            entry.algorithm, entry.context, entry.set_accuracy, entry.order_accuracy,
            entry.mean_branch_count, entry.failures,
        )

    return ExperimentReport(
        config=cfg.to_dict(),
        n=graph.n,
        sequence_count=len(source.sequences),
        measured_density=graph.symmetric_density(),
        directed_density=graph.density(),
        predicted_density=density_after_lengths((len(s) for s in source.sequences), graph.n),
        rng=RNG_NAME,
        summaries=summaries,
        trials=records,
        wall_time=time.perf_counter() - start,
        vocabulary_size=source.vocabulary_size,
        token_count=source.token_count,
        word_frequencies=source.frequencies,
    )
