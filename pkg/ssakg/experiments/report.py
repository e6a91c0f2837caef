# -*- encoding: utf-8 -*-
"""Experiment report records and their JSON / CSV serialisation."""

from __future__ import annotations

import csv
import json
import logging
import os
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Tuple

from ssakg.memory.exceptions import InvalidParams

_LOGGER = logging.getLogger(__name__)

HISTOGRAM_HEADER = ("algorithm", "context", "correct_elements", "count")
WORDS_HEADER = ("token", "count")
SUMMARY_HEADER = (
    "algorithm",
    "context",
    "set_accuracy",
    "order_accuracy",
    "mean_branch_count",
    "measured_density",
    "predicted_density",
)
FLOAT_FORMAT = "%.12g"

STATUS_OK = "ok"
STATUS_OVERFLOW = "ambiguity_overflow"
STATUS_NO_ORDERING = "no_valid_ordering"


@dataclass
class TrialRecord:
    index: int
    context_size: int
    trial: int
    algorithm: str
    context: List[int]
    returned: List[int]
    correct_elements: int
    set_correct: bool
    order_correct: bool
    unique: bool
    branch_count: int
    status: str = STATUS_OK


@dataclass
class Summary:
    algorithm: str
    context: int
    trials: int
    set_accuracy: float
    order_accuracy: float
    order_accuracy_all: float
    unique_fraction: float
    mean_branch_count: float
    failures: int
    histogram: Dict[int, int] = field(default_factory=dict)


@dataclass
class ExperimentReport:
    config: dict
    n: int
    sequence_count: int
    measured_density: float
    predicted_density: float
    rng: str
    summaries: List[Summary] = field(default_factory=list)
    trials: List[TrialRecord] = field(default_factory=list)
    directed_density: float = 0.0
    wall_time: float = 0.0
    vocabulary_size: Optional[int] = None
    token_count: Optional[int] = None
    # Corpus sources only: token frequencies of the selected sentences, most frequent first.
    word_frequencies: Optional[List[Tuple[str, int]]] = None

    def summary(self, algorithm, context):
        for entry in self.summaries:
            if entry.algorithm == algorithm and entry.context == context:
                return entry
        raise KeyError((algorithm, context))

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, document):
        document = dict(document)
        summaries = []
        for entry in document.pop("summaries", []):
            entry = dict(entry)
            entry["histogram"] = {int(k): int(v) for k, v in entry.get("histogram", {}).items()}
            summaries.append(Summary(**entry))
        trials = [TrialRecord(**entry) for entry in document.pop("trials", [])]
        if document.get("word_frequencies") is not None:
            pairs = document["word_frequencies"]
            document["word_frequencies"] = [(str(token), int(count)) for token, count in pairs]
        return cls(summaries=summaries, trials=trials, **document)


def csv_paths(path):
    """Histogram and summary file names derived from one --out path."""
    base, _ = os.path.splitext(path)
    return base + "_histogram.csv", base + "_summary.csv"


def words_path(path):
    base, _ = os.path.splitext(path)
    return base + "_words.csv"


def _float(value):
    return FLOAT_FORMAT % value


def write_report(report: ExperimentReport, fmt, path):
    fmt = str(fmt).lower()
    if fmt == "json":
        with open(path, "w", encoding="UTF-8") as handle:
            json.dump(report.to_dict(), handle, indent=1, sort_keys=True)
        _LOGGER.info("Wrote JSON report to %s", path)
        return [path]
    if fmt != "csv":
        raise InvalidParams('Unknown report format "%s" (expected json or csv).' % fmt)

    histogram_path, summary_path = csv_paths(path)
    with open(histogram_path, "w", encoding="UTF-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(HISTOGRAM_HEADER)
        for entry in report.summaries:
            for correct, count in sorted(entry.histogram.items()):
                writer.writerow((entry.algorithm, entry.context, correct, count))
    with open(summary_path, "w", encoding="UTF-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(SUMMARY_HEADER)
        for entry in report.summaries:
            writer.writerow((
                entry.algorithm,
                entry.context,
                _float(entry.set_accuracy),
                _float(entry.order_accuracy),
                _float(entry.mean_branch_count),
                _float(report.measured_density),
                _float(report.predicted_density),
            ))
    paths = [histogram_path, summary_path]
    if report.word_frequencies is not None:
        paths.append(words_path(path))
        with open(paths[-1], "w", encoding="UTF-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(WORDS_HEADER)
            writer.writerows(report.word_frequencies)
    _LOGGER.info("Wrote CSV report to %s", ", ".join(paths))
    return paths


def load_report(path) -> ExperimentReport:
    with open(path, "r", encoding="UTF-8") as handle:
        return ExperimentReport.from_dict(json.load(handle))
