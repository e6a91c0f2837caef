# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import json

import pytest

from ssakg.experiments.bench import ExperimentConfig, run_experiment
from ssakg.experiments.report import (
    HISTOGRAM_HEADER,
    SUMMARY_HEADER,
    ExperimentReport,
    csv_paths,
    load_report,
    write_report,
)
from ssakg.experiments.synthgen import GenSpec
from ssakg.memory.exceptions import InvalidParams


@pytest.fixture(scope="module")
def report():
    return run_experiment(ExperimentConfig(
        contexts=[3, 4],
        algorithms=["node", "weighted"],
        synthetic=GenSpec(n=150, length_min=8, length_max=8, count=40, seed=6),
        seed=6,
    ))


def test_json_roundtrip(report, tmp_path):
    path = str(tmp_path / "report.json")
    assert write_report(report, "json", path) == [path]
    loaded = load_report(path)
    assert loaded == report
    assert loaded.word_frequencies is None
    assert loaded.summary("weighted", 4).histogram == report.summary("weighted", 4).histogram
    with open(path, encoding="UTF-8") as handle:
        document = json.load(handle)
    assert document["rng"] == "numpy.PCG64"
    assert document["config"]["synthetic"]["seed"] == 6


def test_csv_files(report, tmp_path):
    path = str(tmp_path / "report.csv")
    histogram_path, summary_path = csv_paths(path)
    assert write_report(report, "CSV", path) == [histogram_path, summary_path]

    with open(histogram_path, encoding="UTF-8") as handle:
        lines = handle.read().splitlines()
    assert lines[0] == ",".join(HISTOGRAM_HEADER)
    total = 0
    for line in lines[1:]:
        algorithm, context, correct, count = line.split(",")
        assert algorithm in ("node", "weighted")
        assert int(context) in (3, 4)
        assert 0 <= int(correct) <= 8
        total += int(count)
    assert total == 40 * 2 * 2

    with open(summary_path, encoding="UTF-8") as handle:
        lines = handle.read().splitlines()
    assert lines[0] == ",".join(SUMMARY_HEADER)
    assert len(lines) == 1 + 4
    fields = lines[1].split(",")
    assert fields[:2] == ["node", "3"]
    assert float(fields[5]) == pytest.approx(report.measured_density)


def test_empty_report_has_headers_only(tmp_path):
    empty = ExperimentReport(config={}, n=10, sequence_count=0, measured_density=0.0,
                             predicted_density=0.0, rng="numpy.PCG64")
    histogram_path, summary_path = write_report(empty, "csv", str(tmp_path / "empty.csv"))
    with open(histogram_path, encoding="UTF-8") as handle:
        assert handle.read() == ",".join(HISTOGRAM_HEADER) + "\n"
    with open(summary_path, encoding="UTF-8") as handle:
        assert handle.read() == ",".join(SUMMARY_HEADER) + "\n"


def test_unknown_format(report, tmp_path):
    with pytest.raises(InvalidParams):
        write_report(report, "xml", str(tmp_path / "report.xml"))


def test_missing_summary(report):
    with pytest.raises(KeyError):
        report.summary("simple", 3)
