# -*- encoding: utf-8 -*-
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence

from ssakg.memory.exceptions import InvalidParams, SnapshotError
from ssakg.utils import make_rng

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenSpec:
    """Flat random sequences: lengths uniform in [length_min, length_max], symbols uniform in [0, n)."""

    n: int
    length_min: int
    length_max: int
    count: int
    seed: int = 0

    def __post_init__(self):
        if not 2 <= self.length_min <= self.length_max <= self.n:
            raise InvalidParams(
                "Need 2 <= length_min <= length_max <= n, got %d, %d, %d."
                % (self.length_min, self.length_max, self.n)
            )
        if self.count < 1:
            raise InvalidParams("Sequence count must be at least 1, got %d." % self.count)


def gen_sequences(spec: GenSpec) -> List[List[int]]:
    rng = make_rng(spec.seed)
    lengths = rng.integers(spec.length_min, spec.length_max + 1, size=spec.count)
    sequences = [
        [int(s) for s in rng.choice(spec.n, size=int(length), replace=False)]
        for length in lengths
    ]
    _LOGGER.info(
        "Generated %d sequences over %d symbols (length %d-%d, seed %d)",
        spec.count, spec.n, spec.length_min, spec.length_max, spec.seed,
    )
    return sequences


def draw_context(sequence: Sequence[int], c: int, seed) -> FrozenSet[int]:
    """Uniform random c-subset of the sequence's elements."""
    if not 1 <= c <= len(sequence):
        raise InvalidParams("Context size must lie in [1, %d], got %d." % (len(sequence), c))
    rng = make_rng(seed)
    return frozenset(int(s) for s in rng.choice(list(sequence), size=c, replace=False))


def save_sequences(path, sequences):
    with open(path, "w", encoding="UTF-8") as handle:
        json.dump([[int(s) for s in sequence] for sequence in sequences], handle)


def load_sequences(path) -> List[List[int]]:
    with open(path, "r", encoding="UTF-8") as handle:
        try:
            document = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SnapshotError("Sequence file %s is not valid JSON: %s" % (path, exc))
    if not isinstance(document, list) or not all(
        isinstance(sequence, list) and all(isinstance(s, int) for s in sequence)
        for sequence in document
    ):
        raise SnapshotError("Sequence file %s must be a JSON array of integer arrays." % path)
    return document
