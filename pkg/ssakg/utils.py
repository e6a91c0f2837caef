# -*- encoding: utf-8 -*-
from __future__ import (
    annotations,
    print_function,
    unicode_literals,
    division,
    absolute_import,
)

import numpy as np


def to_symbol_string(data):
    """Convert a list of symbol ids to a string, separated by "," """
    if isinstance(data, (int, np.integer)):
        return "%d" % data
    return ",".join(["%d" % o for o in data])


def from_symbol_string(symbol_string):
    """Convert a symbol string (separated by ",") back to a list of integers"""
    return [int(x) for x in symbol_string.split(",") if x.strip()]


def from_list_string(list_string, convert=str):
    """Split a comma separated CLI value ("8,9,10") and convert each item"""
    return [convert(x.strip()) for x in list_string.split(",") if x.strip()]


def derive_seed(master, *keys) -> int:
    """Derive a reproducible 64-bit child seed from a master seed and integer keys.

    Uses numpy's SeedSequence spawn keys, so the derivation is independent of
    the order in which children are requested.
    """
    sequence = np.random.SeedSequence(entropy=int(master), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def make_rng(seed):
    """Return the project's named generator (numpy PCG64) for a seed."""
    return np.random.Generator(np.random.PCG64(int(seed)))
