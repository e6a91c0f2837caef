# -*- encoding: utf-8 -*-
from __future__ import annotations

import json
import logging

import numpy as np

from ssakg.memory.constants import SNAPSHOT_KEYS
from ssakg.memory.exceptions import (
    DuplicateElement,
    InvalidNodeCount,
    InvalidParams,
    SnapshotError,
    SymbolOutOfRange,
)
from ssakg.memory.ordering import MatrixView


class Ssakg(object):
    """
    Shared memory graph holding every stored sequence as a transitive tournament.

    adjacency[u, v] is set once any stored sequence placed u before v.
    weights[u, v] keeps the largest positional weight L - i ever written for
    that edge (i is the 1-based position of u), so the first element of a
    sequence carries the heaviest outgoing edges.

    A single writer stores sequences; once storage is over the graph is only
    read and can be shared between threads.
    """

    logger = logging.getLogger("ssakg.memory.graph")

    def __init__(self, n):
        if not isinstance(n, (int, np.integer)) or n < 2:
            raise InvalidNodeCount("Graph needs at least 2 nodes, got %r." % (n,))
        self.n = int(n)
        self.adjacency = np.zeros((self.n, self.n), dtype=bool)
        self.weights = np.zeros((self.n, self.n), dtype=np.int64)
        self.stored_count = 0
        self._symmetric = None

    def __str__(self):
        return "Ssakg(n=%d, edges=%d, density=%.6f, stored=%d)" % (
            self.n,
            self.edge_count(),
            self.density(),
            self.stored_count,
        )

    def __eq__(self, other):
        return (
            isinstance(other, Ssakg)
            and self.n == other.n
            and self.stored_count == other.stored_count
            and np.array_equal(self.adjacency, other.adjacency)
            and np.array_equal(self.weights, other.weights)
        )

    def check_symbols(self, symbols):
        """Return symbols as an int array, raising if any id is outside [0, n)."""
        ids = np.asarray(list(symbols), dtype=np.int64)
        if ids.size and (ids.min() < 0 or ids.max() >= self.n):
            bad = [int(s) for s in ids if s < 0 or s >= self.n]
            raise SymbolOutOfRange(
                "Symbols %s are outside the graph's range [0, %d)." % (bad, self.n)
            )
        return ids

    def store_sequence(self, sequence):
        """Write sequence as a transitive tournament: every element points to all later ones."""
        ids = self.check_symbols(sequence)
        length = ids.size
        if length < 2 or length > self.n:
            raise InvalidParams(
                "Sequence length must be within [2, %d], got %d." % (self.n, length)
            )
        if np.unique(ids).size != length:
            seen, repeated = set(), []
            for symbol in ids.tolist():
                if symbol in seen:
                    repeated.append(symbol)
                seen.add(symbol)
            raise DuplicateElement(
                "Sequence repeats symbols %s; encode repeats as virtual objects first." % repeated
            )

        positions = np.arange(length)
        later = positions[:, None] < positions[None, :]
        block_weights = np.where(later, (length - 1 - positions)[:, None], 0)

        block = np.ix_(ids, ids)
        self.adjacency[block] |= later
        self.weights[block] = np.maximum(self.weights[block], block_weights)
        self.stored_count += 1
        self._symmetric = None
        self.logger.debug("Stored sequence #%d of length %d", self.stored_count, length)

    def store_sequences(self, sequences):
        for sequence in sequences:
            self.store_sequence(sequence)
        self.logger.info("Stored %d sequences, density %.6f", self.stored_count, self.density())

    def edge_count(self):
        return int(np.count_nonzero(self.adjacency))

    def density(self):
        """Used directed edges over the n(n-1) possible ones."""
        return self.edge_count() / float(self.n * (self.n - 1))

    def symmetric_density(self):
        """Share of ordered pairs whose symbols occur together in some stored sequence.

        The capacity model predicts this density, the directed one grows at about half the rate.
        """
        return np.count_nonzero(self.symmetric()) / float(self.n * (self.n - 1))

    def symmetric(self):
        """The symmetrised view S = A or A^T used for context matching, cached until the next store."""
        if self._symmetric is None:
            self._symmetric = self.adjacency | self.adjacency.T
        return self._symmetric

    def view(self, symbols):
        """Extract the directed sub-matrix over symbols, rows/columns in ascending id."""
        ids = np.unique(self.check_symbols(symbols))
        block = np.ix_(ids, ids)
        return MatrixView(
            symbols=tuple(int(s) for s in ids),
            adj=self.adjacency[block].copy(),
            wts=self.weights[block].copy(),
        )

    def to_snapshot(self):
        rows, cols = np.nonzero(self.adjacency)
        # np.nonzero walks row-major, edges come out sorted by (u, v).
        edges = [
            [int(u), int(v), int(self.weights[u, v])] for u, v in zip(rows, cols)
        ]
        return {"n": self.n, "stored_count": self.stored_count, "edges": edges}

    @classmethod
    def from_snapshot(cls, document):
        if not isinstance(document, dict) or any(key not in document for key in SNAPSHOT_KEYS):
            raise SnapshotError("Snapshot must be an object with keys %s." % (SNAPSHOT_KEYS,))
        graph = cls(document["n"])
        try:
            graph.stored_count = int(document["stored_count"])
            edges = [(int(u), int(v), int(w)) for u, v, w in document["edges"]]
        except (TypeError, ValueError) as exc:
            raise SnapshotError("Malformed snapshot edge list: %s" % exc)
        for u, v, w in edges:
            if u == v or w < 1 or not (0 <= u < graph.n and 0 <= v < graph.n):
                raise SnapshotError("Invalid edge [%d, %d, %d]." % (u, v, w))
            graph.adjacency[u, v] = True
            graph.weights[u, v] = w
        return graph

    def save(self, path):
        with open(path, "w", encoding="UTF-8") as handle:
            json.dump(self.to_snapshot(), handle)
        self.logger.info("Saved snapshot of %s to %s", self, path)

    @classmethod
    def load(cls, path):
        with open(path, "r", encoding="UTF-8") as handle:
            try:
                document = json.load(handle)
            except json.JSONDecodeError as exc:
                raise SnapshotError("Snapshot %s is not valid JSON: %s" % (path, exc))
        graph = cls.from_snapshot(document)
        cls.logger.info("Loaded snapshot %s from %s", graph, path)
        return graph


def new_graph(n):
    """Create an empty memory graph over n nodes."""
    return Ssakg(n)
