# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import itertools

import numpy as np
import pytest

from ssakg.decorators import timing
from ssakg.memory.constants import ALGORITHM, BRANCHING
from ssakg.memory.exceptions import InconsistentContext, InvalidParams, NoValidOrdering, SymbolOutOfRange
from ssakg.memory.graph import new_graph
from ssakg.memory.recall import candidate_set, recall_sequence


@pytest.fixture
def two_sequences():
    graph = new_graph(20)
    graph.store_sequence([2, 6, 11])
    graph.store_sequence([11, 8, 2])
    return graph


def test_candidate_set():
    graph = new_graph(20)
    graph.store_sequence([2, 6, 11])
    assert candidate_set(graph, {6, 11}) == frozenset({2, 6, 11})
    assert candidate_set(graph, [2]) == frozenset({2, 6, 11})
    with pytest.raises(InconsistentContext):
        candidate_set(graph, {6, 8})


def test_candidate_set_of_isolated_symbol():
    graph = new_graph(20)
    graph.store_sequence([2, 6, 11])
    assert candidate_set(graph, [15]) == frozenset({15})


def test_candidate_set_overlap(two_sequences):
    assert candidate_set(two_sequences, {2}) == frozenset({2, 6, 8, 11})
    assert candidate_set(two_sequences, {8}) == frozenset({2, 8, 11})
    assert candidate_set(two_sequences, {2, 11}) == frozenset({2, 6, 8, 11})


def test_bad_contexts(two_sequences):
    with pytest.raises(InvalidParams):
        candidate_set(two_sequences, [])
    with pytest.raises(SymbolOutOfRange):
        candidate_set(two_sequences, [2, 20])
    with pytest.raises(InvalidParams):
        recall_sequence(two_sequences, [])


def test_recall_examples(two_sequences):
    graph = new_graph(20)
    graph.store_sequence([2, 6, 11])
    result = recall_sequence(graph, {11, 2}, ALGORITHM.WEIGHTED)
    assert result.orderings == [[2, 6, 11]]
    assert result.unique
    assert result.first == [2, 6, 11]
    assert result.context == frozenset({2, 11})

    result = recall_sequence(two_sequences, {8}, ALGORITHM.WEIGHTED, target_len=3)
    assert result.candidates == frozenset({2, 8, 11})
    assert result.orderings == [[11, 8, 2]]
    assert result.unique


def test_recall_orderings_hold_the_context():
    graph = new_graph(10)
    graph.store_sequence([0, 1, 2])
    graph.store_sequence([3, 7, 8, 1, 2])
    result = recall_sequence(graph, {1, 2}, ALGORITHM.WEIGHTED, target_len=3)
    assert result.orderings == [[3, 1, 2]]
    node = recall_sequence(graph, {1, 2}, ALGORITHM.NODE, target_len=3)
    assert node.orderings == [[3, 1, 2]]


def test_recall_of_a_cycle():
    graph = new_graph(5)
    graph.store_sequences([[0, 1], [1, 2], [2, 0]])
    assert candidate_set(graph, {0, 1, 2}) == frozenset({0, 1, 2})
    for algo in BRANCHING:
        with pytest.raises(NoValidOrdering):
            recall_sequence(graph, {0, 1, 2}, algo)


@timing(10)
def test_full_context_recall_on_a_dense_graph():
    """Weighted recall from a whole stored sequence always succeeds near the working density."""
    rng = np.random.default_rng(1)
    graph = new_graph(1000)
    sequences = [[int(s) for s in rng.choice(1000, size=15, replace=False)] for _ in range(1000)]
    graph.store_sequences(sequences)
    assert graph.symmetric_density() == pytest.approx(0.19, abs=0.01)
    for sequence in sequences[:100]:
        result = recall_sequence(graph, sequence, ALGORITHM.WEIGHTED, target_len=15)
        assert sorted(result.first) == sorted(sequence)


def test_simple_recall_is_not_filtered(two_sequences):
    result = recall_sequence(two_sequences, {2}, ALGORITHM.SIMPLE, target_len=3)
    assert result.unique
    assert len(result.first) == 3
    assert result.branch_count == 1


def test_context_order_does_not_matter(two_sequences):
    context = [11, 2, 6]
    expected = recall_sequence(two_sequences, context, ALGORITHM.NODE)
    for permutation in itertools.permutations(context):
        result = recall_sequence(two_sequences, list(permutation), ALGORITHM.NODE)
        assert result.orderings == expected.orderings
        assert result.candidates == expected.candidates
        assert result.branch_count == expected.branch_count


@timing(10)
def test_single_sequence_roundtrip():
    """A lone stored sequence comes back exactly from any non-empty part of it."""
    rng = np.random.default_rng(21)
    for _ in range(10):
        graph = new_graph(40)
        sequence = [int(s) for s in rng.choice(40, size=8, replace=False)]
        graph.store_sequence(sequence)
        for size in range(1, 9):
            context = [int(s) for s in rng.choice(sequence, size=size, replace=False)]
            assert candidate_set(graph, context) == frozenset(sequence)
            for algo in BRANCHING:
                result = recall_sequence(graph, context, algo)
                assert result.orderings == [sequence]
                assert result.branch_count == 1


def test_candidates_shrink_with_context():
    rng = np.random.default_rng(8)
    graph = new_graph(60)
    sequences = [[int(s) for s in rng.choice(60, size=10, replace=False)] for _ in range(30)]
    graph.store_sequences(sequences)
    assert np.array_equal(graph.symmetric(), graph.symmetric().T)
    for sequence in sequences:
        previous = None
        for size in range(1, len(sequence) + 1):
            current = candidate_set(graph, sequence[:size])
            assert frozenset(sequence).issubset(current)
            if previous is not None:
                assert current.issubset(previous)
            previous = current
