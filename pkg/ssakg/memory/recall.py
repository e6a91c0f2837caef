# -*- encoding: utf-8 -*-
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Optional

import numpy as np

from ssakg.memory.constants import ALGORITHM, DEFAULT_BRANCH_BUDGET
from ssakg.memory.exceptions import InconsistentContext, InvalidParams
from ssakg.memory.ordering import order

_LOGGER = logging.getLogger(__name__)


@dataclass
class RecallResult:
    context: FrozenSet[int]
    candidates: FrozenSet[int]
    orderings: List[List[int]]
    branch_count: int
    explored: int = 0
    paths: List[List[int]] = field(default_factory=list)

    @property
    def unique(self):
        return len(self.orderings) == 1

    @property
    def first(self):
        return self.orderings[0] if self.orderings else []


def _context_ids(graph, context):
    ids = np.unique(graph.check_symbols(context))
    if ids.size == 0:
        raise InvalidParams("Context must hold at least one symbol.")
    return ids


def candidate_set(graph, context: Iterable[int]) -> FrozenSet[int]:
    """Context plus every node connected, in either direction, to all context symbols."""
    ids = _context_ids(graph, context)
    symmetric = graph.symmetric()

    pairs = symmetric[np.ix_(ids, ids)]
    np.fill_diagonal(pairs, True)
    if not pairs.all():
        rows, cols = np.nonzero(~pairs)
        u, v = int(ids[rows[0]]), int(ids[cols[0]])
        raise InconsistentContext(
            "Context symbols %d and %d never occur in one stored sequence." % (u, v)
        )

    matching = symmetric[:, ids].all(axis=1)
    matching[ids] = True
    candidates = frozenset(int(s) for s in np.flatnonzero(matching))
    _LOGGER.debug("Context of %d symbols selects %d candidates", ids.size, len(candidates))
    return candidates


def recall_sequence(
    graph,
    context: Iterable[int],
    algo=ALGORITHM.WEIGHTED,
    target_len: Optional[int] = None,
    branch_budget: int = DEFAULT_BRANCH_BUDGET,
) -> RecallResult:
    """Recall full sequences for an unordered context.

    Branching algorithms only report orderings that hold every context symbol.
    Raises InconsistentContext, NoValidOrdering or AmbiguityOverflow.
    """
    algo = ALGORITHM.from_tag(algo)
    context_set = frozenset(int(s) for s in _context_ids(graph, context))
    candidates = candidate_set(graph, context_set)
    view = graph.view(candidates)
    length = len(candidates) if target_len is None else target_len

    # The simple sort baseline ignores the context, the branching searches must cover it.
    outcome = order(view, algo, length, branch_budget, required=context_set)

    return RecallResult(
        context=context_set,
        candidates=candidates,
        orderings=outcome.orderings,
        branch_count=outcome.branch_count,
        explored=outcome.explored,
        paths=outcome.paths,
    )
