# -*- encoding: utf-8 -*-
"""Sequence element ordering over a candidate sub-matrix.

Four algorithms restore the order of recalled elements:

* simple sort: rows by descending non-zero count, no filtering;
* node ordering: repeatedly take the rows with the most non-zero elements;
* enhanced node ordering: as node ordering, ties settled by row weight sum;
* weighted edges node ordering: rows with the largest weight sum.

The three branching algorithms explore every tied row depth-first. After a row
is taken, its row and column are dropped and the remaining matrix shrinks to the
nodes the taken row points to, which removes elements of other sequences. Rows
that cannot complete the ordering are skipped, and when a whole tier of rows
ends in dead ends the next tier is tried. Every completed ordering is validated
as a transitive tournament before it is reported.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ssakg.memory.constants import ALGORITHM, BRANCHING, DEFAULT_BRANCH_BUDGET
from ssakg.memory.exceptions import (
    AmbiguityOverflow,
    InvalidParams,
    MalformedPath,
    NoValidOrdering,
    SymbolOutOfRange,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MatrixView:
    """Directed sub-matrix over an ascending list of symbols."""

    symbols: Tuple[int, ...]
    adj: np.ndarray
    wts: np.ndarray
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = len(self.symbols)
        if list(self.symbols) != sorted(set(self.symbols)):
            raise InvalidParams("View symbols must be strictly ascending.")
        if self.adj.shape != (m, m) or self.wts.shape != (m, m):
            raise InvalidParams("View matrices must be %dx%d." % (m, m))
        if self.adj.diagonal().any() or self.wts.diagonal().any():
            raise InvalidParams("View matrices must have a zero diagonal.")
        if not np.array_equal(self.wts > 0, self.adj.astype(bool)):
            raise InvalidParams("View weights must be positive exactly where edges exist.")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.symbols)})

    @property
    def m(self):
        return len(self.symbols)

    def index_of(self, symbol):
        try:
            return self._index[int(symbol)]
        except KeyError:
            raise SymbolOutOfRange("Symbol %s is not part of this view." % symbol)


@dataclass
class OrderingOutcome:
    orderings: List[List[int]]
    branch_count: int
    explored: int
    paths: List[List[int]] = field(default_factory=list)

    @property
    def unique(self):
        return len(self.orderings) == 1


def simple_sort(view: MatrixView) -> List[int]:
    """Symbols by descending row count, ties by ascending id. No removal, no validation."""
    counts = np.count_nonzero(view.adj, axis=1)
    # Stable sort keeps ascending symbol order between equal counts.
    order = np.argsort(-counts, kind="stable")
    return [view.symbols[i] for i in order]


def validate_tournament(view: MatrixView, ordering: Sequence[int]) -> bool:
    """True if every element of ordering points to every element after it."""
    idx = [view.index_of(s) for s in ordering]
    if len(set(idx)) != len(idx):
        return False
    if len(idx) < 2:
        return True
    sub = view.adj[np.ix_(idx, idx)]
    return bool(sub[np.triu_indices(len(idx), k=1)].all())


def path_to_permutation(path: Sequence[int], labels: Optional[Sequence] = None) -> list:
    """Apply 1-based elimination indices to a shrinking label list.

    labels defaults to [1..len(path)]; a shorter path over explicit labels gives
    a partial permutation.
    """
    remaining = list(labels) if labels is not None else list(range(1, len(path) + 1))
    if len(path) > len(remaining):
        raise MalformedPath("Path of length %d over %d labels." % (len(path), len(remaining)))
    permutation = []
    for step, index in enumerate(path):
        if not 1 <= index <= len(remaining):
            raise MalformedPath(
                "Index %s at step %d is outside [1, %d]." % (index, step + 1, len(remaining))
            )
        permutation.append(remaining.pop(index - 1))
    return permutation


def permutation_to_path(permutation: Sequence, labels: Optional[Sequence] = None) -> List[int]:
    """Inverse of path_to_permutation."""
    remaining = list(labels) if labels is not None else list(range(1, len(permutation) + 1))
    path = []
    for step, label in enumerate(permutation):
        try:
            index = remaining.index(label)
        except ValueError:
            raise MalformedPath("Label %s at step %d is not available." % (label, step + 1))
        path.append(index + 1)
        remaining.pop(index)
    return path


def _feasible(adj, remaining, need, required, missing):
    """Rows of remaining that can still head need elements covering every missing required row."""
    wanted = required[remaining]
    own = wanted.astype(np.int64)
    total = int(own.sum())
    if total < missing:
        return remaining[:0]
    block = adj[np.ix_(remaining, remaining)]
    counts = np.count_nonzero(block, axis=1)
    covered = np.count_nonzero(block[:, wanted], axis=1) + own
    fits = (counts >= need - 1) & (covered == total) & (total - own <= need - 1)
    return remaining[fits]


def _tiers(algo, adj, wts, rows, remaining):
    """Group rows by the priority of the chosen algorithm, best tier first, ascending within a tier."""
    block = np.ix_(rows, remaining)
    counts = np.count_nonzero(adj[block], axis=1).tolist()
    sums = wts[block].sum(axis=1).tolist()
    if algo == ALGORITHM.WEIGHTED:
        keys = [(s,) for s in sums]
    elif algo == ALGORITHM.ENHANCED:
        keys = list(zip(counts, sums))
    else:
        keys = [(c,) for c in counts]
    tiers = {}
    for row, key in zip(rows.tolist(), keys):
        tiers.setdefault(key, []).append(row)
    return [tiers[key] for key in sorted(tiers, reverse=True)]


def branching_order(
    view: MatrixView,
    algo,
    target_len: int,
    branch_budget: int = DEFAULT_BRANCH_BUDGET,
    required: Iterable[int] = (),
) -> OrderingOutcome:
    """Depth-first ordering search using the row selection rule of the chosen algorithm.

    Only rows that can still complete target_len elements holding every required
    symbol are considered. The best tier is explored first; lower tiers are tried
    only when no row of a better tier leads to a completed ordering.
    """
    algo = ALGORITHM.from_tag(algo)
    if algo not in BRANCHING:
        raise InvalidParams("%s is not a branching algorithm." % algo.tag)
    if not 1 <= target_len <= view.m:
        raise InvalidParams("target_len must be within [1, %d], got %s." % (view.m, target_len))
    if branch_budget < 1:
        raise InvalidParams("branch_budget must be at least 1, got %s." % branch_budget)

    adj = view.adj.astype(bool)
    wts = np.where(adj, view.wts, 0)
    wanted = np.zeros(view.m, dtype=bool)
    for symbol in set(int(s) for s in required):
        wanted[view.index_of(symbol)] = True
    stats = {"branches": 0, "explored": 0}
    found = []

    def leaf():
        stats["branches"] += 1
        if stats["branches"] > branch_budget:
            raise AmbiguityOverflow(
                "More than %d branches explored for %d candidates (%s)."
                % (branch_budget, view.m, algo.tag),
                explored=stats["explored"],
                branch_budget=branch_budget,
            )

    def explore(prefix, remaining, missing):
        if len(prefix) == target_len:
            leaf()
            found.append(list(prefix))
            return True
        rows = _feasible(adj, remaining, target_len - len(prefix), wanted, missing)
        if rows.size == 0:
            leaf()
            return False
        for tier in _tiers(algo, adj, wts, rows, remaining):
            completed = False
            for row in tier:
                stats["explored"] += 1
                prefix.append(row)
                successors = remaining[adj[row, remaining]]
                completed = explore(prefix, successors, missing - int(wanted[row])) or completed
                prefix.pop()
            if completed:
                return True
        return False

    explore([], np.arange(view.m), int(np.count_nonzero(wanted)))

    orderings, paths = [], []
    for rows in found:
        ordering = [view.symbols[i] for i in rows]
        if validate_tournament(view, ordering):
            orderings.append(ordering)
            paths.append(permutation_to_path(ordering, labels=view.symbols))

    _LOGGER.debug(
        "%s ordering over %d candidates: %d branches, %d explored, %d valid",
        algo.tag, view.m, stats["branches"], stats["explored"], len(orderings),
    )
    if not orderings:
        raise NoValidOrdering(
            "No transitive tournament of %d over %d candidates after %d %s branches."
            % (target_len, view.m, stats["branches"], algo.tag)
        )
    return OrderingOutcome(
        orderings=orderings,
        branch_count=stats["branches"],
        explored=stats["explored"],
        paths=paths,
    )


def order(view: MatrixView, algo, target_len: Optional[int] = None,
          branch_budget: int = DEFAULT_BRANCH_BUDGET, required: Iterable[int] = ()) -> OrderingOutcome:
    """Run any of the four algorithms.

    Simple sort is truncated to target_len, not validated and ignores required.
    """
    algo = ALGORITHM.from_tag(algo)
    target_len = view.m if target_len is None else target_len
    if algo in BRANCHING:
        return branching_order(view, algo, target_len, branch_budget, required)
    if not 1 <= target_len <= view.m:
        raise InvalidParams("target_len must be within [1, %d], got %s." % (view.m, target_len))
    ordering = simple_sort(view)[:target_len]
    return OrderingOutcome(
        orderings=[ordering],
        branch_count=1,
        explored=view.m,
        paths=[permutation_to_path(ordering, labels=view.symbols)],
    )


def exhaustive_orderings(view: MatrixView, target_len: int) -> List[List[int]]:
    """Every length-target_len permutation of the view that validates. Small views only."""
    rows = view.adj.tolist()
    valid = []
    for perm in itertools.permutations(range(view.m), target_len):
        if all(rows[a][b] for i, a in enumerate(perm) for b in perm[i + 1:]):
            valid.append([view.symbols[i] for i in perm])
    return valid
