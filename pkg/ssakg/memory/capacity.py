# -*- encoding: utf-8 -*-
"""Analytic density and capacity model of a tournament memory graph.

Every stored sequence of length L covers a fraction xi = L(L-1) / (n(n-1)) of
the ordered node pairs. Starting from an empty graph, the density after s
uniformly overlapping sequences is 1 - (1 - xi)^s, and the number of sequences
that fit below a density d is log(1 - d) / log(1 - xi).

All functions are pure and real valued; rounding is left to the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List

from ssakg.memory.constants import DEFAULT_CRITICAL_DENSITY
from ssakg.memory.exceptions import InvalidParams


def _check_fraction(name, value, low_open=False, high_open=False):
    low_ok = value > 0 if low_open else value >= 0
    high_ok = value < 1 if high_open else value <= 1
    if not (low_ok and high_ok):
        raise InvalidParams(
            "%s must lie in %s0, 1%s, got %r."
            % (name, "(" if low_open else "[", ")" if high_open else "]", value)
        )


def xi(L: int, n: int) -> float:
    """Fraction of ordered node pairs covered by one sequence of length L."""
    if n < 2 or L < 2 or L > n:
        raise InvalidParams("Sequence length must lie in [2, n] with n >= 2, got L=%r, n=%r." % (L, n))
    return L * (L - 1) / float(n * (n - 1))


def edges_from_density(d: float, n: int) -> float:
    _check_fraction("density", d)
    if n < 2:
        raise InvalidParams("Node count must be at least 2, got %r." % (n,))
    return d * n * (n - 1)


def expected_new_edges(d: float, L: int) -> float:
    """Expected number of new ordered-pair slots covered by one more sequence.

    An expectation under uniform overlap, not an exact count.
    """
    _check_fraction("density", d)
    if L < 2:
        raise InvalidParams("Sequence length must be at least 2, got %r." % (L,))
    return (1.0 - d) * L * (L - 1)


def density_step(d: float, xi_value: float) -> float:
    """Density after storing one more sequence: d(1 - xi) + xi."""
    _check_fraction("density", d)
    _check_fraction("xi", xi_value, low_open=True)
    return d * (1.0 - xi_value) + xi_value


def density_after(s: int, xi_value: float) -> float:
    """Closed form density after s sequences: 1 - (1 - xi)^s."""
    if s < 0:
        raise InvalidParams("Sequence count must be non-negative, got %r." % (s,))
    _check_fraction("xi", xi_value, low_open=True)
    # expm1/log1p keep precision for the tiny xi of sparse graphs.
    return -math.expm1(s * math.log1p(-xi_value)) if xi_value < 1 else float(s > 0)


def density_after_lengths(lengths: Iterable[int], n: int) -> float:
    """Density after storing sequences of the given lengths: 1 - prod(1 - xi(L_i, n))."""
    log_empty = 0.0
    for length in lengths:
        value = xi(length, n)
        if value >= 1:
            return 1.0
        log_empty += math.log1p(-value)
    return -math.expm1(log_empty)


def capacity(d: float, xi_value: float) -> float:
    """Number of sequences that bring an empty graph to density d."""
    _check_fraction("density", d, low_open=True, high_open=True)
    _check_fraction("xi", xi_value, low_open=True, high_open=True)
    return math.log1p(-d) / math.log1p(-xi_value)


def nodes_for_capacity(s: int, L: int, d: float = DEFAULT_CRITICAL_DENSITY) -> int:
    """Smallest node count whose capacity at density d holds s sequences of length L."""
    if s < 1:
        raise InvalidParams("Sequence count must be at least 1, got %r." % (s,))
    _check_fraction("density", d, low_open=True, high_open=True)
    low, high = L, L
    while high == L or capacity(d, xi(L, high)) < s:
        low, high = high, high * 2
    # capacity grows monotonically with n, bisect for the first n that fits.
    while low < high:
        middle = (low + high) // 2
        if middle > L and capacity(d, xi(L, middle)) >= s:
            high = middle
        else:
            low = middle + 1
    return high


@dataclass(frozen=True)
class DensityModel:
    n: int
    L: int
    d_crit: float = DEFAULT_CRITICAL_DENSITY

    def __post_init__(self):
        xi(self.L, self.n)
        _check_fraction("critical density", self.d_crit, low_open=True, high_open=True)

    @property
    def xi(self):
        return xi(self.L, self.n)

    def density_after(self, s):
        return density_after(s, self.xi)

    def capacity(self, d=None):
        return capacity(self.d_crit if d is None else d, self.xi)

    def capacity_floor(self, d=None):
        return int(math.floor(self.capacity(d)))

    def density_curve(self, s_max: int, step: int = 1) -> List[float]:
        return [self.density_after(s) for s in range(0, s_max + 1, step)]
