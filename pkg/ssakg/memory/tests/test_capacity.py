# -*- encoding: utf-8 -*-
from __future__ import print_function, unicode_literals, division, absolute_import

import math

import numpy as np
import pytest

from ssakg.decorators import timing
from ssakg.memory import capacity as model
from ssakg.memory.exceptions import InvalidParams
from ssakg.memory.graph import new_graph

XI_15_1000 = 210 / 999000.0


def test_xi():
    assert model.xi(1000, 1000) == 1.0
    assert model.xi(15, 1000) == pytest.approx(2.1021021e-4, rel=1e-7)
    assert model.xi(2, 1000) == pytest.approx(2 / 999000.0)
    with pytest.raises(InvalidParams):
        model.xi(1, 1000)
    with pytest.raises(InvalidParams):
        model.xi(1001, 1000)


def test_edges_from_density():
    assert model.edges_from_density(1, 20) == 380
    assert model.edges_from_density(0, 1000) == 0
    assert model.edges_from_density(0.5, 1000) == 499500
    with pytest.raises(InvalidParams):
        model.edges_from_density(1.5, 20)
    with pytest.raises(InvalidParams):
        model.edges_from_density(0.5, 1)


def test_expected_new_edges():
    assert model.expected_new_edges(0, 15) == 210
    assert model.expected_new_edges(1, 15) == 0
    assert model.expected_new_edges(0.5, 15) == 105
    with pytest.raises(InvalidParams):
        model.expected_new_edges(-0.1, 15)


def test_density_step():
    assert model.density_step(0, XI_15_1000) == pytest.approx(XI_15_1000)
    assert model.density_step(1, XI_15_1000) == 1.0
    with pytest.raises(InvalidParams):
        model.density_step(0.5, 0)


def test_density_after():
    assert model.density_after(0, XI_15_1000) == 0.0
    assert model.density_after(1, XI_15_1000) == pytest.approx(XI_15_1000, rel=1e-12)
    assert model.density_after(1000, XI_15_1000) == pytest.approx(0.18960, abs=1e-5)
    assert model.density_after(3, 1.0) == 1.0
    with pytest.raises(InvalidParams):
        model.density_after(-1, XI_15_1000)


def test_density_after_lengths():
    uniform = model.density_after_lengths([15] * 1000, 1000)
    assert uniform == pytest.approx(model.density_after(1000, XI_15_1000), rel=1e-12)
    assert model.density_after_lengths([], 1000) == 0.0
    assert model.density_after_lengths([10, 1000], 1000) == 1.0
    mixed = model.density_after_lengths([2, 3], 10)
    assert mixed == pytest.approx(1 - (1 - 2 / 90.0) * (1 - 6 / 90.0))


@timing(1)
def test_recurrence_matches_closed_form():
    for xi_value in (XI_15_1000, 1e-3, 0.02):
        d = 0.0
        for s in range(1, 10001):
            d = model.density_step(d, xi_value)
            if s % 500 == 0:
                assert abs(d - model.density_after(s, xi_value)) < 1e-12


def test_capacity():
    assert model.capacity(XI_15_1000, XI_15_1000) == pytest.approx(1.0)
    assert math.floor(model.capacity(0.5, XI_15_1000)) == 3297
    for bad in (0, 1, -0.5, 1.5):
        with pytest.raises(InvalidParams):
            model.capacity(bad, XI_15_1000)
    with pytest.raises(InvalidParams):
        model.capacity(0.5, 1.0)


def test_capacity_inverts_density():
    """capacity(density_after(s, xi), xi) == s wherever 1 - d is still resolvable in floating point."""
    rng = np.random.default_rng(99)
    checked = 0
    for _ in range(2000):
        s = int(rng.integers(1, 100001))
        xi_value = float(10 ** rng.uniform(-6, -1))
        if s * xi_value > 10:
            continue
        d = model.density_after(s, xi_value)
        assert model.capacity(d, xi_value) == pytest.approx(s, rel=1e-9)
        checked += 1
    assert checked > 100


def test_capacity_grows_quadratically():
    ratio = model.capacity(0.5, model.xi(15, 4000)) / model.capacity(0.5, model.xi(15, 2000))
    assert 3.9 <= ratio <= 4.1


def test_nodes_for_capacity():
    n = model.nodes_for_capacity(1000, 15)
    assert model.capacity(0.5, model.xi(15, n)) >= 1000
    assert model.capacity(0.5, model.xi(15, n - 1)) < 1000
    assert model.nodes_for_capacity(1, 15) >= 15
    with pytest.raises(InvalidParams):
        model.nodes_for_capacity(0, 15)
    with pytest.raises(InvalidParams):
        model.nodes_for_capacity(10, 1)


class TestDensityModel:
    def test_values(self):
        density_model = model.DensityModel(n=1000, L=15)
        assert density_model.xi == pytest.approx(XI_15_1000)
        assert density_model.capacity_floor() == 3297
        assert density_model.capacity(0.5) == pytest.approx(model.capacity(0.5, XI_15_1000))
        assert density_model.density_after(1000) == pytest.approx(0.18960, abs=1e-5)

    def test_curve(self):
        curve = model.DensityModel(n=100, L=10).density_curve(500, step=50)
        assert len(curve) == 11
        assert curve[0] == 0.0
        assert all(a < b for a, b in zip(curve, curve[1:]))

    @pytest.mark.parametrize("kwargs", [
        {"n": 1000, "L": 1},
        {"n": 10, "L": 11},
        {"n": 1000, "L": 15, "d_crit": 0},
        {"n": 1000, "L": 15, "d_crit": 1},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(InvalidParams):
            model.DensityModel(**kwargs)


@timing(1)
def test_measured_density_follows_model():
    """Co-occurrence density of flat random graphs stays within 2% of the prediction."""
    predicted = model.density_after(1000, XI_15_1000)
    measured = []
    for seed in range(10):
        rng = np.random.default_rng(seed)
        graph = new_graph(1000)
        for _ in range(1000):
            graph.store_sequence(rng.choice(1000, size=15, replace=False))
        measured.append(graph.symmetric_density())
        # one ordered pair per stored co-occurrence, so the directed graph is about half as dense
        assert graph.density() < graph.symmetric_density()
    assert abs(np.mean(measured) - predicted) / predicted < 0.02
