"""   Tests for the module "templates.py"   """

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from xcmosbench.base.errors import InvalidParameterError
from xcmosbench.cnn.patterns import random_bipolar_patterns
from xcmosbench.cnn.templates import (CnnConfig,
                                      hebbian_weights,
                                      neighborhood_offsets,
                                      quantize_weights)

###   Globals   ###

SMALL = CnnConfig(rows=8, cols=8, radius=2, weight_bits=None)


###   Tests   ###

def test_neighborhood_offsets():
    offsets = neighborhood_offsets(3)
    # about 30 neighbours
    assert len(offsets) == 28
    assert len(neighborhood_offsets(1)) == 4
    assert len(neighborhood_offsets(1.5)) == 8
    pairs = set(map(tuple, offsets))
    assert (0, 0) not in pairs
    assert all((-dr, -dc) in pairs for dr, dc in pairs)
    assert all(dr ** 2 + dc ** 2 <= 9 for dr, dc in pairs)


def test_cnn_config():
    cfg = CnnConfig()
    assert (cfg.rows, cfg.cols, cfg.radius) == (16, 16, 3)
    assert cfg.weight_bits == 4
    assert cfg.noise_fraction == 0.1
    assert cfg.dt == 0.1
    assert cfg.max_steps == 2000
    assert cfg.n_cells == 256
    assert cfg.n_neighbors == 28

    assert cfg.replace(noise_fraction=0.2).noise_fraction == 0.2
    assert cfg.replace(noise_fraction=0.2) != cfg
    with pytest.raises(AttributeError):
        cfg.replace(neurons=10)


@pytest.mark.parametrize('changes', [
    dict(rows=3, cols=5),
    dict(weight_bits=0),
    dict(weight_bits=9),
    dict(noise_fraction=0.6),
    dict(noise_fraction=-0.1),
    dict(dt=0),
    dict(radius=0.5),
    dict(max_steps=0),
    dict(settle_tolerance=1.0),
])
def test_cnn_config_errors(changes):
    with pytest.raises(InvalidParameterError):
        CnnConfig(**changes)


def test_quantize_levels():
    W = np.linspace(-1, 1, 1001)
    levels = np.unique(quantize_weights(W, 4, w_max=1.0))
    # sign-magnitude: +-0 coincide
    assert len(levels) == 15
    np.testing.assert_allclose(levels, -levels[::-1])
    assert np.max(levels) == pytest.approx(1.0)

    # out-of-range weights saturate
    np.testing.assert_allclose(quantize_weights([3.0, -3.0], 4, w_max=1.0), [1.0, -1.0])
    # default full scale is the largest weight
    assert quantize_weights([0.2, -0.4], 3)[1] == pytest.approx(-0.4)
    # a single bit keeps the sign
    np.testing.assert_array_equal(quantize_weights([0.3, -0.01], 1, w_max=0.5), [0.5, -0.5])
    np.testing.assert_array_equal(quantize_weights([0.0, 0.0], 4), [0.0, 0.0])

    with pytest.raises(InvalidParameterError):
        quantize_weights(W, 0)


@given(W=st.lists(st.floats(min_value=-2, max_value=2), min_size=1, max_size=50),
       bits=st.integers(min_value=1, max_value=8))
def test_quantize_is_idempotent(W, bits):
    q = quantize_weights(W, bits, w_max=1.0)
    np.testing.assert_array_equal(quantize_weights(q, bits, w_max=1.0), q)
    assert np.all(np.abs(q) <= 1.0 + 1e-12)


def test_hebbian_single_pattern():
    pattern = random_bipolar_patterns(8, 8, 1, seed=3)[0]
    weights = hebbian_weights(pattern, SMALL)
    assert weights.A.shape == (8, 8, len(neighborhood_offsets(2)))
    for (i, j) in [(0, 0), (3, 4), (7, 2)]:
        for k, (dr, dc) in enumerate(weights.offsets):
            if 0 <= i + dr < 8 and 0 <= j + dc < 8:
                assert weights.A[i, j, k] == pattern[i, j] * pattern[i + dr, j + dc]
            else:
                assert weights.A[i, j, k] == 0
    # Hebbian self term plus the diagonal boost
    np.testing.assert_array_equal(weights.self_weight, 3.0)
    assert weights.z == 0


def test_hebbian_contributions_cancel():
    uniform = np.ones((8, 8), dtype=int)
    checkerboard = np.where(np.add.outer(np.arange(8), np.arange(8)) % 2 == 0, 1, -1)
    weights = hebbian_weights([uniform, checkerboard], SMALL)
    for k, (dr, dc) in enumerate(weights.offsets):
        expected = 1.0 if (dr + dc) % 2 == 0 else 0.0
        assert weights.A[4, 4, k] == expected


def test_hebbian_weights_are_symmetric():
    cfg = CnnConfig()
    weights = hebbian_weights(random_bipolar_patterns(16, 16, 4, seed=1), cfg)
    index = {tuple(o): k for k, o in enumerate(weights.offsets)}
    for i, j in [(5, 5), (0, 3), (15, 15)]:
        for k, (dr, dc) in enumerate(weights.offsets):
            if 0 <= i + dr < 16 and 0 <= j + dc < 16:
                back = index[(-dr, -dc)]
                assert weights.A[i, j, k] == weights.A[i + dr, j + dc, back]
    # 4-bit levels on the [-1, 1] scale
    assert np.allclose(weights.A * 7, np.round(weights.A * 7))

    counts = weights.neighbor_counts()
    assert counts[8, 8] == 28
    assert counts[0, 0] == 10


def test_hebbian_errors():
    with pytest.raises(InvalidParameterError):
        hebbian_weights(np.ones((4, 8, 7), dtype=int), SMALL)
    with pytest.raises(InvalidParameterError):
        hebbian_weights(np.zeros((8, 8), dtype=int), SMALL)
    with pytest.raises(InvalidParameterError):
        hebbian_weights(np.ones((8,), dtype=int), SMALL)
