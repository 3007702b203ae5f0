"""   Tests for the module "recall.py"   """

import logging

import numpy as np
import pytest

from xcmosbench.cnn.patterns import (default_patterns,
                                     random_bipolar_patterns)
from xcmosbench.cnn.recall import (cell_output,
                                   euler_step,
                                   noisy_probe,
                                   settle,
                                   simulate_recall)
from xcmosbench.cnn.templates import (CnnConfig,
                                      hebbian_weights)

###   Globals   ###

CFG = CnnConfig()
SEED = 20261016


###   Fixtures   ###

@pytest.fixture(scope='module')
def stored():
    return random_bipolar_patterns(16, 16, 4, seed=SEED)


@pytest.fixture(scope='module')
def weights(stored):
    return hebbian_weights(stored, CFG)


@pytest.fixture(scope='module')
def default_stats(weights, stored):
    return simulate_recall(weights, stored, CFG, seed=SEED)


###   Tests   ###

def test_cell_output():
    np.testing.assert_array_equal(cell_output(np.array([-3.0, -1.0, -0.25, 0.0, 0.5, 1.0, 2.0])),
                                  [-1.0, -1.0, -0.25, 0.0, 0.5, 1.0, 1.0])
    # saturated states give exactly +-1, with no rounding residue
    saturated = cell_output(np.array([1.3, 1.0 + 1e-9, 7.1, -1.3, -2.9]))
    np.testing.assert_array_equal(saturated, [1.0, 1.0, 1.0, -1.0, -1.0])


def test_stored_pattern_is_a_fixed_point():
    pattern = random_bipolar_patterns(16, 16, 1, seed=5)[0]
    weights = hebbian_weights(pattern, CFG)
    x = euler_step(weights, pattern.astype(float), CFG.dt)
    np.testing.assert_array_equal(cell_output(x), pattern)

    y, steps, settled = settle(weights, pattern, CFG)
    assert settled
    assert steps == CFG.stable_steps
    np.testing.assert_array_equal(y, pattern)


def test_noisy_probe():
    pattern = np.ones((16, 16), dtype=int)
    probe = noisy_probe(pattern, 0.1, np.random.default_rng(1))
    # round(25.6) pixels flipped
    assert np.sum(probe < 0) == 26
    np.testing.assert_array_equal(noisy_probe(pattern, 0.0, np.random.default_rng(1)), pattern)


def test_noise_free_recall(stored):
    single = stored[:1]
    stats = simulate_recall(hebbian_weights(single, CFG), single,
                            CFG.replace(noise_fraction=0.0, n_trials=8))
    assert stats.pixel_accuracy == 1.0
    assert stats.trials_recalled == 1.0
    # a noise-free probe is already an equilibrium
    assert stats.settle_steps == CFG.stable_steps
    assert stats.n_unsettled == 0


def test_recall_accuracy(default_stats):
    """
    16x16 grid, 4 stored patterns, radius 3, 4-bit weights, 10% noise,
    100 trials: at least 90% of the pixels are recalled
    """
    assert default_stats.n_trials == 100
    assert default_stats.pixel_accuracy >= 0.90
    assert 0 <= default_stats.trials_recalled <= 1
    assert default_stats.n_unsettled == 0
    assert CFG.stable_steps <= default_stats.settle_steps <= CFG.max_steps
    assert default_stats.settle_time_tau == pytest.approx(default_stats.settle_steps * CFG.dt)


def test_recall_accuracy_shipped_patterns():
    patterns = default_patterns()
    stats = simulate_recall(hebbian_weights(patterns, CFG), patterns, CFG)
    assert stats.pixel_accuracy >= 0.90


def test_recall_is_deterministic(weights, stored, default_stats):
    assert simulate_recall(weights, stored, CFG, seed=SEED) == default_stats
    other = simulate_recall(weights, stored, CFG, seed=SEED + 1)
    assert other.n_trials == default_stats.n_trials


def test_accuracy_drops_with_noise(weights, stored, default_stats):
    # same seeds, so the trials are paired
    noisy = simulate_recall(weights, stored, CFG.replace(noise_fraction=0.3), seed=SEED)
    assert noisy.pixel_accuracy <= default_stats.pixel_accuracy

    cfg = CFG.replace(noise_fraction=0.5, n_trials=20)
    assert simulate_recall(weights, stored, cfg, seed=SEED).pixel_accuracy < 0.90


def test_fine_quantization_is_harmless(stored):
    fine = simulate_recall(hebbian_weights(stored, CFG.replace(weight_bits=8)), stored, CFG,
                           seed=SEED)
    exact_cfg = CFG.replace(weight_bits=None)
    exact = simulate_recall(hebbian_weights(stored, exact_cfg), stored, exact_cfg, seed=SEED)
    assert abs(fine.pixel_accuracy - exact.pixel_accuracy) <= 0.02


def test_unsettled_trials_are_reported(weights, stored, caplog):
    caplog.set_level(logging.WARNING)
    cfg = CFG.replace(max_steps=5, n_trials=4)
    stats = simulate_recall(weights, stored, cfg)
    assert stats.n_unsettled == 4
    assert stats.settle_steps == 5
    assert 'Warning' in caplog.text
    assert 'did not settle' in caplog.text
