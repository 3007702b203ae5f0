"""
Functional simulation of associative recall: noisy probes of the stored
patterns settle under the Chua-Yang dynamics, integrated by forward Euler.
"""

import logging

import numpy as np

from xcmosbench.base.constants import CNN_SEED

from .templates import check_patterns

lgr = logging.getLogger(__name__)


class RecallStats(object):
    """
    Members:
    --------
    pixel_accuracy : float
        mean fraction of output pixels equal to the stored pattern
    trials_recalled : float
        fraction of trials recalling the whole pattern
    settle_steps : float
        mean number of Euler steps
    settle_time_tau : float
        mean settling time, in cell time constants
    n_trials : int
    n_unsettled : int
        trials stopped at max_steps
    """

    def __init__(self, pixel_accuracy, trials_recalled, settle_steps, settle_time_tau,
                 n_trials, n_unsettled=0):
        self.pixel_accuracy = pixel_accuracy
        self.trials_recalled = trials_recalled
        self.settle_steps = settle_steps
        self.settle_time_tau = settle_time_tau
        self.n_trials = n_trials
        self.n_unsettled = n_unsettled

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return ('RecallStats(pixel_accuracy={a:.4f}, trials_recalled={r:.4f}, '
                'settle_steps={s:.4g})').format(a=self.pixel_accuracy,
                                                r=self.trials_recalled,
                                                s=self.settle_steps)


def cell_output(x):
    """ Piecewise-linear CNN output, (|x+1| - |x-1|)/2; exactly +-1 when saturated """
    return np.clip(x, -1.0, 1.0)


def euler_step(weights, x, dt):
    """ One forward Euler step of dx/dt = -x + feedback(y) """
    return x + dt * (-x + weights.feedback(cell_output(x)))


def settle(weights, x0, cfg):
    """
    Integrates from the state x0 until every cell is saturated and the
    outputs have not changed for cfg.stable_steps steps, or cfg.max_steps.

    Returns
    -------
    y : np.ndarray
        final outputs
    steps : int
    settled : bool
    """
    x = np.array(x0, dtype=float)
    y = cell_output(x)
    stable = 0
    threshold = 1.0 - cfg.settle_tolerance
    for step in range(1, cfg.max_steps + 1):
        x = euler_step(weights, x, cfg.dt)
        y_new = cell_output(x)
        if np.array_equal(y_new, y):
            stable += 1
        else:
            stable = 0
        y = y_new
        if stable >= cfg.stable_steps and np.all(np.abs(x) >= threshold):
            return y, step, True
    return y, cfg.max_steps, False


def noisy_probe(pattern, noise_fraction, rng):
    """
    Copy of 'pattern' with round(noise_fraction*N) pixels, chosen uniformly
    at random, flipped
    """
    probe = np.array(pattern, dtype=float)
    n_flip = int(round(noise_fraction * probe.size))
    flat = probe.reshape(-1)
    flat[rng.choice(probe.size, size=n_flip, replace=False)] *= -1
    return probe


def simulate_recall(weights, stored, cfg, seed=CNN_SEED):
    """
    Recall trials: trial t probes stored pattern t mod P, with its own
    random generator spawned from 'seed', so a seed replays every
    trajectory exactly.

    Parameters
    ----------
    weights : TemplateWeights
    stored : array_like, shape (P, rows, cols)
    cfg : CnnConfig
    seed : int

    Returns
    -------
    RecallStats
    """
    stored = check_patterns(stored, cfg)
    children = np.random.SeedSequence(seed).spawn(cfg.n_trials)

    accuracy = np.zeros(cfg.n_trials)
    steps = np.zeros(cfg.n_trials, dtype=int)
    unsettled = 0
    for t, child in enumerate(children):
        target = stored[t % len(stored)]
        probe = noisy_probe(target, cfg.noise_fraction, np.random.default_rng(child))
        y, steps[t], settled = settle(weights, probe, cfg)
        accuracy[t] = np.mean(np.sign(y) == target)
        if not settled:
            unsettled += 1

    if unsettled:
        lgr.warning('Warning: {u} of {n} recall trials did not settle within {m} '
                    'steps'.format(u=unsettled, n=cfg.n_trials, m=cfg.max_steps))
    mean_steps = float(np.mean(steps))
    return RecallStats(
        pixel_accuracy=float(np.mean(accuracy)),
        trials_recalled=float(np.mean(accuracy == 1.0)),
        settle_steps=mean_steps,
        settle_time_tau=mean_steps * cfg.dt,
        n_trials=cfg.n_trials,
        n_unsettled=unsettled,
    )
