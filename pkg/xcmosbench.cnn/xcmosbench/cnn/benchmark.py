"""
End-to-end associative-memory benchmark: Hebbian template, recall
simulation and the cost of one association.
"""

import logging

from xcmosbench.base.constants import (CNN_ACCURACY_GATE,
                                       CNN_PATTERNS_DEFAULT,
                                       CNN_SEED)

from .cost import (CnnCostModel,
                   cnn_energy_delay)
from .patterns import random_bipolar_patterns
from .recall import simulate_recall
from .templates import (CnnConfig,
                        hebbian_weights)

lgr = logging.getLogger(__name__)


class CnnResult(object):
    """
    Members:
    --------
    name : str
        cost model
    kind : CnnKind
    device : str
    pixel_accuracy : float
    E_assoc : float
        energy per association (J)
    t_assoc : float
        delay per association (s)
    passed : bool
        pixel_accuracy reached the accuracy gate
    stats : RecallStats
    """

    def __init__(self, name, kind, device, pixel_accuracy, E_assoc, t_assoc, passed,
                 stats=None):
        self.name = name
        self.kind = kind
        self.device = device
        self.pixel_accuracy = pixel_accuracy
        self.E_assoc = E_assoc
        self.t_assoc = t_assoc
        self.passed = passed
        self.stats = stats

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return ('CnnResult({n!r}, pixel_accuracy={a:.4f}, E_assoc={e:.4g}, '
                't_assoc={t:.4g}, passed={p})').format(n=self.name, a=self.pixel_accuracy,
                                                      e=self.E_assoc, t=self.t_assoc,
                                                      p=self.passed)


def recall_stats(cfg=None, patterns=None, seed=CNN_SEED):
    """
    Recall statistics of the Hebbian memory storing 'patterns' (default:
    CNN_PATTERNS_DEFAULT random patterns drawn from 'seed')
    """
    if cfg is None:
        cfg = CnnConfig()
    if patterns is None:
        patterns = random_bipolar_patterns(cfg.rows, cfg.cols, CNN_PATTERNS_DEFAULT, seed)
    weights = hebbian_weights(patterns, cfg)
    return simulate_recall(weights, patterns, cfg, seed=seed)


def association_benchmark(
        device,
        kind,
        cfg=None,
        extras=None,
        patterns=None,
        seed=CNN_SEED,
        stats=None,
        name=None,
        accuracy_gate=CNN_ACCURACY_GATE
        ):
    """
    Accuracy, energy and delay of one association for a CNN built from
    'device' with a cost model of the given kind.

    Parameters
    ----------
    device : DeviceParams
    kind : CnnKind or str
    cfg : CnnConfig, optional
    extras : dict, optional
        cost model extras
    patterns : array_like, optional
        stored patterns; random ones by default
    seed : int
    stats : RecallStats, optional
        reuse a recall simulation (the dynamics do not depend on the cost
        model)
    name : str, optional
    accuracy_gate : float

    Returns
    -------
    CnnResult
    """
    if cfg is None:
        cfg = CnnConfig()
    cost = CnnCostModel(kind, device, extras, name=name)
    if stats is None:
        stats = recall_stats(cfg, patterns, seed)
    E_assoc, t_assoc = cnn_energy_delay(cost, cfg, stats)

    passed = stats.pixel_accuracy >= accuracy_gate
    if not passed:
        lgr.info('{n}: pixel accuracy {a:.3f} below the {g:.2f} gate'.format(
            n=cost.name, a=stats.pixel_accuracy, g=accuracy_gate))
    return CnnResult(
        name=cost.name,
        kind=cost.kind,
        device=device.name,
        pixel_accuracy=stats.pixel_accuracy,
        E_assoc=E_assoc,
        t_assoc=t_assoc,
        passed=passed,
        stats=stats,
    )
