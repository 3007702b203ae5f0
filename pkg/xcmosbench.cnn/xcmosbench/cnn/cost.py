"""
Energy and delay of one association operation for analog, digital and
spintronic CNN implementations.
"""

import logging
import math

from xcmosbench.base.constants import (D_MUL_DEFAULT,
                                       G_MAC_DEFAULT,
                                       K_B,
                                       N_SLOPE_DEFAULT,
                                       Q_E,
                                       T_ROOM)
from xcmosbench.base.enums import (CNN_KIND_CLASSES,
                                   CnnKind,
                                   GateKind)
from xcmosbench.base.errors import InvalidParameterError
from xcmosbench.devices.gates import DeviceGates
from xcmosbench.devices.spin import (asl_spin_current_density,
                                     csl_magnet,
                                     csl_spin_current,
                                     domain_wall_transit_time,
                                     magnet_switching_delay)

lgr = logging.getLogger(__name__)

SPIN_KINDS = (CnnKind.SpinDiffusion, CnnKind.SpinHall, CnnKind.DomainWall)

# extras a cost model cannot do without
REQUIRED_EXTRAS = {
    CnnKind.Analog: ['I_bias', 'C_state'],
    CnnKind.DigitalCMOSLike: [],
    CnnKind.SpinDiffusion: ['I_syn', 'R_ch'],
    CnnKind.SpinHall: ['I_syn', 'R_ch'],
    CnnKind.DomainWall: ['I_syn', 'R_ch'],
}


class CnnCostModel(object):
    """
    Members:
    --------
    kind : CnnKind
    device : DeviceParams
        device the cells are built from
    extras : dict
        Analog: I_bias (A), C_state (F), n_slope
        DigitalCMOSLike: G_MAC (NAND2 equivalents per multiply-accumulate),
            D_mul (NAND2 levels of the multiplier)
        spin kinds: I_syn (A), R_ch (Ohm), E_overhead (J per cell and step)
    name : str
    """

    def __init__(self, kind, device, extras=None, name=None):
        self.kind = CnnKind(kind)
        self.device = device
        self.extras = dict(extras) if extras else {}
        self.name = name if name is not None else '{d}/{k}'.format(
            d=device.name, k=self.kind.value)
        self.validate()

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return 'CnnCostModel({n!r}, {k})'.format(n=self.name, k=self.kind.value)

    def extra(self, key, default=None):
        value = self.extras.get(key, default)
        if value is None:
            raise InvalidParameterError('Cost model %r needs the extra "{k}"'.format(k=key),
                                        self.name)
        return value

    def validate(self):
        self.device.require_class(*CNN_KIND_CLASSES[self.kind])
        for key in REQUIRED_EXTRAS[self.kind]:
            self.extra(key)
        return self


def cost_model_from_entry(entry, library):
    """
    Cost model of a library "cnn_models" entry
    """
    return CnnCostModel(entry.kind, library[entry.device], entry.extras, name=entry.name)


def integration_time(cost):
    """
    Time for a spintronic neuron to integrate one step: the synaptic
    current I_syn fully reverses the magnet (SpinDiffusion, SpinHall) or
    moves the domain wall across the free magnet (DomainWall).
    """
    dev = cost.device
    I_syn = cost.extra('I_syn')
    if cost.kind == CnnKind.SpinDiffusion:
        ch = dev.channel
        I_s = asl_spin_current_density(ch, I_syn / ch.cross_section) * ch.cross_section
        return magnet_switching_delay(dev.magnet, I_s)
    if cost.kind == CnnKind.SpinHall:
        I_s = csl_spin_current(dev, dev.variant, I_drive=I_syn)
        return magnet_switching_delay(csl_magnet(dev, dev.variant), I_s)
    if cost.kind == CnnKind.DomainWall:
        return domain_wall_transit_time(dev, I_write=I_syn)
    raise InvalidParameterError('No integration time for %r', cost.kind.value,
                                expStr=' or '.join(k.value for k in SPIN_KINDS))


def thermal_voltage(T=T_ROOM):
    return K_B * T / Q_E


def cnn_energy_delay(cost, cfg, stats, gates=None):
    """
    Energy and delay of one association.

    Analog:  t = settle_time_tau*tau_cell, tau_cell = C_state/g_m,
             g_m = I_bias/(n_slope*V_T); every cell and synapse draws I_bias
             from V_dd for the whole settling time.
    Digital: (neighbours + 1) multiply-accumulates per cell and step, each
             G_MAC NAND2 equivalents; a step takes the multiplier depth plus
             an adder tree of 4*ceil(log2(neighbours + 1)) NAND2 levels.
    Spin:    every cell integrates I_syn^2*R_ch for the integration time,
             plus a fixed overhead, once per step.

    Parameters
    ----------
    cost : CnnCostModel
    cfg : CnnConfig
    stats : RecallStats
    gates : gate-metrics provider, optional
        NAND2 metrics of the digital cell; defaults to DeviceGates(device)

    Returns
    -------
    E_assoc : float
        (J)
    t_assoc : float
        (s)
    """
    if not stats.settle_steps > 0:
        raise InvalidParameterError('Recall statistics come from an empty run',
                                    expStr='settle_steps > 0', gotStr=stats.settle_steps)
    n_cells = cfg.n_cells
    synapses = cfg.n_neighbors + 1
    steps = stats.settle_steps
    dev = cost.device

    if cost.kind == CnnKind.Analog:
        I_bias = cost.extra('I_bias')
        g_m = I_bias / (cost.extra('n_slope', N_SLOPE_DEFAULT) * thermal_voltage())
        tau_cell = cost.extra('C_state') / g_m
        t_assoc = stats.settle_time_tau * tau_cell
        E_assoc = n_cells * synapses * I_bias * dev.V_dd * t_assoc

    elif cost.kind == CnnKind.DigitalCMOSLike:
        if gates is None:
            gates = DeviceGates(dev)
        nand2 = gates(GateKind.NAND2)
        E_mac = cost.extra('G_MAC', G_MAC_DEFAULT) * nand2.E_dyn
        depth = cost.extra('D_mul', D_MUL_DEFAULT) + 4 * math.ceil(math.log2(synapses))
        E_assoc = steps * n_cells * synapses * E_mac
        t_assoc = steps * depth * nand2.t_gate

    else:
        t_int = integration_time(cost)
        E_step = cost.extra('I_syn') ** 2 * cost.extra('R_ch') * t_int \
            + cost.extra('E_overhead', 0.0)
        E_assoc = steps * n_cells * E_step
        t_assoc = steps * t_int

    lgr.debug('{n}: E_assoc = {e:.4g} J, t_assoc = {t:.4g} s'.format(
        n=cost.name, e=E_assoc, t=t_assoc))
    return E_assoc, t_assoc
