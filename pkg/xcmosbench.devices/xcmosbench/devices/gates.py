"""
Per-gate metrics and the gate-metrics provider used by the circuit
benchmarks.
"""

import math

from xcmosbench.base.enums import (DeviceClass,
                                   GateKind)
from xcmosbench.base.errors import InvalidParameterError


class GateMetrics(object):
    """
    Metrics of one logic gate

    Members:
    --------
    kind : GateKind
    t_gate : float
        gate delay (s)
    E_dyn : float
        dynamic energy per switching event (J)
    P_leak : float
        static (leakage) power (W)
    A_gate : float
        gate footprint (m^2)
    hold_time : float
        time the gate is held clocked after evaluating (s); only NDR
        gates use it
    """

    def __init__(
            self,
            kind,
            t_gate,
            E_dyn,
            P_leak,
            A_gate,
            hold_time=0.0
            ):
        self.kind = GateKind(kind)
        self.t_gate = float(t_gate)
        self.E_dyn = float(E_dyn)
        self.P_leak = float(P_leak)
        self.A_gate = float(A_gate)
        self.hold_time = float(hold_time)
        self.validate()

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return ('GateMetrics({k}, t_gate={t:.4g}, E_dyn={e:.4g}, '
                'P_leak={p:.4g}, A_gate={a:.4g})').format(
            k=self.kind.value, t=self.t_gate, e=self.E_dyn,
            p=self.P_leak, a=self.A_gate)

    @property
    def E_hold(self):
        """
        Static energy spent while the gate is held clocked
        """
        return self.P_leak * self.hold_time

    def relabel(self, kind):
        """
        Same metrics, reported for a different gate kind (spintronic
        devices implement every kind with their one native gate)
        """
        return GateMetrics(kind, self.t_gate, self.E_dyn, self.P_leak,
                           self.A_gate, self.hold_time)

    def validate(self):
        for field in ['t_gate', 'E_dyn', 'P_leak', 'A_gate', 'hold_time']:
            value = getattr(self, field)
            if not (math.isfinite(value) and value >= 0):
                raise InvalidParameterError(
                    'Gate metric {f} must be finite and nonnegative'.format(f=field),
                    expStr='>= 0', gotStr=value
                )
        if not self.t_gate > 0:
            raise InvalidParameterError('Gate delay must be positive', gotStr=self.t_gate,
                                        expStr='> 0')


def gate_metrics(dev, kind, fanout=1, ext_load=0.0, hold_time=0.0):
    """
    Metrics of a gate of the given kind built from the device 'dev',
    whatever its class.

    Parameters
    ----------
    dev : DeviceParams
    kind : GateKind or str
    fanout : int
        number of identical gates driven (charge devices only)
    ext_load : float
        extra load capacitance, F (charge devices only)
    hold_time : float
        clock hold after evaluation, s (NDR devices only)

    Returns
    -------
    metrics : GateMetrics
    """
    # imported here: charge/spin/magnetoelectric all import this module
    from .charge import (fet_gate_metrics,
                         ndr_gate_metrics)
    from .spin import (asl_gate_metrics,
                       csl_gate_metrics,
                       mlogic_gate_metrics)
    from .magnetoelectric import (me_device_metrics,
                                  memtj_gate_metrics)

    kind = GateKind(kind)
    cls = dev.device_class
    if cls in (DeviceClass.ChargeFET, DeviceClass.Ferroelectric):
        return fet_gate_metrics(dev, kind, fanout, ext_load)
    if cls == DeviceClass.NDR:
        return ndr_gate_metrics(dev, hold_time, kind=kind, fanout=fanout, ext_load=ext_load)

    if cls == DeviceClass.ASL:
        native = asl_gate_metrics(dev)
    elif cls == DeviceClass.CSL:
        native = csl_gate_metrics(dev, dev.variant)
    elif cls == DeviceClass.mLogic:
        native = mlogic_gate_metrics(dev)
    elif cls == DeviceClass.MEMTJ:
        native = memtj_gate_metrics(dev, dev.variant)
    else:
        native = me_device_metrics(dev, cls)
    return native.relabel(kind)


class DeviceGates(object):
    """
    Gate-metrics provider: callable returning the GateMetrics of any gate
    kind for one device, with fixed fanout and external load.  Results
    are cached per (kind, hold_time).
    """

    def __init__(self, dev, fanout=1, ext_load=0.0):
        self.dev = dev
        self.fanout = fanout
        self.ext_load = ext_load
        self._cache = {}

    def __call__(self, kind, hold_time=0.0):
        key = (GateKind(kind), hold_time)
        if key not in self._cache:
            self._cache[key] = gate_metrics(
                self.dev, key[0], fanout=self.fanout,
                ext_load=self.ext_load, hold_time=hold_time
            )
        return self._cache[key]

    @property
    def device_class(self):
        return self.dev.device_class

    @property
    def name(self):
        return self.dev.name
