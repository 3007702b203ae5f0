"""
Purpose
----
Run the benchmark suites over a device library and collect the results in
a ResultSet.  Sweeps rerun a suite for a range of values of one device
parameter or one option.

Usage
----
from xcmosbench.bench.runner import BenchOptions, run_suite, run_sweep

rs = run_suite(lib, 'wire', BenchOptions(length=100e-6))
rs = run_sweep(lib, 'alu', BenchOptions(), 'V_dd', [0.2, 0.3, 0.4])

Author
----
xcmosbench developers

Dates
----
2026-10-16

References
----
Suites and the benchmarks they run:
  alu         unpipelined 32-bit ALU in the device's default style
  throughput  throughput density under the power cap, without ("throughput")
              and with ("alu_pipelined") ultra-deep pipelining
  wire        delay and energy of an interconnect of the given length
  span        span of control
  cnn         one row per library CNN cost model
  all         all of the above

License
----
MIT License

Copyright (c) 2026      xcmosbench developers

Permission is hereby granted, free of charge, to any person obtaining a copy
of this software and associated documentation files (the "Software"), to deal
in the Software without restriction, including without limitation the rights
to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
copies of the Software, and to permit persons to whom the Software is
furnished to do so, subject to the following conditions:

The above copyright notice and this permission notice shall be included in all
copies or substantial portions of the Software.

THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
SOFTWARE.
"""

import copy
import logging

import numpy as np

from xcmosbench.base.constants import (ACTIVITY_DEFAULT,
                                       CNN_SEED,
                                       P_CAP_DEFAULT,
                                       WIRE_LENGTH_DEFAULT)
from xcmosbench.base.enums import LimitedBy
from xcmosbench.base.errors import (BenchmarkError,
                                    InvalidParameterError)
from xcmosbench.devices.gates import DeviceGates
from xcmosbench.interconnect.span import device_span_of_control
from xcmosbench.interconnect.wires import device_wire_metrics
from xcmosbench.circuits.alu import (alu32_metrics,
                                     default_style,
                                     pipeline_transform,
                                     pipelined_style)
from xcmosbench.circuits.throughput import throughput_density
from xcmosbench.cnn.benchmark import (association_benchmark,
                                      recall_stats)
from xcmosbench.cnn.templates import CnnConfig

from .results import (BENCHMARKS,
                      ResultRow,
                      ResultSet,
                      metric_unit)

lgr = logging.getLogger(__name__)

SUITES = {
    'alu': ('alu',),
    'throughput': ('throughput', 'alu_pipelined'),
    'wire': ('wire',),
    'span': ('span',),
    'cnn': ('cnn',),
    'all': BENCHMARKS,
}

# benchmark plotted by default, and its scatter axes
DEFAULT_AXES = {
    'alu': ('alu', 't_op', 'E_op'),
    'throughput': ('throughput', 'theta_capped', 'p_density_capped'),
    'wire': ('wire', 't_wire', 'E_wire'),
    'span': ('span', 'T_clk', 'n_gates'),
    'cnn': ('cnn', 't_assoc', 'E_assoc'),
    'all': ('alu', 't_op', 'E_op'),
}

OPTION_FIELDS = ('length', 'p_cap', 'activity')
DEVICE_FIELDS = ('V_dd', 'I_on', 'I_off', 'C_gate', 'A_dev', 't_p')
MAGNET_FIELDS = ('M_s', 'K_u', 'alpha', 'eta', 'T')


class BenchOptions(object):
    """
    Members:
    --------
    p_cap : float
        power density cap (W/m^2)
    length : float
        interconnect length (m)
    activity : float
        switching activity of static logic
    seed : int
        seed of the CNN patterns and probes
    cnn_config : CnnConfig
    patterns : np.ndarray or None
        stored CNN patterns; random ones when None
    netlist : Netlist or None
        adder netlist for every device; the per-style default when None
    """

    def __init__(
            self,
            p_cap=P_CAP_DEFAULT,
            length=WIRE_LENGTH_DEFAULT,
            activity=ACTIVITY_DEFAULT,
            seed=CNN_SEED,
            cnn_config=None,
            patterns=None,
            netlist=None
            ):
        self.p_cap = float(p_cap)
        self.length = float(length)
        self.activity = float(activity)
        self.seed = int(seed)
        self.cnn_config = cnn_config if cnn_config is not None else CnnConfig()
        self.patterns = patterns
        self.netlist = netlist
        self.validate()

    def __repr__(self):
        return 'BenchOptions(p_cap={p:g}, length={l:g}, activity={a:g}, seed={s})'.format(
            p=self.p_cap, l=self.length, a=self.activity, s=self.seed)

    def replace(self, **changes):
        new = copy.copy(self)
        for key, value in changes.items():
            if key not in new.__dict__:
                raise AttributeError('BenchOptions has no field "{k}"'.format(k=key))
            setattr(new, key, value)
        return new.validate()

    def validate(self):
        if not self.p_cap > 0:
            raise InvalidParameterError('Power density cap must be positive',
                                        expStr='> 0', gotStr=self.p_cap)
        if not self.length >= 0:
            raise InvalidParameterError('Wire length must be nonnegative',
                                        expStr='>= 0', gotStr=self.length)
        if not 0 <= self.activity <= 1:
            raise InvalidParameterError('Switching activity must be in [0, 1]',
                                        expStr='0 <= activity <= 1', gotStr=self.activity)
        return self


###   Benchmarks   ###

def _throughput_metrics(c, p_cap):
    tr = throughput_density(c, p_cap)
    return dict(
        theta_unconstrained=tr.theta_unconstrained,
        theta_capped=tr.theta_capped,
        p_density_capped=tr.p_density_capped,
        power_limited=float(tr.limited_by == LimitedBy.Power),
    )


def _alu(dev, lib, options):
    return alu32_metrics(DeviceGates(dev), default_style(dev.device_class),
                         activity=options.activity, netlist=options.netlist)


def alu_benchmark(dev, lib, options):
    c = _alu(dev, lib, options)
    return dict(t_op=c.t_op, E_op=c.E_op, A_circ=c.A_circ, P_leak=c.P_leak_total,
                p_density=c.p_density)


def throughput_benchmark(dev, lib, options):
    c = _alu(dev, lib, options)
    metrics = dict(t_period=c.t_period, E_op=c.E_op)
    metrics.update(_throughput_metrics(c, options.p_cap))
    return metrics


def pipelined_benchmark(dev, lib, options):
    style = pipelined_style(dev.device_class)
    c = pipeline_transform(alu32_metrics(DeviceGates(dev), style, activity=options.activity,
                                         netlist=options.netlist))
    metrics = dict(t_period=c.t_period, E_op=c.E_op, A_circ=c.A_circ)
    metrics.update(_throughput_metrics(c, options.p_cap))
    return metrics


def _require_wire(lib):
    if lib.wire is None:
        raise InvalidParameterError('The library has no interconnect wire parameters')
    return lib.wire


def wire_benchmark(dev, lib, options):
    delay, energy = device_wire_metrics(dev, _require_wire(lib), options.length)
    return dict(length=options.length, t_wire=delay, E_wire=energy)


def span_benchmark(dev, lib, options):
    span = device_span_of_control(dev, _require_wire(lib))
    return dict(T_clk=span.T_clk, l_max=span.l_max, n_gates=span.n_gates)


DEVICE_BENCHMARKS = {
    'alu': alu_benchmark,
    'alu_pipelined': pipelined_benchmark,
    'throughput': throughput_benchmark,
    'wire': wire_benchmark,
    'span': span_benchmark,
}


def _run_cnn(lib, options, rs):
    if not lib.cnn_models:
        return
    cfg = options.cnn_config
    stats = recall_stats(cfg, options.patterns, options.seed)
    for entry in sorted(lib.cnn_models, key=lambda m: m.name):
        if entry.device not in lib:
            rs.skip(entry.name, 'cnn', 'device "{d}" is not in the library'.format(
                d=entry.device))
            continue
        try:
            result = association_benchmark(
                lib[entry.device], entry.kind, cfg=cfg, extras=entry.extras,
                stats=stats, name=entry.name
            )
        except BenchmarkError as e:
            rs.skip(entry.name, 'cnn', str(e))
            continue
        rs.append(ResultRow(entry.name, 'cnn', dict(
            pixel_accuracy=result.pixel_accuracy,
            E_assoc=result.E_assoc,
            t_assoc=result.t_assoc,
            settle_steps=stats.settle_steps,
            passed=float(result.passed),
        )))


def run_suite(lib, suite='all', options=None):
    """
    Runs the benchmarks of 'suite' for every device of 'lib'.

    A device that cannot be benchmarked (wrong class for the circuit style,
    drive below the critical current, missing parameter...) is skipped with
    a warning and recorded in ResultSet.skipped.

    Parameters
    ----------
    lib : DeviceLibrary
    suite : str
        one of SUITES
    options : BenchOptions, optional

    Returns
    -------
    ResultSet
        rows ordered by (benchmark, device)
    """
    if suite not in SUITES:
        raise InvalidParameterError('Unknown suite %r', suite,
                                    expStr=', '.join(sorted(SUITES)), gotStr=suite)
    if options is None:
        options = BenchOptions()

    rs = ResultSet()
    devices = sorted(lib, key=lambda d: d.name)
    for benchmark in SUITES[suite]:
        if benchmark == 'cnn':
            _run_cnn(lib, options, rs)
            continue
        func = DEVICE_BENCHMARKS[benchmark]
        for dev in devices:
            try:
                metrics = func(dev, lib, options)
            except BenchmarkError as e:
                rs.skip(dev.name, benchmark, str(e))
                continue
            rs.append(ResultRow(dev.name, benchmark, metrics))
    lgr.info('{s} suite: {n} rows, {k} skipped'.format(s=suite, n=len(rs), k=len(rs.skipped)))
    return rs


###   Sweeps   ###

def check_sweep_field(field):
    """
    Raises InvalidParameterError unless 'field' can be swept
    """
    prefix, _, name = field.partition('.')
    if field in OPTION_FIELDS or field in DEVICE_FIELDS:
        return field
    if prefix == 'magnet' and name in MAGNET_FIELDS:
        return field
    if prefix == 'extras' and name:
        return field
    raise InvalidParameterError(
        'Cannot sweep %r', field,
        expStr='one of {f}, magnet.<{m}> or extras.<key>'.format(
            f=', '.join(OPTION_FIELDS + DEVICE_FIELDS), m='|'.join(MAGNET_FIELDS)),
        gotStr=field
    )


def parse_sweep(text):
    """
    Parses "field=start:stop:steps" into the field name and the values
    (steps values evenly spaced from start to stop, both included)
    """
    field, sep, values = text.partition('=')
    parts = values.split(':')
    if not sep or len(parts) != 3:
        raise InvalidParameterError('Sweeps are given as field=start:stop:steps',
                                    gotStr=text, expStr='field=start:stop:steps')
    try:
        start, stop = float(parts[0]), float(parts[1])
        steps = int(parts[2])
    except ValueError:
        raise InvalidParameterError('Sweep limits must be numbers and steps an integer',
                                    gotStr=text, expStr='field=start:stop:steps')
    if steps < 1:
        raise InvalidParameterError('A sweep needs at least one step', gotStr=steps,
                                    expStr='>= 1')
    return check_sweep_field(field.strip()), np.linspace(start, stop, steps)


def _swept_device(dev, field, value):
    prefix, _, name = field.partition('.')
    if prefix == 'magnet':
        if dev.magnet is None:
            return None
        new = dev.replace(magnet=dev.magnet.replace(**{name: value}))
    elif prefix == 'extras':
        new = dev.replace(extras=dict(dev.extras, **{name: value}))
    else:
        new = dev.replace(**{field: value})
    return new.validate()


def apply_sweep(lib, options, field, value):
    """
    Library and options with 'field' set to 'value'.  Devices the value
    does not apply to (no magnet) or makes invalid are left out, with a
    warning.
    """
    check_sweep_field(field)
    value = float(value)
    if field in OPTION_FIELDS:
        return lib, options.replace(**{field: value})

    devices = []
    for dev in lib:
        try:
            new = _swept_device(dev, field, value)
        except BenchmarkError as e:
            lgr.warning('Warning: {d} left out of the sweep at {f} = {v:g}: {e}'.format(
                d=dev.name, f=field, v=value, e=e))
            continue
        if new is None:
            lgr.warning('Warning: {d} has no magnet; left out of the {f} sweep'.format(
                d=dev.name, f=field))
            continue
        devices.append(new)
    return lib.with_devices(devices), options


def run_sweep(lib, suite, options, field, values):
    """
    Runs 'suite' once per value of 'field'; every row carries the swept
    value as the metric 'field'.

    Returns
    -------
    ResultSet
    """
    if options is None:
        options = BenchOptions()
    rs = ResultSet(sweep_field=field)
    for value in values:
        swept_lib, swept_options = apply_sweep(lib, options, field, value)
        part = run_suite(swept_lib, suite, swept_options)
        for row in part:
            row.add_metric(field, value, metric_unit(field))
        rs.extend(part)
    return rs
