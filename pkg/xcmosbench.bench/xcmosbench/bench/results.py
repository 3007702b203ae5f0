"""
Rows of benchmark results, with SI units per metric.
"""

import logging
import math

import pandas as pd

from xcmosbench.base.errors import InvalidParameterError

lgr = logging.getLogger(__name__)

# output order
BENCHMARKS = ('alu', 'alu_pipelined', 'throughput', 'wire', 'span', 'cnn')

METRIC_UNITS = {
    # alu, alu_pipelined
    't_op': 's',
    't_period': 's',
    'E_op': 'J',
    'A_circ': 'm^2',
    'P_leak': 'W',
    'p_density': 'W/m^2',
    # throughput
    'theta_unconstrained': '1/(s*m^2)',
    'theta_capped': '1/(s*m^2)',
    'p_density_capped': 'W/m^2',
    'power_limited': '-',
    # wire
    'length': 'm',
    't_wire': 's',
    'E_wire': 'J',
    # span
    'T_clk': 's',
    'l_max': 'm',
    'n_gates': '-',
    # cnn
    'pixel_accuracy': '-',
    'E_assoc': 'J',
    't_assoc': 's',
    'settle_steps': '-',
    'passed': '-',
    # swept fields
    'p_cap': 'W/m^2',
    'activity': '-',
    'V_dd': 'V',
    'I_on': 'A',
    'I_off': 'A',
    'C_gate': 'F',
    'A_dev': 'm^2',
    't_p': 's',
    'magnet.M_s': 'A/m',
    'magnet.K_u': 'J/m^3',
    'magnet.alpha': '-',
    'magnet.eta': '-',
    'magnet.T': 'K',
}


def metric_unit(name):
    return METRIC_UNITS.get(name, '-')


class ResultRow(object):
    """
    Members:
    --------
    device : str
        device name (cost model name for the cnn benchmark)
    benchmark : str
        one of BENCHMARKS
    metrics : dict
        metric name -> float
    units : dict
        metric name -> SI unit
    """

    def __init__(self, device, benchmark, metrics, units=None):
        self.device = device
        self.benchmark = benchmark
        self.metrics = {}
        self.units = {}
        for name, value in metrics.items():
            self.add_metric(name, value, (units or {}).get(name))
        if benchmark not in BENCHMARKS:
            raise InvalidParameterError('Unknown benchmark %r', benchmark,
                                        expStr=', '.join(BENCHMARKS), gotStr=benchmark)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.__dict__ == other.__dict__
        else:
            return False

    def __repr__(self):
        return 'ResultRow({d!r}, {b!r}, {m})'.format(d=self.device, b=self.benchmark,
                                                    m=self.metrics)

    def add_metric(self, name, value, unit=None):
        value = float(value)
        if not math.isfinite(value):
            raise InvalidParameterError(
                'Metric "{n}" of %r is not finite'.format(n=name), self.device,
                expStr='a finite number', gotStr=value
            )
        self.metrics[name] = value
        self.units[name] = unit if unit is not None else metric_unit(name)


class ResultSet(object):
    """
    Ordered collection of ResultRows, plus the (device, benchmark) pairs
    that were skipped.

    Members:
    --------
    rows : list of ResultRow
    skipped : list of (device, benchmark, reason)
    sweep_field : str or None
        name of the swept parameter, if the rows come from a sweep
    """

    def __init__(self, rows=None, sweep_field=None):
        self.rows = []
        self.skipped = []
        self.sweep_field = sweep_field
        for row in rows or []:
            self.append(row)

    def __eq__(self, other):
        if isinstance(other, self.__class__):
            return self.rows == other.rows
        else:
            return False

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __repr__(self):
        return 'ResultSet({n} rows, {s} skipped)'.format(n=len(self.rows), s=len(self.skipped))

    def append(self, row):
        units = self.units()
        for name, unit in row.units.items():
            if units.get(name, unit) != unit:
                raise InvalidParameterError(
                    'Inconsistent units for "{n}"'.format(n=name),
                    expStr=units[name], gotStr=unit
                )
        self.rows.append(row)

    def extend(self, other):
        for row in other:
            self.append(row)
        self.skipped.extend(other.skipped)

    def skip(self, device, benchmark, reason):
        lgr.warning('Warning: skipping {d} in the {b} benchmark: {r}'.format(
            d=device, b=benchmark, r=reason))
        self.skipped.append((device, benchmark, reason))

    def metric_names(self):
        """
        Names of all the metrics, in order of first appearance
        """
        names = []
        for row in self.rows:
            names.extend(n for n in row.metrics if n not in names)
        return names

    def units(self):
        units = {}
        for row in self.rows:
            units.update(row.units)
        return units

    def devices(self):
        return sorted(set(row.device for row in self.rows))

    def select(self, benchmark=None):
        """
        ResultSet with the rows of one benchmark (all of them for None)
        """
        rows = [row for row in self.rows if benchmark is None or row.benchmark == benchmark]
        return ResultSet(rows, sweep_field=self.sweep_field)

    def sorted(self):
        """
        Rows ordered by (benchmark, device).  The sort is stable, so swept
        rows keep the order of the sweep.
        """
        rows = sorted(self.rows, key=lambda r: (BENCHMARKS.index(r.benchmark), r.device))
        new = ResultSet(rows, sweep_field=self.sweep_field)
        new.skipped = list(self.skipped)
        return new

    def label(self, row):
        """
        Text identifying a row on a plot
        """
        if self.sweep_field is None or self.sweep_field not in row.metrics:
            return row.device
        return '{d} {f}={v:.3g}'.format(d=row.device, f=self.sweep_field,
                                        v=row.metrics[self.sweep_field])

    def to_dataframe(self):
        """
        One line per row: device, benchmark and one "<metric> [<unit>]"
        column per metric (empty where a row lacks the metric)
        """
        units = self.units()
        names = self.metric_names()
        columns = ['device', 'benchmark'] + [
            '{n} [{u}]'.format(n=n, u=units[n]) for n in names
        ]
        records = []
        for row in self.rows:
            record = [row.device, row.benchmark]
            record.extend(row.metrics.get(n, math.nan) for n in names)
            records.append(record)
        df = pd.DataFrame(records, columns=columns)
        return df.astype({c: float for c in columns[2:]})
