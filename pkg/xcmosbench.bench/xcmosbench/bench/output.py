"""
CSV tables and log-log SVG scatter plots of a ResultSet.

Both outputs are byte-for-byte reproducible: floats are written with 17
significant digits, and the SVG carries no date and fixed element ids.

The CSV follows RFC 4180 field quoting, but ends lines with LF rather
than CRLF.
"""

import logging
import math
import re

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
import pandas as pd

from xcmosbench.base.errors import UnknownMetricError

from .results import (METRIC_UNITS,
                      ResultRow,
                      ResultSet)

lgr = logging.getLogger(__name__)

CSV_FLOAT_FORMAT = '%.17g'
SVG_RC = {
    'svg.hashsalt': 'xcmosbench',
    'svg.fonttype': 'none',
}
HEADER_RE = re.compile(r'^(?P<name>.+) \[(?P<unit>.*)\]$')


def emit_csv(rs, path=None):
    """
    Writes the rows of 'rs', ordered by (benchmark, device), as CSV.  The
    header carries the SI unit of every metric, e.g. "t_op [s]".

    Returns the CSV text when no path is given.
    """
    df = rs.sorted().to_dataframe()
    return df.to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')


def read_csv(path):
    """
    Reads a CSV written by emit_csv back into a ResultSet
    """
    df = pd.read_csv(path, float_precision='round_trip', keep_default_na=False,
                     na_values=[''], dtype={'device': str, 'benchmark': str})
    columns = {}
    for column in df.columns[2:]:
        match = HEADER_RE.match(column)
        if match is None:
            raise UnknownMetricError('Column %r has no unit', column,
                                     expStr='<metric> [<unit>]', gotStr=column)
        columns[column] = (match.group('name'), match.group('unit'))

    rs = ResultSet()
    for record in df.to_dict('records'):
        metrics, units = {}, {}
        for column, (name, unit) in columns.items():
            value = record[column]
            if not (isinstance(value, float) and math.isnan(value)):
                metrics[name] = value
                units[name] = unit
        rs.append(ResultRow(record['device'], record['benchmark'], metrics, units))
    return rs


def _check_metric(rs, name):
    available = rs.metric_names()
    if name in available or (not available and name in METRIC_UNITS):
        return
    raise UnknownMetricError(
        'Unknown metric %r', name,
        expStr=', '.join(available or sorted(METRIC_UNITS)), gotStr=name
    )


def preferred_corner(xs, ys):
    """
    Lower-left decade corner of the points: lowest delay and energy
    """
    return (10.0 ** math.floor(math.log10(min(xs))),
            10.0 ** math.floor(math.log10(min(ys))))


def emit_svg_scatter(rs, x, y, path, benchmark=None, title=None):
    """
    Log-log scatter plot of metric 'y' against metric 'x', one labeled
    marker per row, with a red star on the preferred corner.

    Parameters
    ----------
    rs : ResultSet
    x, y : str
        metric names
    path : str or Path
        output SVG file
    benchmark : str, optional
        plot only the rows of this benchmark
    title : str, optional
    """
    _check_metric(rs, x)
    _check_metric(rs, y)
    selected = rs.sorted().select(benchmark)
    units = rs.units()

    points = []
    for row in selected:
        if x not in row.metrics or y not in row.metrics:
            continue
        xv, yv = row.metrics[x], row.metrics[y]
        if xv <= 0 or yv <= 0:
            lgr.warning('Warning: {d} ({b}) has {x} = {xv:g}, {y} = {yv:g}; '
                        'not shown on a log scale'.format(d=row.device, b=row.benchmark,
                                                          x=x, xv=xv, y=y, yv=yv))
            continue
        points.append((selected.label(row), xv, yv))

    with matplotlib.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(8, 6))
        ax.set_xscale('log')
        ax.set_yscale('log')
        for label, xv, yv in points:
            ax.plot(xv, yv, 'o', color='tab:blue')
            ax.annotate(label, (xv, yv), textcoords='offset points', xytext=(4, 4),
                        fontsize=8)
        if points:
            x0, y0 = preferred_corner([p[1] for p in points], [p[2] for p in points])
            ax.plot(x0, y0, '*', color='red', markersize=14)
        else:
            ax.set_xlim(1, 10)
            ax.set_ylim(1, 10)
        ax.set_xlabel('{m} [{u}]'.format(m=x, u=units.get(x, METRIC_UNITS.get(x, '-'))))
        ax.set_ylabel('{m} [{u}]'.format(m=y, u=units.get(y, METRIC_UNITS.get(y, '-'))))
        if title:
            ax.set_title(title)
        ax.grid(True, which='major', alpha=0.3)
        fig.savefig(path, format='svg', metadata={'Date': None})
    plt.close(fig)
    lgr.info('Wrote {n} points to {p}'.format(n=len(points), p=path))
