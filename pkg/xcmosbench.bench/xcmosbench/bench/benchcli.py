#!/usr/bin/env python3
"""
Purpose
----
Command-line front end of xcmosbench: load a device library, run a
benchmark suite (optionally sweeping one parameter) and write the results
as CSV and as a log-log SVG scatter plot.

Usage
----
bench <suite> [--library <file>] [--p-cap W/cm2] [--length um]
      [--activity f] [--seed n] [--trials n] [--noise f]
      [--patterns <file> ...] [--netlist <file>]
      [--sweep field=start:stop:steps] [--csv <out>] [--svg <out>]
      [--x metric] [--y metric] [-v]

Without --csv the CSV goes to the standard output.

Exit codes: 0 success, 1 invalid parameters or library, 2 unreadable input,
3 internal error.

Author
----
xcmosbench developers

Dates
----
2026-10-16

References
----
The device library is --library, else $XCMOS_LIB, else the shipped default.

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

import argparse
import logging
import os
import sys

from xcmosbench.base.constants import (ACTIVITY_DEFAULT,
                                       CNN_NOISE_FRACTION,
                                       CNN_SEED,
                                       CNN_TRIALS,
                                       P_CAP_DEFAULT,
                                       WIRE_LENGTH_DEFAULT)
from xcmosbench.base.devicelib import load_device_library
from xcmosbench.base.errors import (BenchmarkError,
                                    LibraryParseError)
from xcmosbench.circuits.netlist import load_netlist
from xcmosbench.cnn.patterns import load_patterns
from xcmosbench.cnn.templates import CnnConfig

from .output import (emit_csv,
                     emit_svg_scatter)
from .runner import (DEFAULT_AXES,
                     SUITES,
                     BenchOptions,
                     parse_sweep,
                     run_suite,
                     run_sweep)

lgr = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3

# CLI units -> SI
W_PER_CM2 = 1e4
UM = 1e-6


def sweep_argument(text):
    try:
        return parse_sweep(text)
    except BenchmarkError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='bench',
        description='Benchmark beyond-CMOS devices: 32-bit ALU, throughput under a '
                    'power density cap, interconnects, span of control and CNN '
                    'associative memory'
    )
    parser.add_argument('suite', choices=sorted(SUITES), help='Benchmark suite')
    parser.add_argument('-l', '--library', required=False,
                        help='Device library (JSON). Default: $XCMOS_LIB or the shipped library')
    parser.add_argument('--netlist', required=False,
                        help='Adder netlist (JSON) used for every device')
    parser.add_argument('--p-cap', type=float, default=P_CAP_DEFAULT / W_PER_CM2,
                        help='Power density cap, in W/cm^2')
    parser.add_argument('--length', type=float, default=WIRE_LENGTH_DEFAULT / UM,
                        help='Interconnect length, in um')
    parser.add_argument('--activity', type=float, default=ACTIVITY_DEFAULT,
                        help='Switching activity of static logic')
    parser.add_argument('--seed', type=int, default=CNN_SEED,
                        help='Seed of the CNN patterns and noisy probes')
    parser.add_argument('--trials', type=int, default=CNN_TRIALS,
                        help='Number of CNN recall trials')
    parser.add_argument('--noise', type=float, default=CNN_NOISE_FRACTION,
                        help='Fraction of the probe pixels flipped')
    parser.add_argument('--patterns', nargs='+', required=False,
                        help='Pattern files to store in the CNN (space separated)')
    parser.add_argument('--sweep', type=sweep_argument, required=False,
                        help='field=start:stop:steps, values in SI units. Fields: '
                             'length, p_cap, activity, V_dd, I_on, I_off, C_gate, '
                             'A_dev, t_p, magnet.<field>, extras.<key>')
    parser.add_argument('--csv', required=False, help='Output CSV file')
    parser.add_argument('--svg', required=False, help='Output SVG scatter plot')
    parser.add_argument('--x', required=False, help='Metric on the x axis of the plot')
    parser.add_argument('--y', required=False, help='Metric on the y axis of the plot')
    parser.add_argument('-v', '--verbose', action='store_true', help='Print progress')
    return parser


def _make_parent_dir(path):
    odir = os.path.dirname(path)
    if odir and not os.path.exists(odir):
        os.makedirs(odir)


def run(args):
    lib = load_device_library(args.library)

    cfg = CnnConfig(n_trials=args.trials, noise_fraction=args.noise)
    patterns = None
    if args.patterns:
        patterns = load_patterns(args.patterns)
        cfg = cfg.replace(rows=patterns.shape[1], cols=patterns.shape[2])

    options = BenchOptions(
        p_cap=args.p_cap * W_PER_CM2,
        length=args.length * UM,
        activity=args.activity,
        seed=args.seed,
        cnn_config=cfg,
        patterns=patterns,
        netlist=load_netlist(args.netlist) if args.netlist else None,
    )

    if args.sweep:
        field, values = args.sweep
        rs = run_sweep(lib, args.suite, options, field, values)
    else:
        rs = run_suite(lib, args.suite, options)

    if args.csv:
        _make_parent_dir(args.csv)
        emit_csv(rs, args.csv)
    else:
        sys.stdout.write(emit_csv(rs))

    if args.svg:
        benchmark, x, y = DEFAULT_AXES[args.suite]
        if args.x or args.y:
            benchmark = None
        _make_parent_dir(args.svg)
        emit_svg_scatter(rs, args.x or x, args.y or y, args.svg, benchmark=benchmark,
                         title='{s} suite'.format(s=args.suite))
    return EXIT_OK


def main(argv=None):

    # Parse command line arguments (argparse exits with 2 on bad usage)
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format='%(levelname)s: %(message)s',
        stream=sys.stderr
    )

    try:
        return run(args)
    except (LibraryParseError, FileNotFoundError) as e:
        lgr.error(str(e))
        return EXIT_PARSE
    except BenchmarkError as e:
        lgr.error(str(e))
        return EXIT_VALIDATION
    except Exception:
        lgr.exception('Internal error')
        return EXIT_INTERNAL


# This is the standard boilerplate that calls the main() function.
if __name__ == '__main__':
    sys.exit(main())
